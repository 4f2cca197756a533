import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from coverify.world import bundled_scenario_path, load_scenario


@pytest.fixture(scope="session")
def handover():
    return load_scenario(bundled_scenario_path("handover"))


@pytest.fixture(scope="session")
def handover_stop():
    return load_scenario(bundled_scenario_path("handover_stop"))


@pytest.fixture(scope="session")
def handover_point():
    return load_scenario(bundled_scenario_path("handover_point"))


@pytest.fixture(scope="session")
def handover_mini():
    return load_scenario(bundled_scenario_path("handover_mini"))

"""CLI: exit-code contract, artifact files, determinism."""

import xml.etree.ElementTree as ET

import pytest

from coverify.cli import (
    EXIT_COUNTEREXAMPLE,
    EXIT_INPUT_ERROR,
    EXIT_SAFE,
    EXIT_UNCONFIRMED,
    RunConfig,
    main,
    run_classify,
    run_export,
    run_verify,
)
from coverify.sat import read_dimacs, solve
from coverify.traceio import read_trace
from coverify.world import bundled_scenario_path, compile_scenario, load_scenario

HANDOVER = str(bundled_scenario_path("handover"))
HANDOVER_STOP = str(bundled_scenario_path("handover_stop"))
HANDOVER_POINT = str(bundled_scenario_path("handover_point"))
HANDOVER_MINI = str(bundled_scenario_path("handover_mini"))


@pytest.fixture
def trace_file(tmp_path):
    out = tmp_path / "handover.trace"
    code = run_verify(RunConfig(scenario=HANDOVER, out=str(out)))
    assert code == EXIT_COUNTEREXAMPLE
    return out


class TestVerify:
    def test_unmitigated_counterexample(self, tmp_path, capsys):
        out = tmp_path / "t.trace"
        assert run_verify(RunConfig(scenario=HANDOVER, out=str(out))) == EXIT_COUNTEREXAMPLE
        assert "UNSAFE" in capsys.readouterr().out
        assert out.exists()

    def test_trace_file_reparses(self, trace_file):
        scenario = load_scenario(HANDOVER)
        symbols = compile_scenario(scenario).symbols
        trace = read_trace(trace_file.read_text(), symbols)
        assert trace.bound == scenario.bound

    def test_mitigated_scenario_safe(self, capsys):
        assert run_verify(RunConfig(scenario=HANDOVER_STOP)) == EXIT_SAFE
        assert capsys.readouterr().out.strip() == "SAFE"

    def test_missing_file_is_input_error(self, capsys):
        assert run_verify(RunConfig(scenario="missing.scn")) == EXIT_INPUT_ERROR
        assert "error" in capsys.readouterr().err

    def test_invalid_scenario_is_input_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.scn"
        bad.write_text("[layout]\nloc L1 box 0 0 0\n")
        assert run_verify(RunConfig(scenario=str(bad))) == EXIT_INPUT_ERROR

    def test_bound_override(self, tmp_path):
        out = tmp_path / "b0.trace"
        code = run_verify(RunConfig(scenario=HANDOVER_MINI, bound=0, out=str(out)))
        # at bound 0 the task cannot complete, so the model has no trace
        assert code == EXIT_SAFE

    def test_byte_identical_traces_across_runs(self, tmp_path):
        first, second = tmp_path / "a.trace", tmp_path / "b.trace"
        run_verify(RunConfig(scenario=HANDOVER, out=str(first)))
        run_verify(RunConfig(scenario=HANDOVER, out=str(second)))
        assert first.read_bytes() == second.read_bytes()


class TestClassify:
    def test_cube_cells_report_possible_and_exit_3(self, tmp_path, trace_file):
        out = tmp_path / "report.csv"
        cfg = RunConfig(scenario=HANDOVER, fmt="csv", out=str(out), samples=20_000, seed=11)
        assert run_classify(cfg, str(trace_file)) == EXIT_UNCONFIRMED
        assert "POSSIBLE" in out.read_text()

    def test_point_cells_all_confirmed_exit_0(self, tmp_path):
        trace = tmp_path / "point.trace"
        assert run_verify(RunConfig(scenario=HANDOVER_POINT, out=str(trace))) == EXIT_COUNTEREXAMPLE
        cfg = RunConfig(scenario=HANDOVER_POINT, out=str(tmp_path / "r.csv"), fmt="csv")
        assert run_classify(cfg, str(trace)) == EXIT_SAFE

    def test_mismatched_trace_is_input_error(self, tmp_path, trace_file, capsys):
        cfg = RunConfig(scenario=HANDOVER_MINI)
        assert run_classify(cfg, str(trace_file)) == EXIT_INPUT_ERROR
        assert "error" in capsys.readouterr().err

    def test_text_format_prints(self, capsys, trace_file):
        cfg = RunConfig(scenario=HANDOVER, samples=5_000)
        assert run_classify(cfg, str(trace_file)) == EXIT_UNCONFIRMED
        assert "summary:" in capsys.readouterr().out

    def test_svg_report(self, tmp_path, trace_file):
        out = tmp_path / "report.svg"
        cfg = RunConfig(scenario=HANDOVER, fmt="svg", out=str(out), samples=5_000)
        run_classify(cfg, str(trace_file))
        ET.fromstring(out.read_text())

    def test_csv_deterministic_for_fixed_seed(self, tmp_path, trace_file):
        outs = []
        for name in ("x.csv", "y.csv"):
            out = tmp_path / name
            cfg = RunConfig(scenario=HANDOVER, fmt="csv", out=str(out), samples=10_000, seed=3)
            run_classify(cfg, str(trace_file))
            outs.append(out.read_bytes())
        assert outs[0] == outs[1]


class TestExport:
    def test_cnf_round_trips_through_dimacs(self, tmp_path):
        out = tmp_path / "model.cnf"
        assert run_export(RunConfig(scenario=HANDOVER_MINI, out=str(out)), "cnf") == EXIT_SAFE
        cnf = read_dimacs(out.read_text())
        assert solve(cnf).satisfiable  # the unmitigated model has a counterexample

    def test_trace_table_lists_instant_rows(self, tmp_path, trace_file):
        out = tmp_path / "table.txt"
        cfg = RunConfig(scenario=HANDOVER, out=str(out))
        assert run_export(cfg, "trace-table", str(trace_file)) == EXIT_SAFE
        lines = out.read_text().splitlines()
        scenario = load_scenario(HANDOVER)
        assert len(lines) == scenario.bound + 2  # header + one row per instant

    def test_timeline_svg_has_band_per_symbol(self, tmp_path, trace_file):
        out = tmp_path / "timeline.svg"
        cfg = RunConfig(scenario=HANDOVER, out=str(out))
        assert run_export(cfg, "timeline", str(trace_file)) == EXIT_SAFE
        root = ET.fromstring(out.read_text())
        texts = {el.text for el in root.iter() if el.tag.endswith("text")}
        scenario = load_scenario(HANDOVER)
        symbols = compile_scenario(scenario).symbols
        for prop in symbols.propositions:
            assert prop.name in texts

    def test_timeline_without_trace_is_an_error(self, capsys):
        assert run_export(RunConfig(scenario=HANDOVER), "timeline") == EXIT_INPUT_ERROR
        assert "needs --trace" in capsys.readouterr().err


class TestMain:
    def test_verify_dispatch(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        assert main(["verify", HANDOVER_STOP]) == EXIT_SAFE

    def test_oracle_dispatch(self, monkeypatch, tmp_path, capsys):
        monkeypatch.chdir(tmp_path)
        assert main(["oracle", HANDOVER_MINI]) == EXIT_COUNTEREXAMPLE
        assert "UNSAFE" in capsys.readouterr().out

    def test_oracle_rejects_long_travel_times(self, capsys):
        assert main(["oracle", HANDOVER]) == EXIT_INPUT_ERROR
        assert "unit travel" in capsys.readouterr().err

    def test_classify_dispatch(self, tmp_path, monkeypatch, capsys):
        monkeypatch.chdir(tmp_path)
        assert main(["verify", HANDOVER_POINT, "--out", "p.trace"]) == EXIT_COUNTEREXAMPLE
        code = main(["classify", HANDOVER_POINT, "p.trace", "--samples", "2000"])
        assert code == EXIT_SAFE

    def test_every_invocation_ends_in_a_contract_code(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        codes = {
            main(["verify", HANDOVER_STOP]),
            main(["verify", HANDOVER, "--out", "t.trace"]),
            main(["verify", "nope.scn"]),
            main(["classify", HANDOVER, "t.trace", "--samples", "2000"]),
        }
        assert codes == {EXIT_SAFE, EXIT_COUNTEREXAMPLE, EXIT_INPUT_ERROR, EXIT_UNCONFIRMED}

"""Trace file round trips and validation."""

import pytest

from coverify.logic import SymbolTable, Trace
from coverify.traceio import TraceFormatError, read_trace, write_trace
from coverify.world import compile_scenario, verify


@pytest.fixture
def symbols():
    table = SymbolTable()
    table.add_proposition("start")
    table.add_proposition("stop")
    table.add_variable("p_x", ("L1", "L2"))
    return table


@pytest.fixture
def trace():
    return Trace(
        2,
        {"start": (True, False, False), "stop": (False, False, True)},
        {"p_x": ("L1", "L1", "L2")},
    )


def test_write_format(trace):
    assert write_trace(trace) == (
        "# bound 2\n"
        "# vars start stop p_x\n"
        "0 1 0 L1\n"
        "1 0 0 L1\n"
        "2 0 1 L2\n"
    )


def test_round_trip_with_symbols(trace, symbols):
    assert read_trace(write_trace(trace), symbols) == trace


def test_round_trip_without_symbols_on_boolean_free_domains(trace):
    # L1/L2 values are not 0/1, so column inference reconstructs this exactly
    assert read_trace(write_trace(trace)) == trace


def test_round_trip_of_a_real_counterexample(handover_mini):
    result = verify(handover_mini)
    symbols = compile_scenario(handover_mini).symbols
    assert read_trace(write_trace(result.trace), symbols) == result.trace


def test_numeric_domain_needs_symbols():
    # an all-0/1 numeric variable column is indistinguishable from a
    # proposition without the table; with it, the kind is exact
    table = SymbolTable()
    table.add_variable("risk", ("0", "1", "2"))
    tr = Trace(1, {}, {"risk": ("0", "1")})
    text = write_trace(tr)
    assert read_trace(text, table) == tr
    bare = read_trace(text)
    assert "risk" in bare.propositions  # documented inference fallback


class TestErrors:
    def test_missing_headers(self):
        with pytest.raises(TraceFormatError, match="header"):
            read_trace("0 1\n")

    def test_bound_row_mismatch(self):
        with pytest.raises(TraceFormatError, match="instant rows"):
            read_trace("# bound 2\n# vars p\n0 1\n1 0\n")

    def test_non_consecutive_instants(self):
        with pytest.raises(TraceFormatError, match="consecutive"):
            read_trace("# bound 1\n# vars p\n0 1\n2 0\n")

    def test_field_count(self):
        with pytest.raises(TraceFormatError, match="fields"):
            read_trace("# bound 0\n# vars p q\n0 1\n")

    def test_undeclared_symbol(self, symbols):
        with pytest.raises(TraceFormatError, match="not declared"):
            read_trace("# bound 0\n# vars ghost\n0 1\n", symbols)

    def test_value_outside_domain(self, symbols):
        with pytest.raises(TraceFormatError, match="outside the domain"):
            read_trace("# bound 0\n# vars p_x\n0 L9\n", symbols)

    def test_bad_proposition_value(self, symbols):
        with pytest.raises(TraceFormatError, match="non-boolean"):
            read_trace("# bound 0\n# vars start\n0 yes\n", symbols)

"""Formula grammar: structure, precedence, and error positions."""

import pytest

from coverify.logic import (
    Alw,
    And,
    Atom,
    Dist,
    Eq,
    EqVar,
    Implies,
    LeConst,
    Not,
    Or,
    Som,
    SymbolTable,
)
from coverify.parsing import ParseError, parse_formula


@pytest.fixture
def symbols():
    table = SymbolTable()
    table.add_proposition("start")
    table.add_proposition("stop")
    table.add_variable("p_g", ("L1", "L2", "L3"))
    table.add_variable("p_a", ("L1", "L2", "L3"))
    table.add_variable("risk", ("0", "1", "2"))
    return table


def test_movement_formula_ast(symbols):
    f = parse_formula("Alw(start -> Dist(stop,3) & !(start & stop))", symbols)
    start, stop = Atom("start"), Atom("stop")
    assert f == Alw(Implies(start, And(Dist(stop, 3), Not(And(start, stop)))))


def test_single_atom(symbols):
    assert parse_formula("start", symbols) == Atom("start")


def test_som_of_equality(symbols):
    assert parse_formula("Som(p_g = L3)", symbols) == Som(Eq("p_g", "L3"))


def test_variable_equality(symbols):
    assert parse_formula("p_g = p_a", symbols) == EqVar("p_g", "p_a")


def test_le_const(symbols):
    assert parse_formula("risk <= 1", symbols) == LeConst("risk", 1)


def test_negative_dist_offset(symbols):
    assert parse_formula("Dist(start, -2)", symbols) == Dist(Atom("start"), -2)


def test_precedence_not_binds_tightest(symbols):
    f = parse_formula("!start & stop", symbols)
    assert f == And(Not(Atom("start")), Atom("stop"))


def test_precedence_and_over_or(symbols):
    f = parse_formula("start | stop & start", symbols)
    assert f == Or(Atom("start"), And(Atom("stop"), Atom("start")))


def test_precedence_or_over_implies(symbols):
    f = parse_formula("start | stop -> stop", symbols)
    assert f == Implies(Or(Atom("start"), Atom("stop")), Atom("stop"))


def test_implies_right_associative(symbols):
    f = parse_formula("start -> stop -> start", symbols)
    assert f == Implies(Atom("start"), Implies(Atom("stop"), Atom("start")))


def test_parentheses_override(symbols):
    f = parse_formula("(start -> stop) -> start", symbols)
    assert f == Implies(Implies(Atom("start"), Atom("stop")), Atom("start"))


def test_whitespace_and_newlines(symbols):
    f = parse_formula("Alw(\n  start ->\n  stop\n)", symbols)
    assert f == Alw(Implies(Atom("start"), Atom("stop")))


class TestErrors:
    def test_undeclared_identifier(self, symbols):
        with pytest.raises(ParseError, match="undeclared identifier 'ghost'"):
            parse_formula("start & ghost", symbols)

    def test_error_carries_position(self, symbols):
        with pytest.raises(ParseError) as err:
            parse_formula("start &\n ghost", symbols)
        assert err.value.line == 2
        assert err.value.column == 2

    def test_dist_offset_must_be_literal(self, symbols):
        with pytest.raises(ParseError, match="integer literal"):
            parse_formula("Dist(start, stop)", symbols)

    def test_unbalanced_parenthesis(self, symbols):
        with pytest.raises(ParseError, match="expected"):
            parse_formula("Alw(start", symbols)

    def test_trailing_garbage(self, symbols):
        with pytest.raises(ParseError, match="trailing"):
            parse_formula("start stop", symbols)

    def test_equality_on_proposition(self, symbols):
        with pytest.raises(ParseError, match="not a finite variable"):
            parse_formula("start = L1", symbols)

    def test_value_outside_domain(self, symbols):
        with pytest.raises(ParseError, match="neither a domain value"):
            parse_formula("p_g = L9", symbols)

    def test_le_on_symbolic_domain(self, symbols):
        with pytest.raises(ParseError, match="non-integer"):
            parse_formula("p_g <= 2", symbols)

    def test_bare_variable_is_rejected(self, symbols):
        with pytest.raises(ParseError, match="needs '=' or '<='"):
            parse_formula("p_g", symbols)

    def test_stray_character(self, symbols):
        with pytest.raises(ParseError, match="unexpected character"):
            parse_formula("start % stop", symbols)

    def test_empty_input(self, symbols):
        with pytest.raises(ParseError):
            parse_formula("", symbols)


def test_parse_evaluate_round_trip(symbols):
    # Parsed operators mean what the evaluator thinks they mean.
    from coverify.logic import Trace, evaluate

    tr = Trace(
        3,
        {"start": (True, False, False, False), "stop": (False, False, False, True)},
        {"p_g": ("L1", "L2", "L3", "L3"), "p_a": ("L3", "L2", "L1", "L3"), "risk": ("0", "1", "2", "0")},
    )
    cases = [
        ("start -> Dist(stop, 3)", 0, True),
        ("Som(p_g = p_a)", 2, True),
        ("Alw(risk <= 1)", 0, False),
        ("Som(!(risk <= 1))", 0, True),
    ]
    for text, t, expected in cases:
        assert evaluate(parse_formula(text, symbols), tr, t) is expected

"""Bounded satisfiability encoding: formula over k+1 instants -> CNF and back.

Every declared proposition gets one SAT variable per instant; every finite
variable gets a one-hot block per instant with exactly-one constraints.
Every composite subformula occurrence gets one definition variable per
instant, constrained by full bi-implications, so any model assigns every
predicate its exact truth value at every instant.  ``Alw``/``Som`` values do
not depend on the instant, so their instant-0 copy carries the quantifier
definition and the other instants are chained equal to it, which keeps the
clause count linear in k.

A formula is satisfiable over bound k iff the CNF conjoined with the unit
clause asserting the root at instant 0 is satisfiable; ``decode`` turns a
model back into a trace and ``check`` glues encode/solve/decode together and
re-checks every witness against the evaluator.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import sat
from .logic import (
    Alw,
    And,
    Atom,
    Dist,
    Eq,
    EqVar,
    FiniteVariable,
    Formula,
    Implies,
    LeConst,
    Not,
    Or,
    Proposition,
    Som,
    SymbolTable,
    Trace,
    evaluate,
    free_symbols,
)

__all__ = ["DEFAULT_BOUND", "VarMap", "CheckResult", "EncodingError", "encode", "decode", "check"]

DEFAULT_BOUND = 30


class EncodingError(RuntimeError):
    """A decoded model violates encoder-owned structure (an internal bug)."""


@dataclass
class VarMap:
    """Injective map from (symbol|subformula occurrence, instant) to SAT variables."""

    bound: int
    prop_vars: dict[tuple[str, int], int]
    value_vars: dict[tuple[str, int, str], int]
    node_vars: dict[tuple[int, int], int]
    num_vars: int

    def prop_var(self, name: str, t: int) -> int:
        return self.prop_vars[(name, t)]

    def value_var(self, name: str, t: int, value: str) -> int:
        return self.value_vars[(name, t, value)]


@dataclass(frozen=True)
class CheckResult:
    """A witness trace satisfying the formula at instant 0, or unsatisfiable."""

    trace: Trace | None

    @property
    def satisfiable(self) -> bool:
        return self.trace is not None


class _Encoder:
    def __init__(self, symbols: SymbolTable, k: int):
        if k < 0:
            raise ValueError("bound must be >= 0")
        self.symbols = symbols
        self.k = k
        self.next_var = 1
        self.prop_vars: dict[tuple[str, int], int] = {}
        self.value_vars: dict[tuple[str, int, str], int] = {}
        self.node_vars: dict[tuple[int, int], int] = {}
        self.clauses: list[tuple[int, ...]] = []
        self._node_ids: dict[int, int] = {}
        self._defined: set[int] = set()

        for prop in symbols.propositions:
            for t in range(k + 1):
                self.prop_vars[(prop.name, t)] = self._fresh()
        for var in symbols.variables:
            for t in range(k + 1):
                for value in var.domain:
                    self.value_vars[(var.name, t, value)] = self._fresh()
        self._emit_exactly_one()

    def _fresh(self) -> int:
        v = self.next_var
        self.next_var += 1
        return v

    def _emit_exactly_one(self) -> None:
        for var in self.symbols.variables:
            for t in range(self.k + 1):
                bits = [self.value_vars[(var.name, t, value)] for value in var.domain]
                self.clauses.append(tuple(bits))
                for i in range(len(bits)):
                    for j in range(i + 1, len(bits)):
                        self.clauses.append((-bits[i], -bits[j]))

    def _variable(self, name: str) -> FiniteVariable:
        symbol = self.symbols.lookup(name)
        if not isinstance(symbol, FiniteVariable):
            raise ValueError(f"{name!r} is not a declared finite variable")
        return symbol

    def _node_key(self, f: Formula) -> int:
        key = self._node_ids.get(id(f))
        if key is None:
            key = len(self._node_ids)
            self._node_ids[id(f)] = key
        return key

    def literal(self, f: Formula, t: int) -> int:
        """Signed literal equivalent to 'f holds at t', defining clauses emitted once."""
        if isinstance(f, Atom):
            symbol = self.symbols.lookup(f.name)
            if not isinstance(symbol, Proposition):
                raise ValueError(f"{f.name!r} is not a declared proposition")
            return self.prop_vars[(f.name, t)]
        if isinstance(f, Eq):
            var = self._variable(f.var)
            if f.value not in var.domain:
                raise ValueError(f"{f.value!r} is not in the domain of {f.var!r}")
            return self.value_vars[(f.var, t, f.value)]
        return self._node_literal(f, t)

    def _node_literal(self, f: Formula, t: int) -> int:
        key = self._node_key(f)
        if key not in self._defined:
            self._defined.add(key)
            for u in range(self.k + 1):
                self.node_vars[(key, u)] = self._fresh()
            self._define(f, key)
        return self.node_vars[(key, t)]

    def _define(self, f: Formula, key: int) -> None:
        k = self.k
        own = [self.node_vars[(key, t)] for t in range(k + 1)]

        if isinstance(f, EqVar):
            left, right = self._variable(f.left), self._variable(f.right)
            shared = [value for value in left.domain if value in set(right.domain)]
            if not shared:
                raise ValueError(
                    f"variables {f.left!r} and {f.right!r} have disjoint domains"
                )
            for t in range(k + 1):
                e = own[t]
                for value in left.domain:
                    a = self.value_vars[(f.left, t, value)]
                    if value in set(right.domain):
                        b = self.value_vars[(f.right, t, value)]
                        self.clauses.append((-e, -a, b))
                        self.clauses.append((e, -a, -b))
                    else:
                        self.clauses.append((-e, -a))
        elif isinstance(f, LeConst):
            var = self._variable(f.var)
            try:
                sat_values = [value for value in var.domain if int(value) <= f.bound]
            except ValueError:
                raise ValueError(
                    f"variable {f.var!r} has non-integer domain values; <= not applicable"
                ) from None
            for t in range(k + 1):
                e = own[t]
                bits = [self.value_vars[(f.var, t, value)] for value in sat_values]
                self.clauses.append((-e, *bits))
                for bit in bits:
                    self.clauses.append((e, -bit))
        elif isinstance(f, Not):
            for t in range(k + 1):
                sub = self.literal(f.operand, t)
                self.clauses.append((-own[t], -sub))
                self.clauses.append((own[t], sub))
        elif isinstance(f, And):
            for t in range(k + 1):
                a, b = self.literal(f.left, t), self.literal(f.right, t)
                self.clauses.append((-own[t], a))
                self.clauses.append((-own[t], b))
                self.clauses.append((own[t], -a, -b))
        elif isinstance(f, Or):
            for t in range(k + 1):
                a, b = self.literal(f.left, t), self.literal(f.right, t)
                self.clauses.append((-own[t], a, b))
                self.clauses.append((own[t], -a))
                self.clauses.append((own[t], -b))
        elif isinstance(f, Implies):
            for t in range(k + 1):
                a, b = self.literal(f.left, t), self.literal(f.right, t)
                self.clauses.append((-own[t], -a, b))
                self.clauses.append((own[t], a))
                self.clauses.append((own[t], -b))
        elif isinstance(f, Dist):
            for t in range(k + 1):
                target = t + f.offset
                if 0 <= target <= k:
                    sub = self.literal(f.operand, target)
                    self.clauses.append((-own[t], sub))
                    self.clauses.append((own[t], -sub))
                else:
                    self.clauses.append((-own[t],))
        elif isinstance(f, (Alw, Som)):
            subs = [self.literal(f.operand, u) for u in range(k + 1)]
            head = own[0]
            if isinstance(f, Alw):
                for sub in subs:
                    self.clauses.append((-head, sub))
                self.clauses.append((head, *[-sub for sub in subs]))
            else:
                self.clauses.append((-head, *subs))
                for sub in subs:
                    self.clauses.append((head, -sub))
            # Quantifiers are instant-independent: chain the other copies.
            for t in range(1, k + 1):
                self.clauses.append((-own[t], head))
                self.clauses.append((own[t], -head))
        else:
            raise TypeError(f"not a formula: {f!r}")


def encode(f: Formula, symbols: SymbolTable, k: int) -> tuple[sat.CnfFormula, VarMap]:
    """CNF equisatisfiable with 'some trace over [0, k] satisfies f at instant 0'."""
    for name in sorted(free_symbols(f)):
        if name not in symbols:
            raise ValueError(f"undeclared symbol {name!r} in formula")
    enc = _Encoder(symbols, k)
    root = enc.literal(f, 0)
    enc.clauses.append((root,))
    cnf = sat.CnfFormula(enc.next_var - 1, tuple(enc.clauses))
    vm = VarMap(k, enc.prop_vars, enc.value_vars, enc.node_vars, cnf.num_vars)
    return cnf, vm


def decode(model: dict[int, bool], vm: VarMap, symbols: SymbolTable, k: int) -> Trace:
    """Read a trace off a SAT model; one-hot violations signal an encoder bug."""
    props: dict[str, tuple[bool, ...]] = {}
    for prop in symbols.propositions:
        props[prop.name] = tuple(model[vm.prop_var(prop.name, t)] for t in range(k + 1))
    variables: dict[str, tuple[str, ...]] = {}
    for var in symbols.variables:
        values = []
        for t in range(k + 1):
            hot = [value for value in var.domain if model[vm.value_var(var.name, t, value)]]
            if len(hot) != 1:
                raise EncodingError(
                    f"one-hot block of {var.name!r} at instant {t} has {len(hot)} true bits"
                )
            values.append(hot[0])
        variables[var.name] = tuple(values)
    return Trace(k, props, variables)


def check(f: Formula, symbols: SymbolTable, k: int | None = None) -> CheckResult:
    """Satisfiability of f over [0, k]; witnesses are re-validated by evaluate."""
    bound = DEFAULT_BOUND if k is None else k
    cnf, vm = encode(f, symbols, bound)
    result = sat.solve(cnf)
    if not result.satisfiable:
        return CheckResult(None)
    assert result.model is not None
    trace = decode(result.model, vm, symbols, bound)
    if not evaluate(f, trace, 0):
        raise EncodingError("decoded witness fails the evaluator; encoder and semantics disagree")
    return CheckResult(trace)

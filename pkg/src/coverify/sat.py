"""Clausal satisfiability core.

``solve`` is a conflict-driven solver with two watched literals, first-UIP
clause learning, and an activity-based decision heuristic with deterministic
tie-breaking (lowest variable index first, phase false first).  No restarts:
instances produced by the bounded encoder stay small, and reproducible runs
matter more than raw speed here.  ``brute_force_solve`` is the independent
exhaustive oracle for small instances, and DIMACS read/write lets an external
solver be swapped in.

Literals are DIMACS-style signed integers: +v / -v for variable v >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "CnfFormula",
    "SolveResult",
    "DimacsError",
    "solve",
    "brute_force_solve",
    "write_dimacs",
    "read_dimacs",
]


@dataclass(frozen=True)
class CnfFormula:
    """Immutable CNF: clause literals are nonzero ints with |lit| <= num_vars."""

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.num_vars < 0:
            raise ValueError("num_vars must be >= 0")
        for clause in self.clauses:
            if not clause:
                raise ValueError("empty clause not representable; formula is trivially unsat")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range for {self.num_vars} variables")


@dataclass(frozen=True)
class SolveResult:
    """Sat with a total model over 1..num_vars, or Unsat (model is None)."""

    model: dict[int, bool] | None

    @property
    def satisfiable(self) -> bool:
        return self.model is not None

    @staticmethod
    def sat(model: dict[int, bool]) -> "SolveResult":
        return SolveResult(dict(model))

    @staticmethod
    def unsat() -> "SolveResult":
        return SolveResult(None)


def _model_satisfies(cnf: CnfFormula, model: dict[int, bool]) -> bool:
    return all(any(model[abs(l)] == (l > 0) for l in clause) for clause in cnf.clauses)


_UNDEF, _TRUE, _FALSE = 0, 1, -1


class _Solver:
    """Single-use CDCL engine. See module docstring for the heuristic contract."""

    def __init__(self, cnf: CnfFormula):
        self.n = cnf.num_vars
        self.clauses: list[list[int]] = []
        self.value = [_UNDEF] * (self.n + 1)
        self.level = [0] * (self.n + 1)
        self.reason: list[int | None] = [None] * (self.n + 1)  # clause index
        self.trail: list[int] = []
        self.trail_lim: list[int] = []
        self.qhead = 0
        self.watches: dict[int, list[int]] = {}
        self.activity = [0.0] * (self.n + 1)
        self.var_inc = 1.0
        self.var_decay = 0.95
        self.ok = True

        for clause in cnf.clauses:
            self._add_clause(list(clause))

    def _watchlist(self, lit: int) -> list[int]:
        lst = self.watches.get(lit)
        if lst is None:
            lst = []
            self.watches[lit] = lst
        return lst

    def _add_clause(self, lits: list[int]) -> None:
        seen: dict[int, int] = {}
        out: list[int] = []
        for lit in lits:
            if seen.get(-lit):
                return  # tautology, trivially satisfied
            if not seen.get(lit):
                seen[lit] = 1
                out.append(lit)
        if len(out) == 1:
            if not self._enqueue(out[0], None):
                self.ok = False
            return
        idx = len(self.clauses)
        self.clauses.append(out)
        self._watchlist(out[0]).append(idx)
        self._watchlist(out[1]).append(idx)

    def _enqueue(self, lit: int, reason: int | None) -> bool:
        var = abs(lit)
        val = _TRUE if lit > 0 else _FALSE
        if self.value[var] != _UNDEF:
            return self.value[var] == val
        self.value[var] = val
        self.level[var] = len(self.trail_lim)
        self.reason[var] = reason
        self.trail.append(lit)
        return True

    def _lit_value(self, lit: int) -> int:
        v = self.value[abs(lit)]
        return v if lit > 0 else -v

    def _propagate(self) -> int | None:
        """Unit propagation; returns a conflicting clause index or None."""
        while self.qhead < len(self.trail):
            lit = self.trail[self.qhead]
            self.qhead += 1
            falsified = -lit
            watchers = self.watches.get(falsified)
            if not watchers:
                continue
            kept: list[int] = []
            conflict: int | None = None
            i = 0
            while i < len(watchers):
                ci = watchers[i]
                i += 1
                clause = self.clauses[ci]
                # Normalize so the falsified watcher sits in slot 1.
                if clause[0] == falsified:
                    clause[0], clause[1] = clause[1], clause[0]
                first = clause[0]
                if self._lit_value(first) == _TRUE:
                    kept.append(ci)
                    continue
                moved = False
                for j in range(2, len(clause)):
                    if self._lit_value(clause[j]) != _FALSE:
                        clause[1], clause[j] = clause[j], clause[1]
                        self._watchlist(clause[1]).append(ci)
                        moved = True
                        break
                if moved:
                    continue
                kept.append(ci)
                if not self._enqueue(first, ci):
                    conflict = ci
                    kept.extend(watchers[i:])
                    break
            self.watches[falsified] = kept
            if conflict is not None:
                return conflict
        return None

    def _bump(self, var: int) -> None:
        self.activity[var] += self.var_inc
        if self.activity[var] > 1e100:
            for v in range(1, self.n + 1):
                self.activity[v] *= 1e-100
            self.var_inc *= 1e-100

    def _analyze(self, conflict: int) -> tuple[list[int], int]:
        """First-UIP learned clause and the level to backjump to."""
        learned: list[int] = [0]  # slot 0 reserved for the asserting literal
        seen = [False] * (self.n + 1)
        counter = 0
        lit = 0
        index = len(self.trail)
        reason_clause: list[int] = self.clauses[conflict]
        current_level = len(self.trail_lim)

        while True:
            for q in reason_clause:
                if q == lit:
                    continue
                var = abs(q)
                if not seen[var] and self.level[var] > 0:
                    seen[var] = True
                    self._bump(var)
                    if self.level[var] == current_level:
                        counter += 1
                    else:
                        learned.append(q)
            while True:
                index -= 1
                lit = -self.trail[index]
                if seen[abs(lit)]:
                    break
            counter -= 1
            if counter == 0:
                break
            reason_idx = self.reason[abs(lit)]
            assert reason_idx is not None
            reason_clause = self.clauses[reason_idx]
        learned[0] = lit

        if len(learned) == 1:
            back_level = 0
        else:
            # Put the second-highest-level literal in slot 1 for watching.
            best = 1
            for j in range(2, len(learned)):
                if self.level[abs(learned[j])] > self.level[abs(learned[best])]:
                    best = j
            learned[1], learned[best] = learned[best], learned[1]
            back_level = self.level[abs(learned[1])]
        return learned, back_level

    def _backtrack(self, target_level: int) -> None:
        limit = self.trail_lim[target_level]
        for lit in reversed(self.trail[limit:]):
            var = abs(lit)
            self.value[var] = _UNDEF
            self.reason[var] = None
        del self.trail[limit:]
        del self.trail_lim[target_level:]
        self.qhead = len(self.trail)

    def _decide(self) -> int:
        best_var = 0
        best_act = -1.0
        for var in range(1, self.n + 1):
            if self.value[var] == _UNDEF and self.activity[var] > best_act:
                best_var = var
                best_act = self.activity[var]
        return -best_var  # phase: false first

    def solve(self) -> SolveResult:
        if not self.ok:
            return SolveResult.unsat()
        if self._propagate() is not None:
            return SolveResult.unsat()

        while len(self.trail) < self.n:
            decision = self._decide()
            self.trail_lim.append(len(self.trail))
            self._enqueue(decision, None)
            while True:
                conflict = self._propagate()
                if conflict is None:
                    break
                if not self.trail_lim:
                    return SolveResult.unsat()
                learned, back_level = self._analyze(conflict)
                self._backtrack(back_level)
                if len(learned) == 1:
                    enqueued = self._enqueue(learned[0], None)
                else:
                    idx = len(self.clauses)
                    self.clauses.append(learned)
                    self._watchlist(learned[0]).append(idx)
                    self._watchlist(learned[1]).append(idx)
                    enqueued = self._enqueue(learned[0], idx)
                if not enqueued:
                    return SolveResult.unsat()
                self.var_inc /= self.var_decay

        return SolveResult.sat({v: self.value[v] == _TRUE for v in range(1, self.n + 1)})


def solve(cnf: CnfFormula) -> SolveResult:
    """Decide cnf; Sat results carry a verified total model."""
    result = _Solver(cnf).solve()
    if result.satisfiable:
        assert result.model is not None
        if not _model_satisfies(cnf, result.model):
            raise AssertionError("solver returned a non-model; this is a solver bug")
    return result


_BRUTE_CHUNK = 1 << 16


def brute_force_solve(cnf: CnfFormula) -> SolveResult:
    """Exhaustive enumeration over all assignments; requires num_vars <= 24.

    Assignments are scanned in counting order (variable v is bit v-1), so the
    returned model is the numerically smallest satisfying assignment.
    """
    if cnf.num_vars > 24:
        raise ValueError(f"brute force capped at 24 variables, got {cnf.num_vars}")
    if cnf.num_vars == 0:
        if cnf.clauses:
            raise AssertionError("clauses without variables cannot be well-formed")
        return SolveResult.sat({})

    total = 1 << cnf.num_vars
    for start in range(0, total, _BRUTE_CHUNK):
        block = np.arange(start, min(start + _BRUTE_CHUNK, total), dtype=np.uint32)
        sat = np.ones(block.shape, dtype=bool)
        for clause in cnf.clauses:
            clause_sat = np.zeros(block.shape, dtype=bool)
            for lit in clause:
                bit = (block >> (abs(lit) - 1)) & 1
                clause_sat |= (bit == 1) if lit > 0 else (bit == 0)
            sat &= clause_sat
            if not sat.any():
                break
        hits = np.flatnonzero(sat)
        if hits.size:
            assignment = int(block[hits[0]])
            model = {v: bool((assignment >> (v - 1)) & 1) for v in range(1, cnf.num_vars + 1)}
            return SolveResult.sat(model)
    return SolveResult.unsat()


class DimacsError(ValueError):
    pass


def write_dimacs(cnf: CnfFormula) -> str:
    """Standard DIMACS CNF text: header line, then 0-terminated clauses."""
    lines = [f"p cnf {cnf.num_vars} {len(cnf.clauses)}\n"]
    for clause in cnf.clauses:
        lines.append(" ".join(str(lit) for lit in clause) + " 0\n")
    return "".join(lines)


def read_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF; validates literals and counts against the header."""
    num_vars: int | None = None
    num_clauses = 0
    clauses: list[tuple[int, ...]] = []
    pending: list[int] = []

    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if num_vars is not None:
                raise DimacsError("duplicate header line")
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"malformed header: {line!r}")
            try:
                num_vars, num_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"malformed header: {line!r}") from None
            if num_vars < 0 or num_clauses < 0:
                raise DimacsError(f"malformed header: {line!r}")
            continue
        if num_vars is None:
            raise DimacsError(f"clause before header: {line!r}")
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise DimacsError(f"not a literal: {token!r}") from None
            if lit == 0:
                if not pending:
                    raise DimacsError("empty clause in input")
                clauses.append(tuple(pending))
                pending.clear()
            else:
                if abs(lit) > num_vars:
                    raise DimacsError(f"literal {lit} exceeds declared {num_vars} variables")
                pending.append(lit)

    if num_vars is None:
        raise DimacsError("missing header line")
    if pending:
        raise DimacsError("last clause lacks its terminating 0")
    if len(clauses) != num_clauses:
        raise DimacsError(f"header declares {num_clauses} clauses, found {len(clauses)}")
    return CnfFormula(num_vars, tuple(clauses))

"""Workcell scenarios and their compilation into the temporal logic.

A scenario describes the discretized workcell: box-shaped layout cells with
an adjacency relation, human/robot agents carrying points of interest (POIs),
an ordered task, hazards (co-location of a human POI and a robot POI, graded
by severity/exposure/avoidability), reactive mitigations, and the risk
threshold.  ``compile_scenario`` turns it into formulas; ``verify`` model
checks the result and returns either Safe or a counterexample trace with the
instants whose risk exceeds the threshold.

Modeling conventions baked into the compilation:

* Each POI is a finite variable over cell ids; moves go to adjacent cells.
  A move over an edge with travel time T holds the source cell and a
  per-POI ``transit_<poi>`` flag for T instants, then the position flips.
* Human POIs are only constrained by movement: the solver picks adversarial
  human paths.
* Each robot has a ``speed_<agent>`` state (normal/slow/stopped) that is
  free unless a mitigation reacts to a hazard one instant after detection.
* The risk of a hazard instant is valued against the speed one instant
  later, i.e. after any mandated reaction, and pessimistically against the
  unmitigated base value when no later instant exists.  A hazard instant
  with no observable reaction window therefore never looks safer than it is.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .encode import DEFAULT_BOUND, EncodingError, check
from .geometry import Box
from .logic import (
    Alw,
    And,
    Atom,
    Dist,
    Eq,
    EqVar,
    Formula,
    Implies,
    LeConst,
    Not,
    Or,
    Som,
    SymbolTable,
    Trace,
    conjoin,
    disjoin,
    evaluate,
)

__all__ = [
    "SPEED_STATES",
    "ScenarioError",
    "Location",
    "Layout",
    "PointOfInterest",
    "Agent",
    "TaskStep",
    "Hazard",
    "Mitigation",
    "Scenario",
    "CompiledModel",
    "RiskViolation",
    "VerifyResult",
    "load_scenario",
    "loads_scenario",
    "risk_value",
    "compile_scenario",
    "verify",
    "extract_violations",
    "apply_mitigation",
    "bundled_scenario_path",
]

SPEED_STATES = ("normal", "slow", "stopped")
RISK_DOMAIN = tuple(str(v) for v in range(7))  # 0 .. 2+2+2
DEFAULT_THRESHOLD = 3


class ScenarioError(ValueError):
    """Invalid scenario file or scenario structure."""


@dataclass(frozen=True)
class Location:
    id: str
    box: Box
    adjacent: frozenset[str]


@dataclass(frozen=True)
class Layout:
    locations: tuple[Location, ...]

    def __post_init__(self) -> None:
        ids = [loc.id for loc in self.locations]
        if len(set(ids)) != len(ids):
            raise ScenarioError("duplicate location ids in layout")
        known = set(ids)
        by_id = {loc.id: loc for loc in self.locations}
        for loc in self.locations:
            if loc.id in loc.adjacent:
                raise ScenarioError(f"location {loc.id!r} adjacent to itself")
            for other in loc.adjacent:
                if other not in known:
                    raise ScenarioError(f"adjacency {loc.id!r} -> undeclared location {other!r}")
                if loc.id not in by_id[other].adjacent:
                    raise ScenarioError(f"asymmetric adjacency between {loc.id!r} and {other!r}")
        for i, a in enumerate(self.locations):
            for b in self.locations[i + 1 :]:
                if a.box.interior_overlaps(b.box):
                    raise ScenarioError(f"cells {a.id!r} and {b.id!r} overlap")

    def location(self, loc_id: str) -> Location:
        for loc in self.locations:
            if loc.id == loc_id:
                return loc
        raise ScenarioError(f"unknown location {loc_id!r}")

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(loc.id for loc in self.locations)


@dataclass(frozen=True)
class PointOfInterest:
    id: str
    owner: str
    radius: float


@dataclass(frozen=True)
class Agent:
    id: str
    kind: str  # "human" | "robot"
    pois: tuple[PointOfInterest, ...]


@dataclass(frozen=True)
class TaskStep:
    kind: str  # "reach" | "pick" | "place" | "handover"
    poi: str
    goal: str
    partner: str | None = None  # human POI of a handover


@dataclass(frozen=True)
class Hazard:
    id: str
    human_poi: str
    robot_poi: str
    severity: int
    exposure: int
    avoidability: int


@dataclass(frozen=True)
class Mitigation:
    kind: str  # "slowdown" | "retract" | "stop"
    hazard: str


@dataclass(frozen=True)
class Scenario:
    name: str
    layout: Layout
    agents: tuple[Agent, ...]
    task: tuple[TaskStep, ...]
    hazards: tuple[Hazard, ...]
    mitigations: tuple[Mitigation, ...]
    bound: int = DEFAULT_BOUND
    threshold: int = DEFAULT_THRESHOLD
    dt: float = 1.0
    travel_times: tuple[tuple[str, str, int], ...] = ()
    starts: tuple[tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        _validate_scenario(self)

    # Lookup helpers ------------------------------------------------------

    def agent(self, agent_id: str) -> Agent:
        for agent in self.agents:
            if agent.id == agent_id:
                return agent
        raise ScenarioError(f"unknown agent {agent_id!r}")

    def poi(self, poi_id: str) -> PointOfInterest:
        for agent in self.agents:
            for poi in agent.pois:
                if poi.id == poi_id:
                    return poi
        raise ScenarioError(f"unknown POI {poi_id!r}")

    @property
    def pois(self) -> tuple[PointOfInterest, ...]:
        return tuple(poi for agent in self.agents for poi in agent.pois)

    def hazard(self, hazard_id: str) -> Hazard:
        for hazard in self.hazards:
            if hazard.id == hazard_id:
                return hazard
        raise ScenarioError(f"unknown hazard {hazard_id!r}")

    def travel_time(self, a: str, b: str) -> int:
        key = (a, b) if a <= b else (b, a)
        for pa, pb, t in self.travel_times:
            if (pa, pb) == key or (pb, pa) == key:
                return t
        return 1

    # Derived symbol names used by the compiled model ----------------------

    @staticmethod
    def transit_name(poi_id: str) -> str:
        return f"transit_{poi_id}"

    @staticmethod
    def speed_name(agent_id: str) -> str:
        return f"speed_{agent_id}"

    @staticmethod
    def hazard_flag_name(hazard_id: str) -> str:
        return f"haz_{hazard_id}"

    @staticmethod
    def risk_name(hazard_id: str) -> str:
        return f"risk_{hazard_id}"


def _validate_scenario(s: Scenario) -> None:
    if s.bound < 0:
        raise ScenarioError("bound must be >= 0")
    if s.threshold < 0:
        raise ScenarioError("threshold must be >= 0")
    if s.dt <= 0:
        raise ScenarioError("dt must be > 0")

    agent_ids = [a.id for a in s.agents]
    if len(set(agent_ids)) != len(agent_ids):
        raise ScenarioError("duplicate agent ids")
    poi_ids = [p.id for a in s.agents for p in a.pois]
    if len(set(poi_ids)) != len(poi_ids):
        raise ScenarioError("duplicate POI ids")
    for agent in s.agents:
        if agent.kind not in ("human", "robot"):
            raise ScenarioError(f"agent {agent.id!r} has unknown kind {agent.kind!r}")
        if not agent.pois:
            raise ScenarioError(f"agent {agent.id!r} declares no POI")
        for poi in agent.pois:
            if poi.owner != agent.id:
                raise ScenarioError(f"POI {poi.id!r} owner disagrees with its agent")
            if poi.radius <= 0:
                raise ScenarioError(f"POI {poi.id!r} needs a positive radius")

    # The radius cap keeps same-cell co-location the only contact-capable
    # configuration; zero-extent (point) cells are exempt since nothing fits
    # inside them anyway.
    positive_edges = [
        e for loc in s.layout.locations for e in loc.box.edges if e > 0
    ]
    if positive_edges:
        cap = min(positive_edges)
        for poi in s.pois:
            if poi.radius >= cap:
                raise ScenarioError(
                    f"POI {poi.id!r} radius {poi.radius} must be smaller than the "
                    f"smallest cell edge {cap}"
                )

    known_locs = set(s.layout.ids)
    for step in s.task:
        if step.kind not in ("reach", "pick", "place", "handover"):
            raise ScenarioError(f"unknown task step kind {step.kind!r}")
        if step.goal not in known_locs:
            raise ScenarioError(f"task goal {step.goal!r} is not a layout location")
        poi = s.poi(step.poi)
        if step.kind == "handover":
            if step.partner is None:
                raise ScenarioError("handover step needs a human POI")
            if s.agent(poi.owner).kind != "robot":
                raise ScenarioError("handover's first POI must belong to a robot")
            partner = s.poi(step.partner)
            if s.agent(partner.owner).kind != "human":
                raise ScenarioError("handover's second POI must belong to a human")
        elif step.partner is not None:
            raise ScenarioError(f"{step.kind} step does not take a partner POI")

    hazard_ids = [h.id for h in s.hazards]
    if len(set(hazard_ids)) != len(hazard_ids):
        raise ScenarioError("duplicate hazard ids")
    for hazard in s.hazards:
        for level, label in (
            (hazard.severity, "severity"),
            (hazard.exposure, "exposure"),
            (hazard.avoidability, "avoidability"),
        ):
            if not 0 <= level <= 2:
                raise ScenarioError(f"hazard {hazard.id!r} {label} {level} out of range 0..2")
        if s.agent(s.poi(hazard.human_poi).owner).kind != "human":
            raise ScenarioError(f"hazard {hazard.id!r}: {hazard.human_poi!r} is not a human POI")
        if s.agent(s.poi(hazard.robot_poi).owner).kind != "robot":
            raise ScenarioError(f"hazard {hazard.id!r}: {hazard.robot_poi!r} is not a robot POI")

    if len(set(s.mitigations)) != len(s.mitigations):
        raise ScenarioError("duplicate mitigation")
    for mit in s.mitigations:
        if mit.kind not in ("slowdown", "retract", "stop"):
            raise ScenarioError(f"unknown mitigation kind {mit.kind!r}")
        s.hazard(mit.hazard)

    for a, b, t in s.travel_times:
        if t < 1:
            raise ScenarioError(f"travel time {a}-{b} must be >= 1")
        if b not in s.layout.location(a).adjacent:
            raise ScenarioError(f"travel time given for non-adjacent pair {a!r}, {b!r}")

    for poi_id, loc in s.starts:
        s.poi(poi_id)
        if loc not in known_locs:
            raise ScenarioError(f"start location {loc!r} is not a layout location")


# ---------------------------------------------------------------------------
# Scenario file format (.scn)


def load_scenario(path) -> Scenario:
    """Load and validate a scenario file."""
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    name = os.path.splitext(os.path.basename(str(path)))[0]
    return loads_scenario(text, name=name)


def loads_scenario(text: str, name: str = "scenario") -> Scenario:
    """Parse scenario text (see the .scn reference in the README)."""
    section = None
    loc_boxes: dict[str, Box] = {}
    adjacency: dict[str, set[str]] = {}
    agent_kinds: dict[str, str] = {}
    agent_pois: dict[str, list[PointOfInterest]] = {}
    task: list[TaskStep] = []
    hazards: list[Hazard] = []
    mitigations: list[Mitigation] = []
    starts: list[tuple[str, str]] = []
    travel: list[tuple[str, str, int]] = []
    params: dict[str, float | int] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        def fail(message: str) -> ScenarioError:
            return ScenarioError(f"line {lineno}: {message}")

        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip().lower()
            if section not in ("layout", "agents", "task", "hazards", "mitigations", "params"):
                raise fail(f"unknown section {section!r}")
            continue
        if section is None:
            raise fail("content before any section header")

        fields = line.split()
        kw = fields[0]
        try:
            if section == "layout" and kw == "loc":
                if len(fields) != 9 or fields[2] != "box":
                    raise fail("expected: loc <id> box <x0> <y0> <z0> <x1> <y1> <z1>")
                loc_id = fields[1]
                if loc_id in loc_boxes:
                    raise fail(f"duplicate location {loc_id!r}")
                nums = [float(v) for v in fields[3:9]]
                loc_boxes[loc_id] = Box(tuple(nums[:3]), tuple(nums[3:]))
                adjacency.setdefault(loc_id, set())
            elif section == "layout" and kw == "adj":
                if len(fields) != 3:
                    raise fail("expected: adj <id> <id>")
                a, b = fields[1], fields[2]
                for loc_id in (a, b):
                    if loc_id not in loc_boxes:
                        raise fail(f"adjacency references undeclared location {loc_id!r}")
                if a == b:
                    raise fail(f"location {a!r} cannot be adjacent to itself")
                adjacency[a].add(b)
                adjacency[b].add(a)
            elif section == "agents" and kw == "agent":
                if len(fields) != 3:
                    raise fail("expected: agent <id> human|robot")
                agent_id, kind = fields[1], fields[2]
                if agent_id in agent_kinds:
                    raise fail(f"duplicate agent {agent_id!r}")
                agent_kinds[agent_id] = kind
                agent_pois[agent_id] = []
            elif section == "agents" and kw == "poi":
                if len(fields) != 5 or fields[3] != "radius":
                    raise fail("expected: poi <agent> <id> radius <m>")
                agent_id, poi_id = fields[1], fields[2]
                if agent_id not in agent_kinds:
                    raise fail(f"POI for undeclared agent {agent_id!r}")
                agent_pois[agent_id].append(
                    PointOfInterest(poi_id, agent_id, float(fields[4]))
                )
            elif section == "agents" and kw == "start":
                if len(fields) != 3:
                    raise fail("expected: start <poi> <loc>")
                starts.append((fields[1], fields[2]))
            elif section == "task" and kw == "step":
                if len(fields) == 4 and fields[2] in ("reach", "pick", "place"):
                    task.append(TaskStep(fields[2], fields[1], fields[3]))
                elif len(fields) == 5 and fields[1] == "handover":
                    task.append(TaskStep("handover", fields[2], fields[4], partner=fields[3]))
                else:
                    raise fail(
                        "expected: step <poi> reach|pick|place <loc> "
                        "or step handover <robot-poi> <human-poi> <loc>"
                    )
            elif section == "hazards" and kw == "hazard":
                if (
                    len(fields) != 10
                    or fields[4] != "sev"
                    or fields[6] != "exp"
                    or fields[8] != "avoid"
                ):
                    raise fail(
                        "expected: hazard <id> <human-poi> <robot-poi> "
                        "sev <0-2> exp <0-2> avoid <0-2>"
                    )
                hazards.append(
                    Hazard(fields[1], fields[2], fields[3],
                           int(fields[5]), int(fields[7]), int(fields[9]))
                )
            elif section == "mitigations" and kw == "mitigate":
                if len(fields) != 3 or fields[1] not in ("slowdown", "retract", "stop"):
                    raise fail("expected: mitigate slowdown|retract|stop <hazard>")
                mitigations.append(Mitigation(fields[1], fields[2]))
            elif section == "params" and kw in ("bound", "threshold"):
                params[kw] = int(fields[1])
            elif section == "params" and kw == "dt":
                params["dt"] = float(fields[1])
            elif section == "params" and kw == "travel":
                if len(fields) != 4:
                    raise fail("expected: travel <locA> <locB> <instants>")
                travel.append((fields[1], fields[2], int(fields[3])))
            else:
                raise fail(f"unexpected {kw!r} in section [{section}]")
        except ValueError as exc:
            if isinstance(exc, ScenarioError):
                raise
            raise fail(str(exc)) from None

    locations = tuple(
        Location(loc_id, box, frozenset(adjacency[loc_id]))
        for loc_id, box in loc_boxes.items()
    )
    agents = tuple(
        Agent(agent_id, kind, tuple(agent_pois[agent_id]))
        for agent_id, kind in agent_kinds.items()
    )
    try:
        return Scenario(
            name=name,
            layout=Layout(locations),
            agents=agents,
            task=tuple(task),
            hazards=tuple(hazards),
            mitigations=tuple(mitigations),
            bound=int(params.get("bound", DEFAULT_BOUND)),
            threshold=int(params.get("threshold", DEFAULT_THRESHOLD)),
            dt=float(params.get("dt", 1.0)),
            travel_times=tuple(travel),
            starts=tuple(starts),
        )
    except ScenarioError:
        raise
    except ValueError as exc:
        raise ScenarioError(str(exc)) from None


# ---------------------------------------------------------------------------
# Risk scheme


def risk_value(severity: int, exposure: int, avoidability: int, speed: str) -> int:
    """Additive risk of a hazard occurrence, modulated by the robot speed state.

    slow reduces the effective severity by one level (floor 0); stopped
    zeroes the whole value.
    """
    for level, label in ((severity, "severity"), (exposure, "exposure"), (avoidability, "avoidability")):
        if not 0 <= level <= 2:
            raise ValueError(f"{label} {level} out of range 0..2")
    if speed not in SPEED_STATES:
        raise ValueError(f"unknown speed state {speed!r}")
    if speed == "stopped":
        return 0
    if speed == "slow":
        severity = max(severity - 1, 0)
    return severity + exposure + avoidability


# ---------------------------------------------------------------------------
# Compilation


@dataclass(frozen=True)
class CompiledModel:
    """Formulas of a scenario: behavioral axioms plus the negated safety property."""

    axioms: tuple[Formula, ...]
    violation: Formula | None  # None when no hazard is declared (vacuously safe)
    symbols: SymbolTable

    @property
    def formulas(self) -> tuple[Formula, ...]:
        if self.violation is None:
            return self.axioms
        return self.axioms + (self.violation,)


def compile_scenario(s: Scenario) -> CompiledModel:
    """Movement, hazard, risk, task, and mitigation formulas plus symbols."""
    symbols = SymbolTable()
    try:
        for poi in s.pois:
            symbols.add_variable(poi.id, s.layout.ids)
            symbols.add_proposition(s.transit_name(poi.id))
        for agent in s.agents:
            if agent.kind == "robot":
                symbols.add_variable(s.speed_name(agent.id), SPEED_STATES)
        for hazard in s.hazards:
            symbols.add_proposition(s.hazard_flag_name(hazard.id))
            symbols.add_variable(s.risk_name(hazard.id), RISK_DOMAIN)
        done_names = [f"done_{i}" for i in range(1, len(s.task) + 1)]
        for name in done_names:
            symbols.add_proposition(name)
    except ValueError as exc:
        raise ScenarioError(f"symbol clash while compiling: {exc}") from None

    axioms: list[Formula] = []
    axioms.extend(_movement_axioms(s))
    axioms.extend(_start_axioms(s))
    axioms.extend(_hazard_axioms(s))
    axioms.extend(_risk_axioms(s))
    axioms.extend(_task_axioms(s, done_names))
    axioms.extend(_mitigation_axioms(s))

    violation: Formula | None = None
    if s.hazards:
        over = [Not(LeConst(s.risk_name(h.id), s.threshold)) for h in s.hazards]
        violation = Som(disjoin(over))

    return CompiledModel(tuple(axioms), violation, symbols)


def _movement_axioms(s: Scenario):
    for poi in s.pois:
        pos = poi.id
        transit = Atom(s.transit_name(pos))
        # Adjacency: stepping away from a cell may only land on a neighbor.
        for loc in s.layout.locations:
            stay_or_neighbor = disjoin(
                [Eq(pos, loc.id)] + [Eq(pos, other) for other in sorted(loc.adjacent)]
            )
            yield Alw(Implies(Dist(Eq(pos, loc.id), -1), stay_or_neighbor))
        # Arrival discipline: reaching a neighbor requires having sat in the
        # source cell, in transit, for the edge's whole travel time.
        for loc in s.layout.locations:
            for other in sorted(loc.adjacent):
                duration = s.travel_time(loc.id, other)
                history = conjoin(
                    [
                        And(Dist(Eq(pos, loc.id), -j), Dist(transit, -j))
                        for j in range(1, duration + 1)
                    ]
                )
                yield Alw(
                    Implies(And(Dist(Eq(pos, loc.id), -1), Eq(pos, other)), history)
                )
        # A transit run persists until the position actually changes.
        change_next = disjoin(
            [
                And(Eq(pos, loc.id), Not(Dist(Eq(pos, loc.id), 1)))
                for loc in s.layout.locations
            ]
        )
        yield Alw(Implies(transit, Or(Dist(transit, 1), change_next)))


def _start_axioms(s: Scenario):
    # Un-wrapped equalities anchor instant 0, where the model is asserted.
    for poi_id, loc in s.starts:
        yield Eq(poi_id, loc)


def _hazard_axioms(s: Scenario):
    for hazard in s.hazards:
        flag = Atom(s.hazard_flag_name(hazard.id))
        together = EqVar(hazard.human_poi, hazard.robot_poi)
        yield Alw(And(Implies(flag, together), Implies(together, flag)))


def _risk_axioms(s: Scenario):
    for hazard in s.hazards:
        flag = Atom(s.hazard_flag_name(hazard.id))
        risk = s.risk_name(hazard.id)
        speed = s.speed_name(s.poi(hazard.robot_poi).owner)
        levels = (hazard.severity, hazard.exposure, hazard.avoidability)

        yield Alw(Implies(Not(flag), Eq(risk, "0")))
        reactions = []
        for state in SPEED_STATES:
            reacted = Dist(Eq(speed, state), 1)
            reactions.append(reacted)
            value = str(risk_value(*levels, state))
            yield Alw(Implies(And(flag, reacted), Eq(risk, value)))
        # Past the horizon no reaction is observable: price the hazard at its
        # unmitigated base value.
        no_window = conjoin([Not(r) for r in reactions])
        base = str(risk_value(*levels, "normal"))
        yield Alw(Implies(And(flag, no_window), Eq(risk, base)))


def _achieved(s: Scenario, step: TaskStep) -> Formula:
    at_goal = Eq(step.poi, step.goal)
    if step.kind == "handover":
        assert step.partner is not None
        return And(at_goal, Eq(step.partner, step.goal))
    return at_goal


def _task_axioms(s: Scenario, done_names: list[str]):
    for i, step in enumerate(s.task):
        done = Atom(done_names[i])
        achieved = _achieved(s, step)
        onset = achieved if i == 0 else And(achieved, Atom(done_names[i - 1]))
        was_done = Dist(done, -1)
        yield Alw(Implies(was_done, done))            # done is sticky
        yield Alw(Implies(done, Or(was_done, onset)))  # done only via its onset
        yield Alw(Implies(onset, done))               # onset marks done at once
    if s.task:
        yield Som(Atom(done_names[-1]))


def _mitigation_axioms(s: Scenario):
    for mit in s.mitigations:
        hazard = s.hazard(mit.hazard)
        flag = Atom(s.hazard_flag_name(hazard.id))
        speed = s.speed_name(s.poi(hazard.robot_poi).owner)
        if mit.kind == "slowdown":
            yield Alw(Implies(flag, Dist(Eq(speed, "slow"), 1)))
        elif mit.kind == "stop":
            yield Alw(Implies(flag, Dist(Eq(speed, "stopped"), 1)))
        else:  # retract: return to the previous cell one instant after detection
            pos = hazard.robot_poi
            for loc in s.layout.locations:
                was_there = Dist(Eq(pos, loc.id), -1)
                yield Alw(Implies(And(flag, was_there), Dist(Eq(pos, loc.id), 1)))


# ---------------------------------------------------------------------------
# Verification


@dataclass(frozen=True)
class RiskViolation:
    hazard: str
    instant: int
    risk: int


@dataclass(frozen=True)
class VerifyResult:
    """Safe (no trace violates the threshold) or a counterexample trace."""

    trace: Trace | None
    violations: tuple[RiskViolation, ...] = ()

    @property
    def safe(self) -> bool:
        return self.trace is None


def extract_violations(trace: Trace, s: Scenario) -> tuple[RiskViolation, ...]:
    """Every (hazard, instant) of the trace whose risk exceeds the threshold."""
    found = []
    for t in range(trace.bound + 1):
        for hazard in s.hazards:
            value = int(trace.var_value(s.risk_name(hazard.id), t))
            if value > s.threshold:
                found.append(RiskViolation(hazard.id, t, value))
    return tuple(found)


def verify(s: Scenario) -> VerifyResult:
    """Safe iff no trace over [0, bound] satisfies the model and breaks the threshold."""
    model = compile_scenario(s)
    if model.violation is None:
        return VerifyResult(None)
    result = check(conjoin(model.formulas), model.symbols, s.bound)
    if result.trace is None:
        return VerifyResult(None)
    violations = extract_violations(result.trace, s)
    if not violations:
        raise EncodingError("counterexample without a violating instant")
    return VerifyResult(result.trace, violations)


def apply_mitigation(s: Scenario, m: Mitigation) -> Scenario:
    """A new scenario with m appended; the input scenario is left untouched."""
    if m in s.mitigations:
        raise ScenarioError(f"mitigation {m.kind!r} for {m.hazard!r} already present")
    s.hazard(m.hazard)
    return replace(s, mitigations=s.mitigations + (m,))


def bundled_scenario_path(name: str):
    """Filesystem path of a scenario shipped with the package (e.g. 'handover')."""
    from importlib import resources

    candidate = resources.files("coverify").joinpath("data", f"{name}.scn")
    if not candidate.is_file():
        raise ScenarioError(f"no bundled scenario named {name!r}")
    return candidate

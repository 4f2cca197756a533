"""Counterexample replay: discrete traces to continuous motion and verdicts.

A trace fixes, per instant, which cell each point of interest occupies and
whether it is in transit.  Replay turns the per-instant diffs into motion
commands, renders them as piecewise-linear constant-speed paths through cell
centers, and re-examines every reported hazard instant geometrically: the
two POIs are somewhere inside their cells, so their distance lies in
[d_min, d_max] of the cell pair.  With contact threshold th (sum of the POI
radii) the verdict is

* CONFIRMED  when d_max <= th: contact is certain wherever they sit,
* SPURIOUS   when d_min > th: contact is impossible, a discretization
  artifact of the checker,
* POSSIBLE   otherwise, with a Monte Carlo contact probability.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import Box, aabb_max_distance, aabb_min_distance, contact_probability
from .logic import Trace
from .world import Scenario, extract_violations

__all__ = [
    "CONFIRMED",
    "POSSIBLE",
    "SPURIOUS",
    "MotionCommand",
    "ContinuousPath",
    "ClassifiedHazard",
    "extract_motions",
    "interpolate",
    "poi_path",
    "classify",
    "aabb_min_distance",
    "aabb_max_distance",
    "contact_probability",
    "Box",
]

CONFIRMED = "CONFIRMED"
POSSIBLE = "POSSIBLE"
SPURIOUS = "SPURIOUS"


@dataclass(frozen=True)
class MotionCommand:
    """One cell-to-cell move: leaves source at start, reaches dest at arrival."""

    poi: str
    source: str
    dest: str
    start: int
    arrival: int
    duration: int

    def __post_init__(self) -> None:
        if self.duration < 1:
            raise ValueError("motion duration must be >= 1")
        if self.arrival != self.start + self.duration:
            raise ValueError("arrival must equal start + duration")
        if self.source == self.dest:
            raise ValueError("motion must change cells")


@dataclass(frozen=True)
class ContinuousPath:
    """Time-ordered (seconds, 3D point) samples of one POI's motion."""

    poi: str
    samples: tuple[tuple[float, tuple[float, float, float]], ...]

    def __post_init__(self) -> None:
        times = [t for t, _ in self.samples]
        if any(b <= a for a, b in zip(times, times[1:])):
            raise ValueError("sample times must be strictly increasing")


@dataclass(frozen=True)
class ClassifiedHazard:
    hazard: str
    instant: int
    verdict: str
    d_min: float
    d_max: float
    contact_probability: float
    contact_threshold: float

    def __post_init__(self) -> None:
        if self.d_min > self.d_max:
            raise ValueError("d_min exceeds d_max")
        if self.verdict not in (CONFIRMED, POSSIBLE, SPURIOUS):
            raise ValueError(f"unknown verdict {self.verdict!r}")


def extract_motions(tr: Trace, s: Scenario) -> list[MotionCommand]:
    """One command per completed move, in POI declaration order.

    The duration of a move is the length of the consecutive transit-true run
    that ends right before the position change (at least 1: a change without
    a transit flag counts as an instantaneous unit move).
    """
    commands: list[MotionCommand] = []
    for poi in s.pois:
        try:
            positions = tr.variables[poi.id]
            transit = tr.propositions[Scenario.transit_name(poi.id)]
        except KeyError as missing:
            raise ValueError(f"trace lacks symbol {missing.args[0]!r} for POI {poi.id!r}") from None
        for t in range(1, tr.bound + 1):
            if positions[t] == positions[t - 1]:
                continue
            source, dest = positions[t - 1], positions[t]
            if dest not in s.layout.location(source).adjacent:
                raise ValueError(
                    f"corrupted trace: {poi.id!r} jumps {source!r} -> {dest!r} "
                    f"between non-adjacent cells at instant {t}"
                )
            run = 0
            while t - 1 - run >= 0 and transit[t - 1 - run] and positions[t - 1 - run] == source:
                run += 1
            duration = max(run, 1)
            commands.append(
                MotionCommand(poi.id, source, dest, start=t - duration, arrival=t, duration=duration)
            )
    return commands


def interpolate(m: MotionCommand, s: Scenario, sample_interval: float) -> ContinuousPath:
    """Linear constant-speed path between the two cell centers.

    Sampled every sample_interval seconds from the start time; both endpoints
    are exact cell centers.
    """
    total = m.duration * s.dt
    if not 0 < sample_interval <= total:
        raise ValueError("sample interval must be in (0, duration * dt]")
    c0 = s.layout.location(m.source).box.center
    c1 = s.layout.location(m.dest).box.center
    t0 = m.start * s.dt
    t1 = m.arrival * s.dt

    samples: list[tuple[float, tuple[float, float, float]]] = []
    step = 0
    while True:
        time = t0 + step * sample_interval
        if time >= t1 - 1e-12:
            break
        frac = (time - t0) / total
        point = tuple(a + frac * (b - a) for a, b in zip(c0, c1))
        samples.append((time, point))
        step += 1
    samples.append((t1, c1))
    return ContinuousPath(m.poi, tuple(samples))


def poi_path(tr: Trace, s: Scenario, poi_id: str, sample_interval: float) -> ContinuousPath:
    """Full-window trajectory of one POI: held cell centers joined by its moves.

    At any whole instant outside a transit run the sampled point is exactly
    the center of the occupied cell.
    """
    if sample_interval <= 0:
        raise ValueError("sample interval must be > 0")
    s.poi(poi_id)
    positions = tr.variables[poi_id]
    moves = [m for m in extract_motions(tr, s) if m.poi == poi_id]
    horizon = tr.bound * s.dt

    times: list[float] = []
    step = 0
    while True:
        time = step * sample_interval
        if time > horizon + 1e-12:
            break
        times.append(time)
        step += 1
    extra = [horizon]
    for m in moves:
        extra.extend((m.start * s.dt, m.arrival * s.dt))
    for edge in extra:
        if all(abs(edge - t) > 1e-12 for t in times):
            times.append(edge)
    times.sort()

    def locate(time: float) -> tuple[float, float, float]:
        for m in moves:
            t0, t1 = m.start * s.dt, m.arrival * s.dt
            if t0 <= time <= t1:
                c0 = s.layout.location(m.source).box.center
                c1 = s.layout.location(m.dest).box.center
                if time <= t0:
                    return c0
                if time >= t1:
                    return c1
                frac = (time - t0) / (t1 - t0)
                return tuple(a + frac * (b - a) for a, b in zip(c0, c1))
        instant = min(int(time / s.dt + 0.5), tr.bound)
        return s.layout.location(positions[instant]).box.center

    return ContinuousPath(poi_id, tuple((time, locate(time)) for time in times))


def classify(
    tr: Trace,
    s: Scenario,
    *,
    samples: int = 100_000,
    seed: int = 0,
) -> list[ClassifiedHazard]:
    """Geometric verdict for every hazard instant whose risk exceeds the threshold.

    CONFIRMED and SPURIOUS verdicts follow from the exact distance bounds of
    the occupied cells and carry probability 1 and 0; POSSIBLE verdicts get a
    seeded Monte Carlo contact probability.
    """
    rows: list[ClassifiedHazard] = []
    for violation in extract_violations(tr, s):
        hazard = s.hazard(violation.hazard)
        try:
            human_cell = tr.var_value(hazard.human_poi, violation.instant)
            robot_cell = tr.var_value(hazard.robot_poi, violation.instant)
        except KeyError as missing:
            raise ValueError(
                f"trace lacks symbol {missing.args[0]!r} for hazard {hazard.id!r}"
            ) from None
        box_h = s.layout.location(human_cell).box
        box_r = s.layout.location(robot_cell).box
        threshold = s.poi(hazard.human_poi).radius + s.poi(hazard.robot_poi).radius
        d_min = aabb_min_distance(box_h, box_r)
        d_max = aabb_max_distance(box_h, box_r)
        if d_max <= threshold:
            verdict, probability = CONFIRMED, 1.0
        elif d_min > threshold:
            verdict, probability = SPURIOUS, 0.0
        else:
            verdict = POSSIBLE
            probability = contact_probability(box_h, box_r, threshold, samples, seed)
        rows.append(
            ClassifiedHazard(
                hazard.id, violation.instant, verdict, d_min, d_max, probability, threshold
            )
        )
    return rows

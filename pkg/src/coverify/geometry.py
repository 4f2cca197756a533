"""Axis-aligned box geometry: distance bounds and contact probability.

Cells of the workcell layout are axis-aligned boxes; a point of interest is
somewhere inside its cell, so the distance between two points of interest is
only known up to the interval [aabb_min_distance, aabb_max_distance] of
their cells.  ``contact_probability`` quantifies the remaining uncertainty
by Monte Carlo over uniform placements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Box",
    "aabb_min_distance",
    "aabb_max_distance",
    "contact_probability",
]

_MC_CHUNK = 1 << 19  # fixed chunk size keeps sampling bit-reproducible


@dataclass(frozen=True)
class Box:
    """Axis-aligned box given by min and max corners (meters). May be degenerate."""

    lo: tuple[float, float, float]
    hi: tuple[float, float, float]

    def __post_init__(self) -> None:
        if len(self.lo) != 3 or len(self.hi) != 3:
            raise ValueError("box corners must be 3-dimensional")
        for a, b in zip(self.lo, self.hi):
            if a > b:
                raise ValueError(f"box min corner {self.lo} exceeds max corner {self.hi}")

    @property
    def center(self) -> tuple[float, float, float]:
        return tuple((a + b) / 2.0 for a, b in zip(self.lo, self.hi))

    @property
    def edges(self) -> tuple[float, float, float]:
        return tuple(b - a for a, b in zip(self.lo, self.hi))

    def intersects(self, other: "Box") -> bool:
        return all(a0 <= b1 and b0 <= a1 for a0, a1, b0, b1 in zip(self.lo, self.hi, other.lo, other.hi))

    def interior_overlaps(self, other: "Box") -> bool:
        return all(a0 < b1 and b0 < a1 for a0, a1, b0, b1 in zip(self.lo, self.hi, other.lo, other.hi))


def aabb_min_distance(a: Box, b: Box) -> float:
    """Euclidean distance between the closest points of a and b (0 if touching)."""
    gaps = [
        max(0.0, a_lo - b_hi, b_lo - a_hi)
        for a_lo, a_hi, b_lo, b_hi in zip(a.lo, a.hi, b.lo, b.hi)
    ]
    return math.sqrt(sum(g * g for g in gaps))


def aabb_max_distance(a: Box, b: Box) -> float:
    """Maximum distance between any point of a and any point of b."""
    spans = [
        max(abs(a_hi - b_lo), abs(b_hi - a_lo))
        for a_lo, a_hi, b_lo, b_hi in zip(a.lo, a.hi, b.lo, b.hi)
    ]
    return math.sqrt(sum(s * s for s in spans))


def contact_probability(a: Box, b: Box, threshold: float, samples: int, seed: int) -> float:
    """Monte Carlo estimate of P(|X - Y| <= threshold), X uniform in a, Y in b.

    Deterministic for a fixed seed and sample count: one PCG64 stream is
    consumed in fixed-size chunks, independent of how the work is batched.
    """
    if samples < 1:
        raise ValueError("sample count must be >= 1")
    if threshold < 0:
        raise ValueError("threshold must be >= 0")
    # Shortcuts where the interval bounds already decide the answer.
    if aabb_max_distance(a, b) <= threshold:
        return 1.0
    if aabb_min_distance(a, b) > threshold:
        return 0.0

    rng = np.random.default_rng(seed)
    a_lo = np.asarray(a.lo)
    a_span = np.asarray(a.edges)
    b_lo = np.asarray(b.lo)
    b_span = np.asarray(b.edges)
    thr_sq = threshold * threshold

    hits = 0
    remaining = samples
    while remaining > 0:
        m = min(remaining, _MC_CHUNK)
        u = rng.random((m, 6))
        x = a_lo + u[:, :3] * a_span
        y = b_lo + u[:, 3:] * b_span
        d_sq = ((x - y) ** 2).sum(axis=1)
        hits += int((d_sq <= thr_sq).sum())
        remaining -= m
    return hits / samples

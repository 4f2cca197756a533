"""Regenerate the reference value for the same-unit-cube contact probability.

Independent of the package: its own sampling loop and RNG stream, plus an
exact cross-check by quadrature of the distance density between two uniform
points in the unit cube:

    f(s) = 4*pi*s^2 - 6*pi*s^3 + 8*s^4 - s^5        for 0 <= s <= 1
    P(d <= r) = integral of f over [0, r]
             = (4*pi/3) r^3 - (3*pi/2) r^4 + (8/5) r^5 - (1/6) r^6

Run:  python3 tools/mc_reference.py [n_samples]
"""

import math
import sys

import numpy as np

THRESHOLD = 0.1


def exact_cdf(r: float) -> float:
    return (4 * math.pi / 3) * r**3 - (3 * math.pi / 2) * r**4 + (8 / 5) * r**5 - r**6 / 6


def estimate(n: int, seed: int = 987654321) -> float:
    rng = np.random.default_rng(seed)
    chunk = 5_000_000
    thr_sq = THRESHOLD * THRESHOLD
    hits = 0
    remaining = n
    while remaining > 0:
        m = min(remaining, chunk)
        x = rng.random((m, 3))
        y = rng.random((m, 3))
        hits += int((((x - y) ** 2).sum(axis=1) <= thr_sq).sum())
        remaining -= m
    return hits / n


def main() -> None:
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 100_000_000
    p = estimate(n)
    exact = exact_cdf(THRESHOLD)
    se = math.sqrt(p * (1 - p) / n)
    print(f"n = {n}")
    print(f"monte carlo estimate = {p:.8e}  (std err {se:.2e})")
    print(f"exact distance CDF   = {exact:.8e}")
    print(f"difference           = {abs(p - exact):.2e}  ({abs(p - exact) / se:.2f} std errs)")


if __name__ == "__main__":
    main()

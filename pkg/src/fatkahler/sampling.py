"""Random schemes for property checks and experiments.

All samplers take a ``random.Random`` instance so runs are reproducible.
"""
from __future__ import annotations

from fractions import Fraction

from .schemes import FatPointScheme, PointP1P1, is_acm

SMALL_RATIONALS = tuple(
    sorted({Fraction(n, d) for n in range(-3, 4) for d in (1, 2, 3)})
)


def _coordinate(rng, allow_infinity):
    if allow_infinity and rng.random() < 0.1:
        return (0, 1)
    return (1, rng.choice(SMALL_RATIONALS))


def _distinct_coordinates(rng, count, allow_infinity):
    seen = []
    while len(seen) < count:
        c = _coordinate(rng, allow_infinity and (0, 1) not in seen)
        if c not in seen:
            seen.append(c)
    return seen


def random_scheme(rng, max_points=6, max_mult=3, min_mult=1, allow_infinity=True):
    """Random fat point scheme with coordinates among small rationals."""
    n = rng.randint(1, max_points)
    xs = _distinct_coordinates(rng, rng.randint(1, n), allow_infinity)
    ys = _distinct_coordinates(rng, rng.randint(1, n), allow_infinity)
    cells = [(x, y) for x in xs for y in ys]
    rng.shuffle(cells)
    chosen = cells[:n]
    return FatPointScheme(
        tuple((PointP1P1(x, y), rng.randint(min_mult, max_mult)) for x, y in chosen)
    )


def random_ferrers_scheme(rng, max_points=6, max_mult=1, min_mult=1, allow_infinity=True):
    """Points on a Ferrers diagram, multiplicities non-increasing along rows and columns.

    Row k uses the first lambda_k second coordinates for a partition lambda.
    Such schemes are often, though not always, ACM.
    """
    while True:
        parts = []
        remaining = rng.randint(1, max_points)
        bound = remaining
        while remaining:
            p = rng.randint(1, min(bound, remaining))
            parts.append(p)
            remaining -= p
            bound = p
        parts.sort(reverse=True)
        if sum(parts) <= max_points:
            break
    xs = _distinct_coordinates(rng, len(parts), allow_infinity)
    ys = _distinct_coordinates(rng, parts[0], allow_infinity)
    mult = {}
    for a, width in enumerate(parts):
        for b in range(width):
            cap = min(mult.get((a - 1, b), max_mult), mult.get((a, b - 1), max_mult))
            mult[(a, b)] = rng.randint(min(min_mult, cap), cap)
    entries = tuple((PointP1P1(xs[a], ys[b]), m) for (a, b), m in mult.items())
    return FatPointScheme(entries)


def random_acm_scheme(rng, max_points=6, max_mult=1, min_mult=1, allow_infinity=True, tries=200):
    """A Ferrers-shaped scheme accepted by the ACM test."""
    for _ in range(tries):
        Y = random_ferrers_scheme(rng, max_points, max_mult, min_mult, allow_infinity)
        if is_acm(Y):
            return Y
    raise RuntimeError("no ACM scheme found; loosen the sampling parameters")

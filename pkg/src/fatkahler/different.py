"""Minimal generators of I_Y and the Kaehler different of an ACM scheme.

Minimal generators are found degree by degree.  When X0 is a
nonzerodivisor on R_Y, the part of I_(i,j) not already generated from
lower degrees is visible in the coefficients of the monomials
X1^i * Y0^(j-b) * Y1^b alone: reducing modulo X0 kills X0 * I_(i-1,j)
and nothing else of I_(i,j).  The search then works in a space of
dimension j + 1 instead of (i+1)(j+1).

The Kaehler different is the ideal of 2x2 minors d(F_a, F_b)/d(X1, Y1)
of a generating set, taken in coordinates where X0, Y0 is a regular
sequence.  Its Hilbert function is computed with jets: the image of
theta in R_(i,j) is spanned by the jets of minors of bidegree (i,j) and
the products of variables with theta in the two neighbouring bidegrees.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError, SearchCapError
from .linalg import EchelonBasis, kernel_from_rref, rref
from .ring import BiPoly, LinearChange, apply_change
from .schemes import (
    FatPointScheme,
    PointP1P1,
    acm_certificate,
    conditions,
    hf_value,
    ideal_dim,
    jet_space,
    tuples,
    window_matrix,
)


@dataclass(frozen=True)
class GeneratorSet:
    gens: tuple
    search_window: tuple
    verified: bool
    change: LinearChange | None = None

    @property
    def polynomials(self):
        return [g for g, _ in self.gens]

    @property
    def degrees(self):
        return [d for _, d in self.gens]


def transform_points(Y, cx=0, cy=0):
    """Coordinates in which X0 + cx X1 and Y0 + cy Y1 become X0 and Y0."""
    entries = []
    for p, m in Y.entries:
        x = (p.x[0] + cx * p.x[1], p.x[1])
        y = (p.y[0] + cy * p.y[1], p.y[1])
        entries.append((PointP1P1(x, y), m))
    return FatPointScheme(tuple(entries))


def coordinate_change(cx=0, cy=0):
    """Change pulling forms in the transformed coordinates back to the original ones."""
    return LinearChange(((1, cx), (0, 1)), ((1, cy), (0, 1)))


def sweep_degrees(process, start, cap):
    """Visit bidegrees of a growing box until two enlargements add nothing.

    ``process(deg)`` returns the number of new items found at ``deg``.
    Returns (final box, stabilized flag).
    """
    R, C = start
    done = set()
    quiet = -1
    while True:
        todo = sorted(
            ((i, j) for i in range(R + 1) for j in range(C + 1) if (i, j) not in done),
            key=lambda d: (d[0] + d[1], d[0]),
        )
        added = 0
        for d in todo:
            added += process(d)
            done.add(d)
        quiet = quiet + 1 if added == 0 else 0
        if quiet >= 2:
            return (R, C), True
        if R + 1 > cap[0] or C + 1 > cap[1]:
            return (R, C), False
        R, C = R + 1, C + 1


class _GeneratorSweep:
    def __init__(self, Y):
        self.Y = Y
        self.reduced = {}
        self.found = []

    def __call__(self, deg):
        Y = self.Y
        i, j = deg
        n = j + 1
        eb = EchelonBasis(n)
        for w in self.reduced.get((i - 1, j), []):
            eb.add(w)
        for w in self.reduced.get((i, j - 1), []):
            eb.add(list(w) + [0])
            eb.add([0] + list(w))
        target = ideal_dim(Y, deg) - ideal_dim(Y, (i - 1, j))
        new = 0
        if eb.rank < target:
            N = (i + 1) * (j + 1)
            R, pivots = rref(conditions(Y, deg), N)
            kernel = kernel_from_rref(R, pivots, N)
            start = N - n
            for v in kernel:
                if eb.rank == target:
                    break
                if eb.add(v[start:]):
                    self.found.append((BiPoly.from_vector(v, deg), deg))
                    new += 1
        if eb.rank != target:
            raise RuntimeError(f"generator sweep lost track of dimensions at {deg}")
        self.reduced[deg] = eb.vectors()
        return new


def _x_regular_shift(Y):
    c = 0
    while any(p.x[0] + c * p.x[1] == 0 for p, _ in Y.entries):
        c += 1
    return c


def minimal_generators(Y, start=None, cap=None):
    """A minimal bihomogeneous generating set of I_Y, found by a degree sweep."""
    tb = tuples(Y)
    start = start or (tb.l, tb.l_prime)
    cap = cap or (4 * (tb.l + tb.r) + 1, 4 * (tb.l_prime + tb.t) + 1)
    cx = _x_regular_shift(Y)
    work = transform_points(Y, cx, 0) if cx else Y
    sweep = _GeneratorSweep(work)
    box, ok = sweep_degrees(sweep, start, cap)
    change = coordinate_change(cx, 0) if cx else None
    gens = sweep.found
    if change is not None:
        gens = [(apply_change(change, g), d) for g, d in gens]
    return GeneratorSet(tuple(gens), box, ok, change)


def jacobian_minors(gens):
    """All 2x2 minors d(F_a, F_b)/d(X1, Y1), nonzero ones only, with bidegrees."""
    parts = [(g.partial("X1"), g.partial("Y1")) for g in gens]
    out = []
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            minor = parts[a][0] * parts[b][1] - parts[a][1] * parts[b][0]
            if not minor.is_zero():
                out.append((minor, minor.bidegree))
    return out


def simple_point_bounds(Y):
    """(t1, t2): beyond these bidegrees theta has reached its final value.

    t1 = 2 max(sum of multiplicities on the column of P) - 2 and
    t2 = 2 max(sum on the row of P) - 2, over simple points P.
    """
    grid = Y.grid
    t1 = t2 = 0
    for (i, j), m in grid.items():
        if m == 1:
            col = sum(v for (e, f), v in grid.items() if f == j)
            row = sum(v for (e, f), v in grid.items() if e == i)
            t1 = max(t1, 2 * (col - 1))
            t2 = max(t2, 2 * (row - 1))
    return t1, t2


def theta_stable_value(Y):
    return sum(1 for m in Y.multiplicities if m == 1)


@dataclass(frozen=True)
class DifferentData:
    """The normalized scheme, its generators and the theta span per bidegree."""

    scheme: FatPointScheme
    shifts: tuple
    generators: tuple
    minors: tuple
    spans: dict


def different_spans(Y, rows, cols, generators=None):
    cert = acm_certificate(Y)
    if cert is None:
        raise PreconditionError("the Kaehler different is only computed for ACM schemes")
    cx, cy = cert.c1, cert.c2
    work = transform_points(Y, cx, cy) if (cx or cy) else Y
    if generators is None:
        gs = minimal_generators(work)
        if not gs.verified:
            raise SearchCapError("generator search did not stabilize below its cap")
        generators = gs.polynomials
    minors = jacobian_minors(generators)
    js = jet_space(work)
    by_degree = {}
    for minor, deg in minors:
        by_degree.setdefault(deg, []).append(minor)
    spans = {}
    for i in range(rows):
        for j in range(cols):
            target = hf_value(work, i, j)
            eb = EchelonBasis(js.dim)
            for minor in by_degree.get((i, j), []):
                eb.add(js.jet(minor))
            for var, lower in (("X0", (i - 1, j)), ("X1", (i - 1, j)), ("Y0", (i, j - 1)), ("Y1", (i, j - 1))):
                for w in spans.get(lower, []):
                    if eb.rank == target:
                        break
                    eb.add(js.multiply(var, w))
            spans[(i, j)] = eb.vectors()
    return DifferentData(work, (Fraction(cx), Fraction(cy)), tuple(generators), tuple(minors), spans)


def default_theta_window(Y):
    tb = tuples(Y)
    t1, t2 = simple_point_bounds(Y)
    return max(t1, 2 * tb.r - 2) + 3, max(t2, 2 * tb.t - 2) + 3


def kaehler_different_hf(Y, rows=None, cols=None, generators=None):
    """HF of the Kaehler different theta_Y inside R_Y.

    ``generators`` may replace the minimal generating set; they must
    generate the ideal of the normalized scheme (the identity
    normalization whenever X0 and Y0 vanish at no point).
    """
    dr, dc = default_theta_window(Y)
    rows = dr if rows is None else rows
    cols = dc if cols is None else cols
    data = different_spans(Y, rows, cols, generators)
    t1, t2 = simple_point_bounds(Y)
    return window_matrix(
        lambda i, j: len(data.spans[(i, j)]),
        rows,
        cols,
        row_bound=t1,
        col_bound=t2,
        eventual=theta_stable_value(Y),
    )

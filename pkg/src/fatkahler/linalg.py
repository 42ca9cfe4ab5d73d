"""Exact dense linear algebra over the rationals.

Rows are cleared of denominators and eliminated with integer arithmetic.
Each reduced row is divided by the gcd of its entries, which keeps the
integers about as small as Bareiss division does and is faster in
practice on the sparse condition matrices used here.  Pivots are chosen
deterministically: first nonzero entry, columns left to right, rows top
to bottom.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _integer_row(row):
    den = 1
    for v in row:
        if isinstance(v, Fraction) and v.denominator != 1:
            den = lcm(den, v.denominator)
    if den == 1:
        return [int(v) for v in row]
    return [int(v * den) for v in row]


def _primitive(row):
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                return row
    if g > 1:
        return [v // g for v in row]
    return row


def _width(rows, ncols):
    if ncols is not None:
        return ncols
    return len(rows[0]) if rows else 0


def _check_widths(rows, ncols):
    for r in rows:
        if len(r) != ncols:
            raise ValueError("rows have mismatched lengths")


def _echelon(rows, ncols):
    """Integer row echelon form; returns (rows, pivot columns)."""
    M = [_integer_row(r) for r in rows]
    M = [r for r in M if any(r)]
    nr = len(M)
    pivots = []
    rank = 0
    for c in range(ncols):
        if rank == nr:
            break
        p = None
        for r in range(rank, nr):
            if M[r][c]:
                p = r
                break
        if p is None:
            continue
        M[rank], M[p] = M[p], M[rank]
        piv = M[rank]
        pv = piv[c]
        tail = piv[c + 1:]
        for r in range(rank + 1, nr):
            row = M[r]
            f = row[c]
            if f:
                g = gcd(pv, f)
                a, b = pv // g, f // g
                new = [a * x - b * y for x, y in zip(row[c + 1:], tail)]
                M[r] = [0] * (c + 1) + _primitive(new)
        pivots.append(c)
        rank += 1
    return M[:rank], pivots


def rank_exact(rows, ncols=None):
    """Rank of a matrix given as a list of rows of ints or Fractions."""
    rows = list(rows)
    ncols = _width(rows, ncols)
    _check_widths(rows, ncols)
    return len(_echelon(rows, ncols)[1])


def rref(rows, ncols=None):
    """Reduced row echelon form as (rows of Fractions, pivot columns)."""
    rows = list(rows)
    ncols = _width(rows, ncols)
    _check_widths(rows, ncols)
    E, pivots = _echelon(rows, ncols)
    for k in range(len(E) - 1, -1, -1):
        c = pivots[k]
        base = E[k]
        pv = base[c]
        for r in range(k):
            f = E[r][c]
            if f:
                g = gcd(pv, f)
                a, b = pv // g, f // g
                E[r] = _primitive([a * x - b * y for x, y in zip(E[r], base)])
    R = []
    for row, c in zip(E, pivots):
        pv = row[c]
        R.append([Fraction(v, pv) if v else Fraction(0) for v in row])
    return R, pivots


def kernel_from_rref(R, pivots, ncols):
    """Right null space basis read off a reduced echelon form.

    There is one vector per free column f, with a 1 at f and zeros at the
    other free columns, so the basis is canonical.
    """
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(R, pivots):
            if row[f]:
                v[c] = -row[f]
        basis.append(v)
    return basis


def kernel_basis(rows, ncols=None):
    rows = list(rows)
    ncols = _width(rows, ncols)
    R, pivots = rref(rows, ncols)
    return kernel_from_rref(R, pivots, ncols)


def span_dim(vectors):
    vectors = list(vectors)
    if not vectors:
        return 0
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise ValueError("vectors have mismatched lengths")
    return rank_exact(vectors, n)


def transpose(rows, ncols=None):
    rows = list(rows)
    ncols = _width(rows, ncols)
    return [[r[c] for r in rows] for c in range(ncols)]


def mat_vec(rows, vec):
    return [sum(a * b for a, b in zip(row, vec) if a and b) for row in rows]


class EchelonBasis:
    """Incrementally grown basis of a subspace of K^n.

    ``add`` reports whether a vector enlarged the span.  Stored rows are
    primitive integer vectors whose first nonzero entries sit in distinct
    columns.
    """

    def __init__(self, n):
        self.n = n
        self._rows = {}

    def __len__(self):
        return len(self._rows)

    @property
    def rank(self):
        return len(self._rows)

    def _reduce(self, vec):
        if len(vec) != self.n:
            raise ValueError("vector has the wrong length")
        v = _integer_row(vec)
        for c in sorted(self._rows):
            f = v[c]
            if f:
                row = self._rows[c]
                pv = row[c]
                g = gcd(pv, f)
                a, b = pv // g, f // g
                v = _primitive([a * x - b * y for x, y in zip(v, row)])
        return v

    def contains(self, vec):
        return not any(self._reduce(vec))

    def add(self, vec):
        v = self._reduce(vec)
        for c, x in enumerate(v):
            if x:
                if x < 0:
                    v = [-y for y in v]
                self._rows[c] = v
                return True
        return False

    def vectors(self):
        return [list(self._rows[c]) for c in sorted(self._rows)]

"""Separators of fat points, point removal, and the CBP / CI / ACI tests.

Minimal separators of a point P of multiplicity m generate I_Y' / I_Y,
where Y' lowers the multiplicity of P by one.  In jet coordinates an
element of I_Y' is zero at every point except in the top-order jet at P,
a space of dimension m.  Multiplying such an element by a variable only
rescales that top-order jet, by the value of the variable at P, so the
part generated from lower degrees is the sum of the two neighbouring
images.  The sweep therefore works in dimension m.
"""
from __future__ import annotations

from .different import (
    different_spans,
    minimal_generators,
    sweep_degrees,
)
from .errors import InconsistencyError, PreconditionError
from .linalg import EchelonBasis, kernel_from_rref, mat_vec, rref
from .ring import BiPoly, preceq
from .schemes import (
    conditions,
    default_window,
    hf,
    hf_value,
    is_acm,
    jet_space,
    point_conditions,
    tuples,
    window_matrix,
)


def _block_offset(Y, index):
    off = 0
    for k, (_, m) in enumerate(Y.entries):
        if k == index:
            return off, m
        off += m * (m + 1) // 2
    raise IndexError(f"no point with index {index}")


def degree_tuple_acm(Y, index):
    """Separator degrees of an ACM scheme at one point, from multiplicities alone."""
    if not is_acm(Y):
        raise PreconditionError("the degree tuple formula needs an ACM scheme")
    grid = Y.grid
    pi, pj = Y.position(index)
    m = Y.entries[index][1]
    col = [v for (e, f), v in grid.items() if f == pj]
    row = [v for (e, f), v in grid.items() if e == pi]

    def a(ell):
        return sum(max(v - ell, 0) for v in col)

    def b(ell):
        return sum(max(v - ell, 0) for v in row)

    return [(a(m - 1 - k) - 1, b(k) - 1) for k in range(m)]


class _SeparatorSweep:
    def __init__(self, Y, index):
        self.Y = Y
        self.index = index
        self.offset, self.m = _block_offset(Y, index)
        self.smaller = Y.with_multiplicity(index, self.m - 1)
        self.images = {}
        self.found = []

    def __call__(self, deg):
        i, j = deg
        m = self.m
        eb = EchelonBasis(m)
        for lower in ((i - 1, j), (i, j - 1)):
            for w in self.images.get(lower, []):
                eb.add(w)
        target = hf_value(self.Y, i, j) - hf_value(self.smaller, i, j)
        new = 0
        if eb.rank < target:
            rows = conditions(self.Y, deg)
            top_start = self.offset + m * (m - 1) // 2
            top = rows[top_start:top_start + m]
            rest = rows[:top_start] + rows[top_start + m:]
            N = (i + 1) * (j + 1)
            R, pivots = rref(rest, N)
            for v in kernel_from_rref(R, pivots, N):
                if eb.rank == target:
                    break
                if eb.add(mat_vec(top, v)):
                    self.found.append((BiPoly.from_vector(v, deg), deg))
                    new += 1
        if eb.rank != target:
            raise RuntimeError(f"separator sweep lost track of dimensions at {deg}")
        self.images[deg] = eb.vectors()
        return new


def minimal_separators(Y, index, start=None, cap=None):
    """Minimal separators of the point with the given entry index, sorted by degree."""
    tb = tuples(Y)
    start = start or (tb.l, tb.l_prime)
    cap = cap or (4 * (tb.l + tb.r) + 1, 4 * (tb.l_prime + tb.t) + 1)
    sweep = _SeparatorSweep(Y, index)
    _, ok = sweep_degrees(sweep, start, cap)
    if not ok:
        raise RuntimeError("separator search reached its cap")
    return sorted(sweep.found, key=lambda item: item[1])


def separator_degrees(Y, index):
    return [d for _, d in minimal_separators(Y, index)]


def is_separator(F, Y, index):
    if F.is_zero():
        return False
    deg = F.bidegree
    if deg is None:
        raise ValueError("a separator must be bihomogeneous")
    vec = F.coefficient_vector(deg)
    for k, (p, m) in enumerate(Y.entries):
        values = mat_vec(point_conditions(p, m, deg), vec)
        if k == index:
            lower = m * (m - 1) // 2
            if any(values[:lower]) or not any(values[lower:]):
                return False
        elif any(values):
            return False
    return True


def _indicator_window(degrees, rows, cols):
    return [[int(any(preceq(d, (i, j)) for d in degrees)) for j in range(cols)] for i in range(rows)]


def hf_remove_point(X, index, rows=None, cols=None):
    """HF of X without one point: HF_X minus the up-set of its separator degrees."""
    if not X.is_reduced():
        raise PreconditionError("point removal is defined here for reduced schemes")
    H = hf(X, rows, cols)
    ind = _indicator_window(separator_degrees(X, index), H.rows, H.cols)
    return window_matrix(lambda i, j: H[i, j] - ind[i][j], H.rows, H.cols, eventual=X.degree - 1)


def cbp_by_separators(X):
    degs = [tuple(separator_degrees(X, k)) for k in range(len(X))]
    return len(set(degs)) <= 1


def cbp_by_deletion(X):
    rows, cols = default_window(X)
    windows = {hf(X.remove(k), rows, cols).data for k in range(len(X))}
    return len(windows) <= 1


def is_cbp(X, method="auto"):
    """Cayley-Bacharach property of a reduced scheme."""
    if not X.is_reduced():
        raise PreconditionError("the Cayley-Bacharach property is defined for reduced schemes")
    if method == "separators":
        return cbp_by_separators(X)
    if method == "deletion":
        return cbp_by_deletion(X)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    if is_acm(X):
        return cbp_by_separators(X)
    return cbp_by_deletion(X)


def is_ci(X):
    if not X.is_reduced():
        raise PreconditionError("is_ci expects a reduced scheme")
    degs = minimal_generators(X).degrees
    if len(degs) != 2:
        return False
    a, b = sorted(degs)
    return a[0] == 0 and a[1] > 0 and b[1] == 0 and b[0] > 0


def is_aci(X, cross_check=True):
    """Exactly three minimal generators, tested as: ACM with alpha two-valued."""
    if not X.is_reduced():
        raise PreconditionError("is_aci expects a reduced scheme")
    acm = is_acm(X)
    result = acm and len(set(tuples(X).alpha)) == 2
    if cross_check and acm:
        count = len(minimal_generators(X).degrees)
        if result != (count == 3):
            raise InconsistencyError(
                f"alpha criterion says {result} but the scheme has {count} minimal generators"
            )
    return result


def cbp_different_criterion(X):
    """True iff theta_X holds no separator of any point below (2r-2, 2t-2)."""
    if not X.is_reduced():
        raise PreconditionError("the criterion is stated for reduced schemes")
    if not is_acm(X):
        raise PreconditionError("the criterion needs an ACM scheme")
    tb = tuples(X)
    corner = (2 * tb.r - 2, 2 * tb.t - 2)
    data = different_spans(X, corner[0] + 1, corner[1] + 1)
    s = jet_space(data.scheme).dim
    for deg, basis in data.spans.items():
        if deg == corner or not basis:
            continue
        eb = EchelonBasis(s)
        for w in basis:
            eb.add(w)
        for k in range(s):
            unit = [0] * s
            unit[k] = 1
            if eb.contains(unit):
                return False
    return True

"""Fat point schemes in P1 x P1 and their bigraded Hilbert functions.

A fat point m*P imposes the conditions "F lies in the m-th power of the
ideal of P".  After a linear change carrying P to [1:0]x[1:0] these are the
vanishing of the coefficients of X0^(i-u) X1^u Y0^(j-v) Y1^v, u + v < m.
Dehomogenizing (X0 = Y0 = 1, X1 = t, Y1 = s) identifies them with the
Taylor coefficients of order < m at P, which we call the jet of F.  The
row (P, u, v) of every condition matrix is the jet coordinate (P, u, v), so
jets of different bidegrees live in one common space and multiplication by
a variable is a fixed linear map on it.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import comb

from .errors import MalformedSchemeError, PreconditionError
from .linalg import EchelonBasis, kernel_basis, rank_exact
from .ring import (
    BiPoly,
    carrying_matrix,
    dehomogenized_coefficients,
    exact,
    monomial_basis,
    preceq,
)

# points


def _normalize(pair):
    a0, a1 = (Fraction(v) for v in pair)
    if a0:
        return (Fraction(1), a1 / a0)
    if a1:
        return (Fraction(0), Fraction(1))
    raise ValueError("(0, 0) is not a point of P1")


def _rational(v):
    if isinstance(v, str):
        v = v.strip()
    return Fraction(v)


@dataclass(frozen=True)
class PointP1P1:
    """A point [a0:a1] x [b0:b1], stored with each first nonzero coordinate 1."""

    x: tuple
    y: tuple

    def __post_init__(self):
        object.__setattr__(self, "x", _normalize(tuple(_rational(v) for v in self.x)))
        object.__setattr__(self, "y", _normalize(tuple(_rational(v) for v in self.y)))

    @cached_property
    def xmat(self):
        return carrying_matrix(self.x)

    @cached_property
    def ymat(self):
        return carrying_matrix(self.y)

    def __str__(self):
        return f"[{self.x[0]}:{self.x[1]}]x[{self.y[0]}:{self.y[1]}]"


def affine_point(a, b):
    """The point [1:a] x [1:b]."""
    return PointP1P1((1, a), (1, b))


# schemes


@dataclass(frozen=True)
class FatPointScheme:
    """Distinct points with positive multiplicities; entry order is kept."""

    entries: tuple = ()

    def __post_init__(self):
        cleaned = []
        seen = set()
        for p, m in self.entries:
            if not isinstance(p, PointP1P1):
                raise TypeError("entries must be (PointP1P1, multiplicity) pairs")
            if not isinstance(m, int) or m < 1:
                raise ValueError(f"multiplicity must be a positive integer, got {m!r}")
            if p in seen:
                raise ValueError(f"duplicate point {p}")
            seen.add(p)
            cleaned.append((p, m))
        object.__setattr__(self, "entries", tuple(cleaned))

    def __len__(self):
        return len(self.entries)

    @property
    def points(self):
        return [p for p, _ in self.entries]

    @property
    def multiplicities(self):
        return [m for _, m in self.entries]

    @cached_property
    def degree(self):
        return sum(comb(m + 1, 2) for _, m in self.entries)

    def is_reduced(self):
        return all(m == 1 for _, m in self.entries)

    @cached_property
    def first_components(self):
        return sorted({p.x for p, _ in self.entries})

    @cached_property
    def second_components(self):
        return sorted({p.y for p, _ in self.entries})

    @cached_property
    def grid(self):
        """Map (row index, column index) -> multiplicity."""
        rows = {q: k for k, q in enumerate(self.first_components)}
        cols = {q: k for k, q in enumerate(self.second_components)}
        return {(rows[p.x], cols[p.y]): m for p, m in self.entries}

    def position(self, index):
        p = self.entries[index][0]
        return (self.first_components.index(p.x), self.second_components.index(p.y))

    def with_multiplicity(self, index, m):
        """Copy with the multiplicity of one entry changed; m = 0 drops it."""
        out = []
        for k, (p, mult) in enumerate(self.entries):
            if k == index:
                if m > 0:
                    out.append((p, m))
            else:
                out.append((p, mult))
        return FatPointScheme(tuple(out))

    def remove(self, index):
        return self.with_multiplicity(index, 0)

    def __str__(self):
        return " + ".join(f"{m}*{p}" for p, m in self.entries) or "empty scheme"


def scheme_from_grid(mults):
    """Scheme from a map {(a, b): m} of points [1:a] x [1:b]."""
    return FatPointScheme(tuple((affine_point(a, b), m) for (a, b), m in mults.items()))


def thicken(Y):
    return FatPointScheme(tuple((p, m + 1) for p, m in Y.entries))


def equimultiple(X, m):
    if m < 1:
        raise ValueError("multiplicity must be positive")
    return FatPointScheme(tuple((p, m) for p, _ in X.entries))


def grid_ci(d1, d2):
    """The reduced grid {[1:i] x [1:j] : 1 <= i <= d1, 1 <= j <= d2}."""
    if d1 < 1 or d2 < 1:
        raise ValueError("grid sizes must be positive")
    return scheme_from_grid({(i, j): 1 for i in range(1, d1 + 1) for j in range(1, d2 + 1)})


def from_spec(data):
    """Scheme from a parsed document ``{"points": [{"x": [..], "y": [..], "m": k}, ...]}``."""
    if not isinstance(data, dict) or "points" not in data:
        raise MalformedSchemeError("scheme document needs a 'points' list")
    pts = data["points"]
    if not isinstance(pts, list):
        raise MalformedSchemeError("'points' must be a list")
    entries = []
    for k, item in enumerate(pts):
        try:
            x, y = item["x"], item["y"]
            m = item.get("m", 1)
            if len(x) != 2 or len(y) != 2 or isinstance(m, bool) or not isinstance(m, int):
                raise ValueError
            entries.append((PointP1P1(tuple(x), tuple(y)), m))
        except (KeyError, TypeError, ValueError, ZeroDivisionError, AttributeError):
            raise MalformedSchemeError(f"point {k} is malformed: {item!r}") from None
    try:
        return FatPointScheme(tuple(entries))
    except (ValueError, TypeError) as exc:
        raise MalformedSchemeError(str(exc)) from None


def to_spec(Y):
    def s(v):
        return str(v)

    return {
        "points": [
            {"x": [s(p.x[0]), s(p.x[1])], "y": [s(p.y[0]), s(p.y[1])], "m": m}
            for p, m in Y.entries
        ]
    }


def load_document(path):
    with open(path) as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise MalformedSchemeError(f"not valid JSON: {exc}") from None


def load_scheme(path):
    return from_spec(load_document(path))


# condition matrices and jets


def _jet_rows(m):
    """Row order inside one point block: by total order, then by u."""
    return [(u, k - u) for k in range(m) for u in range(k + 1)]


def _jet_position(u, v):
    k = u + v
    return k * (k + 1) // 2 + u


@lru_cache(maxsize=65536)
def _axis_coefficients(mat, exps, order):
    return dehomogenized_coefficients(mat, exps, order)


def point_conditions(p, m, deg):
    """Rows whose common kernel is the degree ``deg`` part of the ideal of m*p."""
    if m < 1:
        raise ValueError("multiplicity must be at least 1")
    i, j = deg
    if i < 0 or j < 0:
        raise ValueError("bidegree must be nonnegative")
    xc = [_axis_coefficients(p.xmat, (i - a1, a1), m) for a1 in range(i + 1)]
    yc = [_axis_coefficients(p.ymat, (j - b1, b1), m) for b1 in range(j + 1)]
    rows = []
    for u, v in _jet_rows(m):
        row = []
        for a1 in range(i + 1):
            cu = xc[a1][u]
            if cu:
                row.extend(cu * yc[b1][v] for b1 in range(j + 1))
            else:
                row.extend([0] * (j + 1))
        rows.append(row)
    return rows


def conditions(Y, deg):
    """Stacked point conditions of all entries, in entry order."""
    rows = []
    for p, m in Y.entries:
        rows.extend(point_conditions(p, m, deg))
    return rows


_HF_CACHE = {}


def hf_value(Y, i, j):
    """HF_Y(i, j) as the rank of the stacked condition matrix."""
    if i < 0 or j < 0:
        return 0
    key = (Y, i, j)
    hit = _HF_CACHE.get(key)
    if hit is not None:
        return hit
    deg = Y.degree
    # HF_Y is nondecreasing and bounded by deg(Y); once saturated it stays so
    if _HF_CACHE.get((Y, i - 1, j)) == deg or _HF_CACHE.get((Y, i, j - 1)) == deg:
        value = deg
    else:
        value = rank_exact(conditions(Y, (i, j)), (i + 1) * (j + 1))
    _HF_CACHE[key] = value
    return value


def ideal_dim(Y, deg):
    i, j = deg
    if i < 0 or j < 0:
        return 0
    return (i + 1) * (j + 1) - hf_value(Y, i, j)


def ideal_basis(Y, deg):
    i, j = deg
    if i < 0 or j < 0:
        return []
    n = (i + 1) * (j + 1)
    return [BiPoly.from_vector(v, deg) for v in kernel_basis(conditions(Y, deg), n)]


class JetSpace:
    """Jets of order < m_P at every point P of a scheme, concatenated.

    ``jet(F)`` equals ``conditions(Y, deg F) @ coefficients(F)``.
    """

    def __init__(self, Y):
        self.scheme = Y
        self.blocks = []
        offset = 0
        for p, m in Y.entries:
            self.blocks.append((offset, m, p.xmat, p.ymat))
            offset += comb(m + 1, 2)
        self.dim = offset
        self._basis = {}

    def jet(self, F):
        out = [0] * self.dim
        for offset, m, xm, ym in self.blocks:
            rows = _jet_rows(m)
            for (a0, a1, b0, b1), c in F:
                xc = _axis_coefficients(xm, (a0, a1), m)
                yc = _axis_coefficients(ym, (b0, b1), m)
                for k, (u, v) in enumerate(rows):
                    if xc[u] and yc[v]:
                        out[offset + k] += c * xc[u] * yc[v]
        return [exact(v) for v in out]

    def multiply(self, var, w):
        """Jet of var*F from the jet w of F; var is 'X0', 'X1', 'Y0' or 'Y1'."""
        axis, k = var[0], int(var[1])
        out = [0] * self.dim
        for offset, m, xm, ym in self.blocks:
            c0, c1 = (xm if axis == "X" else ym)[k]
            for idx, (u, v) in enumerate(_jet_rows(m)):
                val = c0 * w[offset + idx] if c0 else 0
                if c1:
                    if axis == "X" and u:
                        val += c1 * w[offset + _jet_position(u - 1, v)]
                    elif axis == "Y" and v:
                        val += c1 * w[offset + _jet_position(u, v - 1)]
                out[offset + idx] = val
        return out

    def multiply_form(self, form, w):
        """Jet of L*F for a linear form L given as {'X0': c0, 'X1': c1} etc."""
        out = [0] * self.dim
        for var, c in form.items():
            if c:
                prod = self.multiply(var, w)
                out = [a + c * b for a, b in zip(out, prod)]
        return out

    def ring_basis(self, deg):
        """Jets spanning the image of S_deg, i.e. a basis of R_deg."""
        deg = tuple(deg)
        if deg in self._basis:
            return self._basis[deg]
        i, j = deg
        if i < 0 or j < 0:
            return []
        if (i, j) == (0, 0):
            one = self.jet(BiPoly.constant(1))
            basis = [one] if any(one) else []
        else:
            if i > 0:
                lower, names = self.ring_basis((i - 1, j)), ("X0", "X1")
            else:
                lower, names = self.ring_basis((i, j - 1)), ("Y0", "Y1")
            eb = EchelonBasis(self.dim)
            for name in names:
                for w in lower:
                    if eb.rank == self.dim:
                        break
                    eb.add(self.multiply(name, w))
            basis = eb.vectors()
        self._basis[deg] = basis
        return basis


@lru_cache(maxsize=256)
def jet_space(Y):
    return JetSpace(Y)


# Hilbert matrices


@dataclass(frozen=True)
class HilbertMatrix:
    """A finite window of a bigraded Hilbert function with stabilization data."""

    data: tuple
    row_bound: int | None = None
    col_bound: int | None = None
    eventual: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "data", tuple(tuple(int(v) for v in row) for row in self.data))

    @property
    def rows(self):
        return len(self.data)

    @property
    def cols(self):
        return len(self.data[0]) if self.data else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def tolist(self):
        return [list(r) for r in self.data]

    def to_json_dict(self):
        return {"rows": self.rows, "cols": self.cols, "data": self.tolist(), "eventual": self.eventual}

    @classmethod
    def from_json_dict(cls, d):
        return cls(tuple(tuple(r) for r in d["data"]), eventual=d.get("eventual"))


def window_matrix(fn, rows, cols, **meta):
    return HilbertMatrix(tuple(tuple(fn(i, j) for j in range(cols)) for i in range(rows)), **meta)


# tuples


def conjugate(partition):
    """Conjugate partition: entry k counts parts >= k (k = 1, 2, ...)."""
    parts = [p for p in partition if p > 0]
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= k) for k in range(1, max(parts) + 1))


@dataclass(frozen=True)
class TupleBundle:
    alpha: tuple
    beta: tuple
    alpha_star: tuple
    beta_star: tuple
    alpha_hat: tuple
    beta_hat: tuple
    l: int
    l_prime: int
    r: int
    t: int
    nu: tuple
    nu_prime: tuple

    @staticmethod
    def entry(seq, k):
        """1-based access returning 0 past the end."""
        return seq[k - 1] if 1 <= k <= len(seq) else 0


def _line_tuples(groups):
    parts, hats, lengths, counts = [], [], [], []
    for mults in groups:
        top = max(mults)
        a = [sum(max(m - k, 0) for m in mults) for k in range(top)]
        parts.extend(a)
        hats.append(a[0] + len(mults))
        lengths.append(top)
        counts.append(len(mults))
    return parts, hats, lengths, counts


@lru_cache(maxsize=1024)
def tuples(Y):
    grid = Y.grid
    r, t = len(Y.first_components), len(Y.second_components)
    rows = [[m for (i, _), m in sorted(grid.items()) if i == k] for k in range(r)]
    cols = [[m for (_, j), m in sorted(grid.items()) if j == k] for k in range(t)]
    a, ahat, alen, nu = _line_tuples(rows)
    b, bhat, blen, nup = _line_tuples(cols)
    alpha = tuple(sorted(a, reverse=True))
    beta = tuple(sorted(b, reverse=True))
    return TupleBundle(
        alpha=alpha,
        beta=beta,
        alpha_star=conjugate(alpha),
        beta_star=conjugate(beta),
        alpha_hat=tuple(ahat),
        beta_hat=tuple(bhat),
        l=sum(alen),
        l_prime=sum(blen),
        r=r,
        t=t,
        nu=tuple(nu),
        nu_prime=tuple(nup),
    )


def default_window(Y):
    tb = tuples(Y)
    return tb.l + tb.r + 2, tb.l_prime + tb.t + 2


def hf(Y, rows=None, cols=None):
    dr, dc = default_window(Y)
    rows = dr if rows is None else rows
    cols = dc if cols is None else cols
    if rows < 0 or cols < 0:
        raise ValueError("window sizes must be nonnegative")
    tb = tuples(Y)
    return window_matrix(
        lambda i, j: hf_value(Y, i, j),
        rows,
        cols,
        row_bound=tb.l + tb.r - 1,
        col_bound=tb.l_prime + tb.t - 1,
        eventual=Y.degree,
    )


def first_difference(H):
    """Mixed second difference H(i,j) - H(i-1,j) - H(i,j-1) + H(i-1,j-1)."""
    data = H.tolist() if isinstance(H, HilbertMatrix) else [list(r) for r in H]

    def at(i, j):
        return data[i][j] if i >= 0 and j >= 0 else 0

    return [
        [at(i, j) - at(i - 1, j) - at(i, j - 1) + at(i - 1, j - 1) for j in range(len(data[i]))]
        for i in range(len(data))
    ]


# ideals given by generators


class GeneratedIdeal:
    """The ideal generated by explicit bihomogeneous polynomials.

    Used for subschemes that are not fat point schemes; only degreewise
    dimensions are computed.
    """

    def __init__(self, generators):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = BiPoly.parse(g)
            if g.is_zero():
                continue
            if not g.is_bihomogeneous():
                raise ValueError(f"generator {g} is not bihomogeneous")
            gens.append(g)
        self.generators = tuple(gens)
        self._rref = {}

    def _spanning(self, deg):
        vecs = []
        for g in self.generators:
            e = g.bidegree
            if preceq(e, deg):
                for mon in monomial_basis((deg[0] - e[0], deg[1] - e[1])):
                    vecs.append((g * BiPoly.monomial(mon)).coefficient_vector(deg))
        return vecs

    def _echelon(self, deg):
        deg = tuple(deg)
        if deg not in self._rref:
            from .linalg import rref

            n = len(monomial_basis(deg))
            self._rref[deg] = rref(self._spanning(deg), n)
        return self._rref[deg]

    def dim(self, deg):
        if deg[0] < 0 or deg[1] < 0:
            return 0
        return len(self._echelon(deg)[1])

    def basis(self, deg):
        if deg[0] < 0 or deg[1] < 0:
            return []
        return [BiPoly.from_vector(r, deg) for r in self._echelon(deg)[0]]

    def conditions(self, deg):
        """Functionals whose common kernel is the degree ``deg`` part."""
        R, pivots = self._echelon(deg)
        n = len(monomial_basis(deg))
        from .linalg import kernel_from_rref

        return kernel_from_rref(R, pivots, n)

    def hf_value(self, i, j):
        if i < 0 or j < 0:
            return 0
        return (i + 1) * (j + 1) - self.dim((i, j))

    def hf(self, rows, cols):
        return window_matrix(self.hf_value, rows, cols)

    def square(self):
        g = self.generators
        return GeneratedIdeal([g[a] * g[b] for a in range(len(g)) for b in range(a, len(g))])


# nonzerodivisors and the ACM test


@dataclass(frozen=True)
class NzdCertificate:
    """Linear forms L1 = X0 + c1*X1 and L2 = Y0 + c2*Y1 forming a regular sequence."""

    c1: Fraction
    c2: Fraction
    window: tuple = field(default=(0, 0))

    @property
    def l1(self):
        return BiPoly.variable("X0") + BiPoly.variable("X1").scale(self.c1)

    @property
    def l2(self):
        return BiPoly.variable("Y0") + BiPoly.variable("Y1").scale(self.c2)


def _avoiding(values, count):
    """First ``count`` integers c >= 0 with v0 + c*v1 != 0 for every pair."""
    out = []
    c = 0
    while len(out) < count:
        if all(v0 + c * v1 != 0 for v0, v1 in values):
            out.append(c)
        c += 1
    return out


def quotient_by_forms_hf(Y, c1, c2, i, j):
    """HF of S/(I_Y + <X0 + c1 X1, Y0 + c2 Y1>) at (i, j)."""
    if i < 0 or j < 0:
        return 0
    js = jet_space(Y)
    vecs = []
    for w in js.ring_basis((i - 1, j)):
        vecs.append(js.multiply_form({"X0": 1, "X1": c1}, w))
    for w in js.ring_basis((i, j - 1)):
        vecs.append(js.multiply_form({"Y0": 1, "Y1": c2}, w))
    image = rank_exact(vecs, js.dim) if vecs else 0
    return hf_value(Y, i, j) - image


def _degrees(rows, cols):
    return sorted(((i, j) for i in range(rows) for j in range(cols)), key=lambda d: (d[0] + d[1], d[0]))


def find_nzd_pair(Y, budget=None, rows=None, cols=None):
    """Search a regular sequence X0 + c1 X1, Y0 + c2 Y1 on R_Y.

    The pair is accepted when HF of S/(I_Y + <L1, L2>) equals the mixed
    second difference of HF_Y on the verification window (the default
    window grown by one row and one column).  Returns None when every
    candidate fails.
    """
    if budget is None:
        budget = Y.degree + 1
    if budget < Y.degree + 1:
        raise PreconditionError(f"budget must be at least deg(Y) + 1 = {Y.degree + 1}")
    dr, dc = default_window(Y)
    rows = (dr if rows is None else rows) + 1
    cols = (dc if cols is None else cols) + 1
    H = hf(Y, rows, cols)
    delta = first_difference(H)
    if any(v < 0 for row in delta for v in row):
        return None
    c1 = _avoiding([p.x for p, _ in Y.entries], 1)[0]
    order = _degrees(rows, cols)
    for c2 in _avoiding([p.y for p, _ in Y.entries], budget):
        if all(quotient_by_forms_hf(Y, c1, c2, i, j) == delta[i][j] for i, j in order):
            return NzdCertificate(Fraction(c1), Fraction(c2), (rows, cols))
    return None


@lru_cache(maxsize=1024)
def acm_certificate(Y):
    return find_nzd_pair(Y)


def is_acm(Y):
    return acm_certificate(Y) is not None

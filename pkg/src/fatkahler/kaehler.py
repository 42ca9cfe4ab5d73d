"""Hilbert function of the module of Kaehler differentials of R_Y.

Two independent routes are provided:

* ``hf_omega``: 2 HF_Y(i-1,j) + 2 HF_Y(i,j-1) + HF_Y(i,j) - HF_V(i,j), with V
  the thickening of Y (valid for fat point schemes);
* ``hf_omega_oracle``: a direct computation from the presentation
  Omega = (S dX0 + S dX1 + S dY0 + S dY1) / (dI + I * Omega_S), degree by
  degree, usable for any ideal given degreewise.

The remaining functions are closed forms valid in special situations; each
one checks its own hypotheses.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import PreconditionError
from .linalg import rank_exact
from .ring import monomial_basis, monomial_index
from .schemes import (
    FatPointScheme,
    GeneratedIdeal,
    HilbertMatrix,
    conditions,
    conjugate,
    default_window,
    first_difference,
    hf_value,
    ideal_dim,
    is_acm,
    thicken,
    tuples,
    window_matrix,
)


def omega_stable_value(Y):
    return 4 * sum(comb(m + 1, 2) for m in Y.multiplicities) - sum(m + 1 for m in Y.multiplicities)


def _window(Y, rows, cols):
    dr, dc = default_window(Y)
    return (dr if rows is None else rows), (dc if cols is None else cols)


def _meta(Y):
    tb = tuples(Y)
    return dict(row_bound=tb.l + tb.r - 1, col_bound=tb.l_prime + tb.t - 1, eventual=omega_stable_value(Y))


def omega_formula_value(hf_small, hf_thick, i, j):
    if i < 0 or j < 0:
        return 0
    return 2 * hf_small(i - 1, j) + 2 * hf_small(i, j - 1) + hf_small(i, j) - hf_thick(i, j)


def hf_omega(Y, rows=None, cols=None):
    """HF of Omega^1 from the exact sequence relating Y and its thickening."""
    if not isinstance(Y, FatPointScheme):
        raise PreconditionError("the sequence formula is only valid for fat point schemes")
    rows, cols = _window(Y, rows, cols)
    V = thicken(Y)

    def small(i, j):
        return hf_value(Y, i, j)

    def thick(i, j):
        return hf_value(V, i, j)

    return window_matrix(lambda i, j: omega_formula_value(small, thick, i, j), rows, cols, **_meta(Y))


def hf_omega_formula_ideal(ideal, rows, cols):
    """The same formula for an ideal given by generators, with I^2 as thickening.

    For such ideals the formula is not a theorem; this exists to exhibit
    where it breaks.
    """
    square = ideal.square()
    return window_matrix(
        lambda i, j: omega_formula_value(ideal.hf_value, square.hf_value, i, j), rows, cols
    )


# presentation oracle


def _ideal_conditions(source, deg):
    i, j = deg
    if i < 0 or j < 0:
        return []
    if isinstance(source, FatPointScheme):
        return conditions(source, deg)
    return source.conditions(deg)


def _derivative_rows(Q, lower_deg, deg, var):
    """Rows of Q (functionals on S_lower) composed with d/d var : S_deg -> S_lower."""
    basis = monomial_basis(deg)
    out = []
    for row in Q:
        new = []
        for mon in basis:
            e = mon[var]
            if e:
                low = list(mon)
                low[var] -= 1
                new.append(e * row[monomial_index(low)])
            else:
                new.append(0)
        out.append(new)
    return out


def omega_oracle_value(source, i, j):
    """dim of Omega^1_{(i,j)} from the presentation, by direct linear algebra.

    With Q_d a matrix whose kernel is I_d, the classes of dF (F in I_d)
    in the free part modulo I*Omega_S are given by the stacked derivative
    functionals D; their span has dimension rank [Q; D] - rank Q.
    """
    if i < 0 or j < 0:
        return 0
    d, dx, dy = (i, j), (i - 1, j), (i, j - 1)
    n = (i + 1) * (j + 1)
    Q = _ideal_conditions(source, d)
    Qx = _ideal_conditions(source, dx)
    Qy = _ideal_conditions(source, dy)
    free = 2 * (rank_exact(Qx, i * (j + 1)) if i > 0 else 0)
    free += 2 * (rank_exact(Qy, (i + 1) * j) if j > 0 else 0)
    D = []
    if i > 0:
        D += _derivative_rows(Qx, dx, d, 0) + _derivative_rows(Qx, dx, d, 1)
    if j > 0:
        D += _derivative_rows(Qy, dy, d, 2) + _derivative_rows(Qy, dy, d, 3)
    relations = rank_exact(list(Q) + D, n) - rank_exact(Q, n)
    return free - relations


def hf_omega_oracle(source, rows=None, cols=None):
    """Oracle window for a fat point scheme, a GeneratedIdeal or a generator list."""
    if isinstance(source, (list, tuple)):
        source = GeneratedIdeal(source)
    if isinstance(source, FatPointScheme):
        rows, cols = _window(source, rows, cols)
        meta = _meta(source)
    else:
        if rows is None or cols is None:
            raise ValueError("a window is required for ideals given by generators")
        meta = {}
    return window_matrix(lambda i, j: omega_oracle_value(source, i, j), rows, cols, **meta)


@dataclass(frozen=True)
class OmegaReport:
    via_sequence: HilbertMatrix
    via_oracle: HilbertMatrix | None
    stable_value: int
    first_difference: list

    def agree(self):
        return self.via_oracle is None or self.via_sequence.data == self.via_oracle.data


def omega_report(Y, rows=None, cols=None, oracle=False):
    seq = hf_omega(Y, rows, cols)
    orc = hf_omega_oracle(Y, seq.rows, seq.cols) if oracle else None
    return OmegaReport(seq, orc, omega_stable_value(Y), first_difference(seq))


# special values and closed forms


def omega_special_values(Y, i, j, rule=None, anchor=None):
    """Value at (i, j) from one of the special-value rules, with its tag.

    Rule 'a': (i, j) = (0, 0) gives 0.  Rule 'b': if (I_Y)_{i,j} = 0 the
    value is 4ij + 2i + 2j.  Rule 'c': if HF_Y(i0-1,j0) = HF_Y(i0,j0) =
    HF_Y(i0,j0-1) for an anchor (i0,j0) <= (i,j) (default: (i,j) itself) the
    value is 5 HF_Y(i,j) - HF_V(i,j).  Without ``rule`` the first
    applicable rule is used.
    """
    if i < 0 or j < 0:
        raise PreconditionError("bidegree must be nonnegative")
    rules = [rule] if rule else ["a", "b", "c"]
    reasons = []
    for r in rules:
        if r == "a":
            if (i, j) == (0, 0):
                return 0, "a"
            reasons.append("rule a needs (i, j) = (0, 0)")
        elif r == "b":
            if ideal_dim(Y, (i, j)) == 0:
                return 4 * i * j + 2 * i + 2 * j, "b"
            reasons.append(f"rule b needs (I_Y)_({i},{j}) = 0")
        elif r == "c":
            i0, j0 = anchor if anchor is not None else (i, j)
            if not (0 <= i0 <= i and 0 <= j0 <= j):
                raise PreconditionError("anchor must lie below (i, j)")
            h = hf_value(Y, i0, j0)
            if hf_value(Y, i0 - 1, j0) == h == hf_value(Y, i0, j0 - 1):
                return 5 * hf_value(Y, i, j) - hf_value(thicken(Y), i, j), "c"
            reasons.append(f"rule c needs HF_Y(i0-1,j0) = HF_Y(i0,j0) = HF_Y(i0,j0-1) at {(i0, j0)}")
        else:
            raise ValueError(f"unknown rule {r!r}")
    raise PreconditionError("; ".join(reasons))


def _count_at_least(values, k):
    return sum(1 for v in values if v >= k)


def hf_omega_closed(Y, direction, index, other=None):
    """Closed form far out along one axis.

    ``large-i``: value at (i, index) for any i >= l + r - 1 (``other`` is i
    and defaults to l + r - 1).  ``large-j``: value at (index, j) for
    j >= l' + t - 1.
    """
    tb = tuples(Y)
    if direction == "large-i":
        bound, star, hat = tb.l + tb.r - 1, tb.alpha_star, tb.alpha_hat
    elif direction == "large-j":
        bound, star, hat = tb.l_prime + tb.t - 1, tb.beta_star, tb.beta_hat
    else:
        raise ValueError("direction must be 'large-i' or 'large-j'")
    other = bound if other is None else other
    if other < bound:
        raise PreconditionError(f"{direction} formula needs the other index >= {bound}, got {other}")
    if index < 0:
        return 0
    at = tb.entry
    h = min(index + 1, max(hat)) if hat else 0
    return (
        4 * sum(at(star, k) for k in range(1, index + 1))
        + 2 * at(star, index + 1)
        - sum(_count_at_least(hat, k) for k in range(1, h + 1))
    )


def _thickening_formula(alpha, alpha_hat, l, r, i, j):
    if i < 0 or j < 0:
        return 0

    def c(k, jj):
        return min(jj + 1, alpha[k]) if jj >= 0 else 0

    total = 2 * sum(c(k, j) for k in range(0, min(i - 1, l - 1) + 1))
    total += 2 * sum(c(k, j - 1) for k in range(0, min(i, l - 1) + 1))
    total += sum(c(k, j) for k in range(0, min(i, l - 1) + 1))
    total -= sum(min(j + 1, alpha_hat[k]) for k in range(0, min(i, r - 1) + 1))
    total -= sum(c(k - r, j) for k in range(r, min(i, l + r - 1) + 1))
    return total


def hf_omega_acm_thickening(Y, rows=None, cols=None):
    """Closed form when the thickening is ACM and the hat tuple dominates alpha."""
    tb = tuples(Y)
    hat = tb.alpha_hat
    for k in range(len(hat) - 1):
        if hat[k] < hat[k + 1]:
            raise PreconditionError(f"alpha_hat is not non-increasing: alpha_hat = {hat}")
    if hat and tb.alpha and hat[-1] < tb.alpha[0]:
        raise PreconditionError(f"need alpha_hat_r >= alpha_1, got {hat[-1]} < {tb.alpha[0]}")
    if not is_acm(thicken(Y)):
        raise PreconditionError("the thickening of Y is not ACM")
    rows, cols = _window(Y, rows, cols)
    return window_matrix(
        lambda i, j: _thickening_formula(tb.alpha, hat, tb.l, tb.r, i, j), rows, cols, **_meta(Y)
    )


def hf_omega_equi_ci(d1, d2, m, rows, cols):
    """Closed form for m times a reduced d1 x d2 grid, d1 <= d2."""
    if min(d1, d2, m) < 1:
        raise PreconditionError("d1, d2 and m must be positive")
    if d1 > d2:
        raise PreconditionError("need d1 <= d2 (swap the inputs)")
    alpha = tuple(k * d2 for k in range(m, 0, -1) for _ in range(d1))
    hat = tuple((m + 1) * d2 for _ in range(d1))
    return window_matrix(lambda i, j: _thickening_formula(alpha, hat, m * d1, d1, i, j), rows, cols)


def delta_template_ci(d1, d2, m):
    """First difference of HF_Omega for m times a reduced d1 x d2 grid, as blocks.

    Block k (rows k*d1 .. k*d1 + d1 - 1) has a leading run of length
    (m-k)*d2 followed by a run of length d2; the last block has only the
    second run.  All entries outside the blocks vanish.
    """
    if min(d1, d2, m) < 1:
        raise PreconditionError("d1, d2 and m must be positive")
    rows, cols = (m + 1) * d1 + 1, (m + 1) * d2 + 1
    T = [[0] * cols for _ in range(rows)]
    for k in range(m + 1):
        lead = (m - k) * d2
        for s in range(d1):
            row = T[k * d1 + s]
            first = s == 0
            if lead:
                opening = k == 0 and first
                row[0] = 0 if opening else 2
                for c in range(1, lead):
                    row[c] = 2 if opening else 4
                head, rest = (3, 1) if (k > 0 and first) else (1, -1)
            else:
                head, rest = (1, 1) if first else (-1, -1)
            row[lead] = head
            for c in range(lead + 1, lead + d2):
                row[c] = rest
    return T


def _aci_alpha(a, b, d1, d2, m):
    parts = [d1 * (m - k) for k in range(m) for _ in range(a)]
    parts += [d2 * (m - k) for k in range(m) for _ in range(b)]
    return tuple(sorted(parts, reverse=True))


def hf_omega_aci(a, b, d1, d2, m, j, i):
    """Closed form on the rows i >= (m+1)(a+b) - 1 for m times a reduced ACI.

    The reduced scheme has a rows with d1 points and b rows with d2 points.
    """
    if min(a, b, d2, m) < 1 or d1 <= d2:
        raise PreconditionError("need a, b, m >= 1 and d1 > d2 >= 1")
    if i < (m + 1) * (a + b) - 1:
        raise PreconditionError(f"need i >= (m+1)(a+b)-1 = {(m + 1) * (a + b) - 1}, got {i}")
    if j < 0:
        return 0
    star = conjugate(_aci_alpha(a, b, d1, d2, m))

    def at(k):
        return star[k - 1] if 1 <= k <= len(star) else 0

    if j < (m + 1) * d2:
        delta = (j + 1) * (a + b)
    elif j < (m + 1) * d1:
        delta = (j + 1) * a + (m + 1) * b * d2
    else:
        delta = (m + 1) * (a * d1 + b * d2)
    return 4 * sum(at(k) for k in range(1, j + 1)) + 2 * at(j + 1) - delta

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fatkahler.errors import PreconditionError
from fatkahler.kaehler import (
    delta_template_ci,
    hf_omega,
    hf_omega_acm_thickening,
    hf_omega_aci,
    hf_omega_closed,
    hf_omega_equi_ci,
    hf_omega_formula_ideal,
    hf_omega_oracle,
    omega_report,
    omega_special_values,
    omega_stable_value,
)
from fatkahler.linalg import rank_exact
from fatkahler.ring import BiPoly, monomial_basis
from fatkahler.sampling import random_scheme
from fatkahler.schemes import (
    FatPointScheme,
    GeneratedIdeal,
    PointP1P1,
    equimultiple,
    first_difference,
    grid_ci,
    ideal_basis,
    scheme_from_grid,
    tuples,
)
from reference_data import (
    DELTA_TRIPLE_GRID_2X3,
    L_SHAPE,
    MIXED_Y,
    NON_REDUCED_FORMULA,
    NON_REDUCED_GENERATORS,
    NON_REDUCED_OMEGA,
    OMEGA_TRIPLE_ACI,
    OMEGA_Y,
    TRIPLE_ACI,
    TRIPLE_ACI_PARAMS,
)
from strategies import schemes

ONE_POINT = FatPointScheme(((PointP1P1((1, 2), (1, -1)), 1),))


def test_mixed_scheme_omega_fixture():
    H = hf_omega(MIXED_Y, 9, 9)
    assert H.tolist() == OMEGA_Y
    assert H[2, 2] == 24
    assert H.eventual == 31


def test_mixed_scheme_oracle_agrees():
    assert hf_omega_oracle(MIXED_Y, 9, 9).tolist() == OMEGA_Y


def test_non_reduced_ideal_breaks_the_formula():
    ideal = GeneratedIdeal(NON_REDUCED_GENERATORS)
    oracle = hf_omega_oracle(ideal, 4, 4).tolist()
    formula = hf_omega_formula_ideal(ideal, 4, 4).tolist()
    assert oracle == NON_REDUCED_OMEGA
    assert formula == NON_REDUCED_FORMULA
    differ = {(i, j) for i in range(4) for j in range(4) if oracle[i][j] != formula[i][j]}
    assert differ == {(3, j) for j in range(4)}


def test_formula_rejects_generator_input():
    with pytest.raises(PreconditionError):
        hf_omega(GeneratedIdeal(NON_REDUCED_GENERATORS), 3, 3)


def test_single_point():
    H = hf_omega(ONE_POINT, 4, 4)
    assert H[0, 0] == 0
    assert H[1, 1] == 2
    assert omega_stable_value(ONE_POINT) == 2
    assert hf_omega_oracle(ONE_POINT, 4, 4).data == H.data


def _literal_omega(source, i, j):
    """Span of G*dF over all F in I of degree <= (i, j), plus I*dX_k, I*dY_k."""
    shapes = [(i - 1, j), (i - 1, j), (i, j - 1), (i, j - 1)]
    sizes = [len(monomial_basis(d)) for d in shapes]
    total = sum(sizes)
    if total == 0:
        return 0

    def vector(components):
        out = []
        for comp, d, n in zip(components, shapes, sizes):
            out += comp.coefficient_vector(d) if n and not comp.is_zero() else [0] * n
        return out

    vecs = []
    zero = BiPoly()
    for k, d in enumerate(shapes):
        for F in ideal_basis(source, d):
            comps = [zero] * 4
            comps[k] = F
            vecs.append(vector(comps))
    for a in range(i + 1):
        for b in range(j + 1):
            for F in ideal_basis(source, (a, b)):
                grads = [F.partial(v) for v in ("X0", "X1", "Y0", "Y1")]
                for mon in monomial_basis((i - a, j - b)):
                    G = BiPoly.monomial(mon)
                    vecs.append(vector([G * g for g in grads]))
    return total - rank_exact(vecs, total)


@settings(max_examples=10)
@given(schemes(max_points=2, max_mult=2))
def test_literal_span_oracle(Y):
    H = hf_omega(Y, 4, 4)
    for i in range(4):
        for j in range(4):
            assert _literal_omega(Y, i, j) == H[i, j]


@settings(max_examples=15)
@given(schemes(max_points=4, max_mult=2))
def test_formula_matches_oracle(Y):
    r = omega_report(Y, oracle=True)
    assert r.agree()


def test_special_values():
    assert omega_special_values(MIXED_Y, 2, 2) == (24, "b")
    assert omega_special_values(MIXED_Y, 5, 5) == (31, "c")
    assert omega_special_values(MIXED_Y, 0, 0) == (0, "a")
    with pytest.raises(PreconditionError):
        omega_special_values(MIXED_Y, 5, 5, rule="b")
    with pytest.raises(PreconditionError):
        omega_special_values(MIXED_Y, 1, 1, rule="c")


@given(schemes(max_points=4, max_mult=2), st.integers(0, 6), st.integers(0, 6))
def test_special_values_agree_with_formula(Y, i, j):
    try:
        value, _ = omega_special_values(Y, i, j)
    except PreconditionError:
        return
    assert value == hf_omega(Y, i + 1, j + 1)[i, j]


def test_closed_form_large_i_fixture():
    values = [hf_omega_closed(MIXED_Y, "large-i", j) for j in range(9)]
    assert values == OMEGA_Y[8]
    assert values[2] == 28
    with pytest.raises(PreconditionError):
        hf_omega_closed(MIXED_Y, "large-i", 2, other=3)


@settings(max_examples=20)
@given(schemes(max_points=4, max_mult=3))
def test_closed_forms_match_formula(Y):
    tb = tuples(Y)
    bi, bj = tb.l + tb.r - 1, tb.l_prime + tb.t - 1
    H = hf_omega(Y, bi + 1, bj + 2)
    for j in range(bj + 2):
        assert hf_omega_closed(Y, "large-i", j) == H[bi, j]
    H = hf_omega(Y, bi + 2, bj + 1)
    for i in range(bi + 2):
        assert hf_omega_closed(Y, "large-j", i) == H[i, bj]


@settings(max_examples=20)
@given(schemes(max_points=4, max_mult=3))
def test_stabilization_and_monotone_decrease(Y):
    tb = tuples(Y)
    H = hf_omega(Y)
    bi, bj = tb.l + tb.r - 1, tb.l_prime + tb.t - 1
    for i in range(H.rows):
        for j in range(H.cols):
            if i >= bi and i + 1 < H.rows:
                assert H[i, j] == H[i + 1, j]
            if j >= bj and j + 1 < H.cols:
                assert H[i, j] == H[i, j + 1]
            if i >= tb.l and j >= tb.l_prime:
                if i + 1 < H.rows:
                    assert H[i, j] >= H[i + 1, j]
                if j + 1 < H.cols:
                    assert H[i, j] >= H[i, j + 1]
    assert H[bi, bj] == omega_stable_value(Y)


def test_stable_values():
    assert omega_stable_value(MIXED_Y) == 31
    assert omega_stable_value(TRIPLE_ACI) == 160


@pytest.mark.parametrize(
    "Y",
    [
        equimultiple(ONE_POINT, 2),
        equimultiple(grid_ci(2, 2), 2),
        scheme_from_grid({(1, 1): 2, (1, 2): 1, (1, 3): 3}),
    ],
)
def test_acm_thickening_formula(Y):
    rows, cols = 8, 8
    assert hf_omega_acm_thickening(Y, rows, cols).data == hf_omega(Y, rows, cols).data


def test_acm_thickening_rejects_triangle():
    with pytest.raises(PreconditionError):
        hf_omega_acm_thickening(L_SHAPE)


@pytest.mark.parametrize("d1,d2,m", [(1, 1, 1), (1, 2, 2), (2, 2, 1), (2, 3, 2), (1, 3, 3), (2, 2, 3)])
def test_equimultiple_grid_formula(d1, d2, m):
    Y = equimultiple(grid_ci(d1, d2), m)
    rows, cols = (m + 1) * d1 + 2, (m + 1) * d2 + 2
    assert hf_omega_equi_ci(d1, d2, m, rows, cols).data == hf_omega(Y, rows, cols).data


def test_equimultiple_grid_needs_sorted_sides():
    with pytest.raises(PreconditionError):
        hf_omega_equi_ci(3, 2, 1, 4, 4)


def test_delta_template_fixture():
    assert delta_template_ci(2, 3, 3) == DELTA_TRIPLE_GRID_2X3
    assert delta_template_ci(1, 1, 1) == [[0, 1, 0], [1, 0, 0], [0, 0, 0]]


@pytest.mark.parametrize("d1,d2,m", [(1, 1, 2), (1, 2, 1), (1, 3, 2), (2, 2, 2), (2, 3, 1), (3, 3, 1), (2, 2, 3)])
def test_delta_template_matches_first_difference(d1, d2, m):
    T = delta_template_ci(d1, d2, m)
    rows, cols = len(T), len(T[0])
    D = first_difference(hf_omega(equimultiple(grid_ci(d1, d2), m), rows + 2, cols + 2))
    padded = [row + [0, 0] for row in T] + [[0] * (cols + 2)] * 2
    assert D == padded


def test_aci_closed_form_on_large_rows():
    a, b, d1, d2, m = TRIPLE_ACI_PARAMS
    for i in (11, 12, 13):
        assert [hf_omega_aci(a, b, d1, d2, m, j, i) for j in range(14)] == OMEGA_TRIPLE_ACI[i]
    assert hf_omega_aci(a, b, d1, d2, m, 13, 11) == 160
    with pytest.raises(PreconditionError):
        hf_omega_aci(a, b, d1, d2, m, 3, 10)


def test_aci_closed_form_small_scheme():
    # the L-shape has one row of 2 points and one row of 1 point
    Y = equimultiple(L_SHAPE, 2)
    H = hf_omega(Y, 8, 10)
    for i in range(5, 8):
        assert [hf_omega_aci(1, 1, 2, 1, 2, j, i) for j in range(10)] == list(H.data[i])


def test_first_difference_examples():
    H = [[(i + 1) * (j + 1) for j in range(4)] for i in range(3)]
    assert first_difference(H) == [[1] * 4] * 3
    assert first_difference([[5] * 3] * 2) == [[5, 0, 0], [0, 0, 0]]


def _decrement(Y, index):
    return Y.with_multiplicity(index, Y.entries[index][1] - 1)


@pytest.mark.parametrize("m", [2, 3])
def test_decrement_independence_on_fat_grid(m):
    Y = equimultiple(grid_ci(2, 2), m)
    windows = {hf_omega(_decrement(Y, k), 8, 8).data for k in range(len(Y))}
    assert len(windows) == 1


@pytest.mark.parametrize("h", [2, 3])
def test_deletion_independence_on_reduced_grid(h):
    X = grid_ci(h, h)
    windows = {hf_omega(X.remove(k), 7, 7).data for k in range(len(X))}
    assert len(windows) == 1


def test_deletion_dependence_on_five_point_support():
    # control: deleting points of a non-grid support changes the window
    X = scheme_from_grid({(1, 1): 1, (1, 2): 1, (2, 3): 1, (3, 1): 1, (3, 2): 1})
    windows = {hf_omega(X.remove(k), 7, 7).data for k in range(len(X))}
    assert len(windows) > 1

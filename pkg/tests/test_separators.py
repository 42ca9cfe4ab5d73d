import pytest
from hypothesis import given, settings

from fatkahler.different import minimal_generators
from fatkahler.errors import PreconditionError
from fatkahler.ring import BiPoly, X0, Y0, Y1
from fatkahler.schemes import (
    FatPointScheme,
    GeneratedIdeal,
    equimultiple,
    grid_ci,
    hf,
    ideal_basis,
    is_acm,
    scheme_from_grid,
    tuples,
)
from fatkahler.separators import (
    cbp_by_deletion,
    cbp_by_separators,
    cbp_different_criterion,
    degree_tuple_acm,
    hf_remove_point,
    is_aci,
    is_cbp,
    is_ci,
    is_separator,
    minimal_separators,
    separator_degrees,
)
from reference_data import (
    ACI_EIGHT,
    L_SHAPE,
    MIXED_SUPPORT,
    MIXED_Y,
    SEPARATOR_DEGREES_TRIPLE_GRID,
    STAIRCASE,
    TRIPLE_GRID_2X3,
)
from strategies import acm_schemes, schemes

TWO_POINTS = scheme_from_grid({(1, 1): 1, (1, 2): 1})


@pytest.mark.parametrize("k", range(4))
def test_grid_point_has_one_separator(k):
    seps = minimal_separators(grid_ci(2, 2), k)
    assert [d for _, d in seps] == [(1, 1)]


def test_triple_grid_degree_tuple():
    assert separator_degrees(TRIPLE_GRID_2X3, 0) == SEPARATOR_DEGREES_TRIPLE_GRID
    assert degree_tuple_acm(TRIPLE_GRID_2X3, 0) == SEPARATOR_DEGREES_TRIPLE_GRID


@settings(max_examples=10)
@given(acm_schemes(max_points=5, max_mult=3))
def test_degree_tuple_matches_linear_algebra(Y):
    for k in range(len(Y)):
        assert separator_degrees(Y, k) == degree_tuple_acm(Y, k)


@settings(max_examples=10)
@given(acm_schemes(max_points=4, max_mult=3))
def test_separator_count_is_multiplicity_when_both_acm(Y):
    for k, (_, m) in enumerate(Y.entries):
        if is_acm(Y.with_multiplicity(k, m - 1)):
            assert len(minimal_separators(Y, k)) == m


def test_degree_tuple_needs_acm():
    with pytest.raises(PreconditionError):
        degree_tuple_acm(MIXED_Y, 0)


def test_is_separator_examples():
    assert is_separator(Y1 - Y0, TWO_POINTS, 1)
    assert not is_separator(Y1 - Y0, TWO_POINTS, 0)
    assert not is_separator(BiPoly.constant(1), TWO_POINTS, 0)
    for F in ideal_basis(TWO_POINTS, (1, 2)):
        assert not is_separator(F, TWO_POINTS, 0)
    assert not is_separator(BiPoly(), TWO_POINTS, 0)
    with pytest.raises(ValueError):
        is_separator(X0 + Y0, TWO_POINTS, 0)


@settings(max_examples=10)
@given(schemes(max_points=4, max_mult=2))
def test_found_separators_are_separators(Y):
    for k in range(len(Y)):
        for F, deg in minimal_separators(Y, k):
            assert F.bidegree == deg
            assert is_separator(F, Y, k)


@settings(max_examples=8)
@given(schemes(max_points=3, max_mult=2))
def test_separator_cuts_degree_by_one(Y):
    gens = minimal_generators(Y).polynomials
    tb = tuples(Y)
    for k in range(len(Y)):
        G, (a, b) = minimal_separators(Y, k)[0]
        i, j = tb.l + tb.r + a + 1, tb.l_prime + tb.t + b + 1
        assert GeneratedIdeal(gens + [G]).hf_value(i, j) == Y.degree - 1


@settings(max_examples=20)
@given(schemes(max_points=5, max_mult=1))
def test_point_removal_formula(X):
    for k in range(len(X)):
        H = hf_remove_point(X, k)
        assert H.data == hf(X.remove(k), H.rows, H.cols).data


def test_removing_only_point_leaves_zero():
    X = grid_ci(1, 1)
    assert all(v == 0 for row in hf_remove_point(X, 0, 3, 3).data for v in row)


def test_grid_removal_drops_above_separator_degree():
    X = grid_ci(2, 2)
    before, after = hf(X, 4, 4), hf_remove_point(X, 0, 4, 4)
    for i in range(4):
        for j in range(4):
            assert before[i, j] - after[i, j] == (1 if i >= 1 and j >= 1 else 0)


def test_cbp_examples():
    assert is_cbp(grid_ci(2, 3))
    assert not is_cbp(L_SHAPE)
    assert not is_cbp(MIXED_SUPPORT)
    with pytest.raises(PreconditionError):
        is_cbp(MIXED_Y)


@settings(max_examples=15)
@given(schemes(max_points=5, max_mult=1))
def test_cbp_paths_agree(X):
    assert cbp_by_separators(X) == cbp_by_deletion(X)


def test_ci_examples():
    assert is_ci(grid_ci(3, 3))
    assert not is_ci(L_SHAPE)
    assert not is_ci(ACI_EIGHT)


def test_aci_examples():
    assert is_aci(ACI_EIGHT)
    assert tuple(tuples(ACI_EIGHT).alpha) == (3, 3, 2)
    assert not is_aci(grid_ci(2, 2))
    assert not is_aci(scheme_from_grid({(1, 1): 1, (2, 2): 1}))
    with pytest.raises(PreconditionError):
        is_aci(MIXED_Y)


def test_different_criterion_examples():
    assert cbp_different_criterion(grid_ci(2, 3))
    assert not cbp_different_criterion(L_SHAPE)
    assert not cbp_different_criterion(STAIRCASE)
    with pytest.raises(PreconditionError):
        cbp_different_criterion(MIXED_SUPPORT)


@settings(max_examples=10)
@given(acm_schemes(max_points=6, max_mult=1))
def test_three_predicates_agree_on_acm_sets(X):
    cbp = is_cbp(X)
    assert cbp == is_ci(X) == cbp_different_criterion(X)

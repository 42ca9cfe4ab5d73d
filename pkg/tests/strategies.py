"""Hypothesis strategies shared across test modules."""
import random
from fractions import Fraction

from hypothesis import strategies as st

from fatkahler.ring import BiPoly, monomial_basis
from fatkahler.sampling import random_acm_scheme, random_scheme

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)
coordinate_pairs = st.one_of(
    small_fractions.map(lambda q: (Fraction(1), q)),
    st.just((Fraction(0), Fraction(1))),
)
bidegrees = st.tuples(st.integers(0, 3), st.integers(0, 3))


@st.composite
def bihomogeneous(draw, deg=None):
    deg = draw(bidegrees) if deg is None else deg
    coeffs = draw(st.lists(small_fractions, min_size=len(monomial_basis(deg)), max_size=len(monomial_basis(deg))))
    return BiPoly.from_vector(coeffs, deg)


@st.composite
def polynomials(draw):
    parts = draw(st.lists(bihomogeneous(), max_size=3))
    out = BiPoly()
    for p in parts:
        out = out + p
    return out


seeds = st.integers(0, 2**32 - 1)


def schemes(max_points=4, max_mult=2, min_mult=1):
    return seeds.map(lambda s: random_scheme(random.Random(s), max_points, max_mult, min_mult))


def acm_schemes(max_points=5, max_mult=1, min_mult=1):
    return seeds.map(lambda s: random_acm_scheme(random.Random(s), max_points, max_mult, min_mult))

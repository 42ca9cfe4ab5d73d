"""Hilbert functions of fat points in P1 x P1, of their Kaehler differential
modules and of their Kaehler differents, computed with exact arithmetic."""

from .different import kaehler_different_hf, minimal_generators
from .errors import InconsistencyError, MalformedSchemeError, PreconditionError, SearchCapError
from .kaehler import hf_omega, hf_omega_oracle
from .ring import BiPoly, LinearChange, apply_change, monomial_basis, parse_poly
from .schemes import (
    FatPointScheme,
    GeneratedIdeal,
    HilbertMatrix,
    PointP1P1,
    affine_point,
    equimultiple,
    first_difference,
    from_spec,
    grid_ci,
    hf,
    is_acm,
    scheme_from_grid,
    thicken,
    tuples,
)
from .separators import cbp_different_criterion, is_aci, is_cbp, is_ci, minimal_separators

__all__ = [
    "BiPoly",
    "FatPointScheme",
    "GeneratedIdeal",
    "HilbertMatrix",
    "InconsistencyError",
    "LinearChange",
    "MalformedSchemeError",
    "PointP1P1",
    "PreconditionError",
    "SearchCapError",
    "affine_point",
    "apply_change",
    "cbp_different_criterion",
    "equimultiple",
    "first_difference",
    "from_spec",
    "grid_ci",
    "hf",
    "hf_omega",
    "hf_omega_oracle",
    "is_aci",
    "is_acm",
    "is_cbp",
    "is_ci",
    "kaehler_different_hf",
    "minimal_generators",
    "minimal_separators",
    "monomial_basis",
    "parse_poly",
    "scheme_from_grid",
    "thicken",
    "tuples",
]

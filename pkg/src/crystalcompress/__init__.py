"""Compression of Nakajima monomials into highest weight components (types A and C)."""

from .cartan import RankSpec, Weight, letter_str, parse_letter
from .crystal import (CrystalGraph, TensorElement, canonical_form, dim_b_lambda,
                      explore_component, is_isomorphic)
from .errors import (CapExceeded, CrystalError, InverseLawViolated, InvariantViolation,
                     LowerDecompositionViolated, MultipleSources, NonTermination, NotInN,
                     ParseError, ReductionViolated, SpecMismatch)
from .expomatrix import ExpoMatrix, staircase_membership, staircase_split
from .insertion import insert, star
from .monomial import Monomial, a_monomial, is_highest_weight
from .tableau import ReversedTableau, omega, tableau_to_path

__all__ = [
    "RankSpec", "Weight", "letter_str", "parse_letter",
    "CrystalGraph", "TensorElement", "canonical_form", "dim_b_lambda", "explore_component",
    "is_isomorphic",
    "CapExceeded", "CrystalError", "InverseLawViolated", "InvariantViolation",
    "LowerDecompositionViolated", "MultipleSources", "NonTermination", "NotInN", "ParseError",
    "ReductionViolated", "SpecMismatch",
    "ExpoMatrix", "staircase_membership", "staircase_split",
    "insert", "star",
    "Monomial", "a_monomial", "is_highest_weight",
    "ReversedTableau", "omega", "tableau_to_path",
    "kappa",
]


def kappa(monomial, strict=True):
    """Compressed monomial of ``monomial`` for either family."""
    if monomial.spec.family == "A":
        from .matrix_a import kappa as kappa_a
        return kappa_a(monomial)
    from .matrix_c import kappa as kappa_c
    return kappa_c(monomial, strict)

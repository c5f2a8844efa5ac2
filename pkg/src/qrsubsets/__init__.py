"""Exact counts of k-subsets of the quadratic residues of F_{p^s} with a given sum."""

from .counting import CountResult, n_H, n_star, n_tilde_star
from .exact_ring import QuadExact, assert_integer
from .finite_field import FieldElement, FieldSpec, build_field

__all__ = [
    "CountResult",
    "FieldElement",
    "FieldSpec",
    "QuadExact",
    "assert_integer",
    "build_field",
    "n_H",
    "n_star",
    "n_tilde_star",
]

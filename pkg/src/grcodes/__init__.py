"""Group ring codes, quantum code parameters and 2D-cyclic codes over finite fields."""

from .code import CodeParams, LinearCode, hconcat, min_weight
from .field import GF, FieldElement, make_field, parse_field
from .groupring import GroupRingElement, parse_element, sigma
from .groups import GroupTable, build, group_table, parse_group
from .qecc import (
    OrthoCertificate,
    QeccParams,
    check_euclidean,
    check_euclidean_corollary,
    check_hermitian,
    check_symplectic_matrix,
    check_symplectic_pair,
    derive_qecc,
    qecc_from_elements,
)
from .twod import BivarPoly, TwoDCyclicCode, code_from_g, dual_star, parse_poly, reciprocal

__all__ = [
    "GF", "FieldElement", "make_field", "parse_field",
    "GroupTable", "build", "group_table", "parse_group",
    "GroupRingElement", "parse_element", "sigma",
    "LinearCode", "CodeParams", "hconcat", "min_weight",
    "OrthoCertificate", "QeccParams", "check_euclidean", "check_euclidean_corollary",
    "check_hermitian", "check_symplectic_matrix", "check_symplectic_pair",
    "derive_qecc", "qecc_from_elements",
    "BivarPoly", "TwoDCyclicCode", "code_from_g", "dual_star", "parse_poly", "reciprocal",
]

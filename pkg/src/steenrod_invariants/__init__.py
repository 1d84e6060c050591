"""Exact GF(2) computations in the ring F2[h_ts | s < t]/(h_ts h_vu | u >= t).

The ring carries an action of the mod 2 Steenrod algebra; this package
computes that action two ways, the ring's invariants per bidegree, and an
independent inverse-limit reconstruction of the ring itself.
"""

__version__ = "0.1.0"

from .action import coaction, sq_n, sq_n_on_generator, sq_pow2_on_generator, sq_via_coaction, total_sq
from .dual import DualPoly, DualTensor, conjugation, diagonal, milnor_coefficient
from .errors import ParseError, ResourceLimitError, SemanticError
from .gf2 import BitMatrix, BitVector, mat_vec, nullspace, rank
from .invariants import (
    FamilyDescriptor,
    InvariantReport,
    classify_monomial,
    invariant_subspace,
    is_invariant,
    minimal_support,
    scan,
)
from .limit import ElementarySite, compare_with_closed_form, limit_space, restrict, site_basis
from .parser import parse_element, parse_rpoly
from .ring import Bidegree, Generator, RPoly, basis, generator_degree, multiply, poly_multiply

__all__ = [
    "Bidegree",
    "BitMatrix",
    "BitVector",
    "DualPoly",
    "DualTensor",
    "ElementarySite",
    "FamilyDescriptor",
    "Generator",
    "InvariantReport",
    "ParseError",
    "RPoly",
    "ResourceLimitError",
    "SemanticError",
    "basis",
    "classify_monomial",
    "coaction",
    "compare_with_closed_form",
    "conjugation",
    "diagonal",
    "generator_degree",
    "invariant_subspace",
    "is_invariant",
    "limit_space",
    "mat_vec",
    "milnor_coefficient",
    "minimal_support",
    "multiply",
    "nullspace",
    "parse_element",
    "parse_rpoly",
    "poly_multiply",
    "rank",
    "restrict",
    "scan",
    "site_basis",
    "sq_n",
    "sq_n_on_generator",
    "sq_pow2_on_generator",
    "sq_via_coaction",
    "total_sq",
]

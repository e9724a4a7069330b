"""Exact computations with derivations on theta-Lau products ``A x_theta B``."""

from .algebra import (
    Algebra,
    Character,
    ParseError,
    ValidationError,
    center,
    check_associativity,
    is_semisimple,
    multiply,
    radical,
    right_annihilator,
    right_identities,
    unitization,
    verify_character,
)
from .derivations import (
    LinearMap,
    MapSpace,
    derivation_space,
    generalized_derivation_space,
    generalized_jordan_space,
    inner_derivation,
    jordan_derivation_space,
    quadratic_defect,
)
from .lau import LauContext, lau, lau_multiply
from .zoo import zoo_context, zoo_contexts, zoo_get, zoo_list

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "Character",
    "ParseError",
    "ValidationError",
    "center",
    "check_associativity",
    "is_semisimple",
    "multiply",
    "radical",
    "right_annihilator",
    "right_identities",
    "unitization",
    "verify_character",
    "LinearMap",
    "MapSpace",
    "derivation_space",
    "generalized_derivation_space",
    "generalized_jordan_space",
    "inner_derivation",
    "jordan_derivation_space",
    "quadratic_defect",
    "LauContext",
    "lau",
    "lau_multiply",
    "zoo_context",
    "zoo_contexts",
    "zoo_get",
    "zoo_list",
]

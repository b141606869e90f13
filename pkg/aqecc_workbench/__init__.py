"""
Asymmetric quantum code workbench.

This package builds linear and additive codes over exact finite fields,
derives the parameters of asymmetric quantum CSS and stabilizer codes, and
checks the bounds promised by expansion, direct sum, puncturing, extension
and (u|u+v) constructions against brute-force oracles.
"""

from .field import (
    FieldBasis,
    FieldTower,
    FiniteField,
    basis_by_name,
    make_field,
    make_tower,
    prime_basis,
)
from .lincode import LinearCode, dual, expand, from_generator, min_distance, relative_min_weight
from .combinators import direct_sum, extend, puncture, shorten, uuv
from .css import (
    AqeccParams,
    ClaimStatus,
    CssPair,
    TheoremClaim,
    TheoremTag,
    derive,
    direct_sum_aqecc,
    expand_aqecc,
    extend_aqecc,
    puncture_aqecc,
    uuv_aqecc,
)
from .symplectic import (
    AdditiveCode,
    SymplecticVector,
    css_to_additive,
    phi_b_expand,
    stabilizer_params,
    symplectic_dual,
)
from .families import bch, character_code, grm, qr
from .settings import Settings, configure, current_settings, using_settings

__version__ = "0.1.0"
__all__ = [
    "FiniteField",
    "FieldTower",
    "FieldBasis",
    "make_field",
    "make_tower",
    "basis_by_name",
    "prime_basis",
    "LinearCode",
    "from_generator",
    "dual",
    "expand",
    "min_distance",
    "relative_min_weight",
    "puncture",
    "shorten",
    "extend",
    "direct_sum",
    "uuv",
    "CssPair",
    "AqeccParams",
    "TheoremClaim",
    "TheoremTag",
    "ClaimStatus",
    "derive",
    "expand_aqecc",
    "direct_sum_aqecc",
    "puncture_aqecc",
    "extend_aqecc",
    "uuv_aqecc",
    "AdditiveCode",
    "SymplecticVector",
    "css_to_additive",
    "phi_b_expand",
    "stabilizer_params",
    "symplectic_dual",
    "grm",
    "character_code",
    "bch",
    "qr",
    "Settings",
    "configure",
    "current_settings",
    "using_settings",
]

"""Exact commutative rings: Z, Z/m, polynomials, localizations and the mixed ring B."""
from .base import (
    ZZ,
    DescriptorMismatch,
    DivisibilityFailure,
    IntegerRing,
    IntModRing,
    NotNonZeroDivisor,
    Ring,
    RingError,
    RingValue,
    check_same_ring,
)
from .homs import (
    RingHom,
    canonical_hom,
    coerce,
    eval_poly,
    identity_hom,
    lift_clearing_denominators,
    localization_hom,
    localize,
    quotient_ring_by_var,
    rho_hom,
    sigma_hom,
    substitute,
)
from .localized import LocalizedRing
from .mixed import MixedBRing
from .parse import RingSpecError, ValueParseError, parse_ring, parse_value
from .poly import PolyRing

__all__ = [
    "ZZ", "DescriptorMismatch", "DivisibilityFailure", "IntegerRing", "IntModRing",
    "NotNonZeroDivisor", "Ring", "RingError", "RingValue", "check_same_ring",
    "RingHom", "canonical_hom", "coerce", "eval_poly", "identity_hom",
    "lift_clearing_denominators", "localization_hom", "localize", "quotient_ring_by_var",
    "rho_hom", "sigma_hom", "substitute", "LocalizedRing", "MixedBRing",
    "RingSpecError", "ValueParseError", "parse_ring", "parse_value", "PolyRing",
]

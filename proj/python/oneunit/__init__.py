"""Endomorphisms of the one-unit group 1 + x F_p[[x]], truncated mod x^N."""

from ._oneunit import (
    NonUnitExponent,
    NotAnEndomorphism,
    OneunitError,
    Padic,
    PrecisionExhausted,
    Series,
    TooLargeToEnumerate,
    WindowTooSmall,
    check_endomorphism,
    coeffs_to_rational,
    cor13_report,
    detect_period,
    enumerate_endomorphisms,
    hasse_identity_check,
    invert_automorphism,
    is_automorphism,
    is_integer_window,
    lucas_binom,
    parse_padic,
    parse_series,
    pow,
    reconstruct_rational,
    recover_exponent,
)

__all__ = [
    "NonUnitExponent",
    "NotAnEndomorphism",
    "OneunitError",
    "Padic",
    "PrecisionExhausted",
    "Series",
    "TooLargeToEnumerate",
    "WindowTooSmall",
    "check_endomorphism",
    "coeffs_to_rational",
    "cor13_report",
    "detect_period",
    "enumerate_endomorphisms",
    "hasse_identity_check",
    "invert_automorphism",
    "is_automorphism",
    "is_integer_window",
    "lucas_binom",
    "parse_padic",
    "parse_series",
    "pow",
    "reconstruct_rational",
    "recover_exponent",
]

"""Digit-wise halving of decimal strings, the division graphs it induces,
and the binary parity codes built on top of them."""

from .core import (
    DigitParseError,
    DigitString,
    HalvingStep,
    HalvingTrace,
    digit_string_value,
    format_quotient,
    halve,
    halve_step,
    parse_digit_string,
)

__version__ = "0.1.0"

__all__ = [
    "DigitParseError",
    "DigitString",
    "HalvingStep",
    "HalvingTrace",
    "digit_string_value",
    "format_quotient",
    "halve",
    "halve_step",
    "parse_digit_string",
]

"""
Exact Rational Scalars

BigRational is the standard library Fraction: numerator and denominator are
arbitrary-precision integers, always in lowest terms with denominator > 0.
This module adds the parsing and float-boundary helpers the pipelines share.
"""

import math
from fractions import Fraction
from typing import Sequence, Tuple, Union

BigRational = Fraction

RationalLike = Union[Fraction, int, str]


class RationalParseError(ValueError):
    """Raised when text cannot be read as an exact rational 'p/q'."""


def parse_rational(text: RationalLike) -> Fraction:
    """
    Parse a rational number exactly.

    Accepts "p/q", "-p/q", integers and finite decimals ("0.5"). Floats are
    refused because they are not exact.

    Args:
        text: The value to parse

    Returns:
        The value as a Fraction in lowest terms
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool) or isinstance(text, float):
        raise RationalParseError(f"refusing inexact value {text!r}; pass 'p/q' text")
    if isinstance(text, int):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise RationalParseError(f"cannot parse {text!r} as a rational 'p/q': {e}") from e


def format_rational(value: Fraction) -> str:
    """Render a rational as 'p/q' (or 'p' when the denominator is 1)."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def log_abs(value: Fraction) -> float:
    """Natural log of |value| without converting the value itself to float."""
    if value == 0:
        return float("-inf")
    return math.log(abs(value.numerator)) - math.log(value.denominator)


def scaled_floats(numerators: Sequence[int], denominator: int) -> Tuple[list, float]:
    """
    Convert a vector of exact values sharing one denominator to floats.

    Entries are divided by the largest numerator magnitude (int/int true
    division rounds correctly for any size), so the floats lie in [-1, 1]
    and never overflow. The dropped factor is returned as a natural log.

    Args:
        numerators: Integer numerators
        denominator: Positive common denominator

    Returns:
        (floats in [-1, 1], log of the scale factor). The log is -inf for
        the zero vector.
    """
    peak = max((abs(v) for v in numerators), default=0)
    if peak == 0:
        return [0.0 for _ in numerators], float("-inf")
    floats = [v / peak for v in numerators]
    return floats, math.log(peak) - math.log(denominator)

"""Exact rational parsing and formatting for the "p/q" wire format."""
import re
from fractions import Fraction
from typing import Any, Iterable, List, Optional

from cohomology.errors import InputError

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")


def to_fraction(value: Any, field: Optional[str] = None) -> Fraction:
    """Convert an int, Fraction or "p/q" string into a Fraction.

    Floats and booleans are rejected: nothing in the engine is allowed to
    carry a binary approximation.
    """
    if isinstance(value, bool):
        raise InputError("expected a rational, got a boolean", field)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL.match(value)
        if not match:
            raise InputError(f"malformed rational {value!r} (expected p or p/q)", field)
        numerator = int(match.group(1))
        if match.group(2) is None:
            return Fraction(numerator)
        denominator = int(match.group(2))
        if denominator <= 0:
            raise InputError(f"denominator of {value!r} must be positive", field)
        return Fraction(numerator, denominator)
    raise InputError(f"expected a rational, got {type(value).__name__}", field)


def to_integer(value: Any, field: Optional[str] = None) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, str, Fraction)):
        raise InputError("expected an integer", field)
    number = to_fraction(value, field)
    if number.denominator != 1:
        raise InputError(f"expected an integer, got {format_rational(number)}", field)
    return int(number)


def format_rational(value: Fraction) -> str:
    """Lowest-terms "p/q" with q > 0, or plain "p" for integers."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational_list(text: str, field: Optional[str] = None) -> List[Fraction]:
    """Parse a comma-separated command-line list like "0,0,1,4" or "1,-1/2"."""
    if text is None or not text.strip():
        raise InputError("expected a comma-separated list of rationals", field)
    parts = text.split(",")
    return [
        to_fraction(part, f"{field}[{index}]" if field else f"[{index}]")
        for index, part in enumerate(parts)
    ]


def format_rational_list(values: Iterable[Fraction]) -> List[str]:
    return [format_rational(value) for value in values]

"""Canonical text form of exact rationals: "n" or "n/d"."""

import re
from fractions import Fraction

from sumprod.errors import ValidationError

# Optional sign on numerator and denominator, no inner whitespace. Surrounding whitespace is
# allowed: the CLI prefixes negative values with a space to keep them positional.
RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:/([+-]?\d+))?\s*$")


def rat_parse(text: str) -> Fraction:
    """Parse "n" or "n/d" into a reduced rational with positive denominator.

    Raises:
        ValidationError: If the text is malformed or the denominator is zero
    """
    match = RATIONAL_RE.fullmatch(text)
    if match is None:
        raise ValidationError(f"Invalid rational value: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ValidationError(f"Zero denominator in rational value: {text!r}")
    return Fraction(numerator, denominator)


def rat_format(value: Fraction) -> str:
    # Fraction keeps lowest terms and the sign on the numerator
    return str(value)

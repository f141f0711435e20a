from collections.abc import Iterator
from fractions import Fraction
from itertools import count
from math import gcd, isqrt


def integer_sqrt(value: int) -> int | None:
    """Exact square root of a nonnegative integer, or None if it is not a perfect square."""
    if value < 0:
        return None
    root = isqrt(value)
    return root if root * root == value else None


def rational_sqrt(value: Fraction) -> Fraction | None:
    """Exact square root of a rational, or None if it is not the square of a rational.

    A reduced n/d is a square iff n >= 0 and both n and d are perfect squares.
    """
    num_root = integer_sqrt(value.numerator)
    if num_root is None:
        return None
    den_root = integer_sqrt(value.denominator)
    if den_root is None:
        return None
    return Fraction(num_root, den_root)


def rationals_of_height(height: int) -> list[Fraction]:
    """All reduced rationals n/d with max(|n|, d) == height, by numerator then denominator."""
    if height < 1:
        return []
    pairs: list[tuple[int, int]] = []
    for d in range(1, height + 1):
        for n in range(-height, height + 1):
            if max(abs(n), d) == height and gcd(n, d) == 1:
                pairs.append((n, d))
    pairs.sort()
    return [Fraction(n, d) for n, d in pairs]


def rationals_by_height(max_height: int | None = None) -> Iterator[Fraction]:
    """Enumerate ℚ by height 1, 2, 3, ...; unbounded when max_height is None."""
    heights = count(1) if max_height is None else iter(range(1, max_height + 1))
    for height in heights:
        yield from rationals_of_height(height)

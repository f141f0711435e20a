"""Bounded-height search for solutions of x+y+z = s, xyz = p.

For each candidate x ≠ 0 the pair (y, z) is a root pair of T² − (s−x)T + p/x, which is
rational exactly when (s−x)² − 4p/x is the square of a rational.
"""

from fractions import Fraction

from sumprod.utils import rational_sqrt, rationals_by_height

SortedTriple = tuple[Fraction, Fraction, Fraction]


def candidate_xs(bound: int) -> list[Fraction]:
    return [x for x in rationals_by_height(bound) if x != 0]


def solutions_for_x(x: Fraction, s: Fraction, p: Fraction) -> list[SortedTriple]:
    rest = s - x
    root = rational_sqrt(rest**2 - 4 * p / x)
    if root is None:
        return []
    a, b, c = sorted((x, (rest + root) / 2, (rest - root) / 2))
    return [(a, b, c)]


def search_chunk(xs: list[Fraction], s: Fraction, p: Fraction) -> list[SortedTriple]:
    """Worker entry point; module-level so a process pool can pickle it."""
    found: list[SortedTriple] = []
    for x in xs:
        found.extend(solutions_for_x(x, s, p))
    return found


def partition(xs: list[Fraction], parts: int) -> list[list[Fraction]]:
    return [xs[offset::parts] for offset in range(parts)]

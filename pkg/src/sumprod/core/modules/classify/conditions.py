"""Non-degeneracy conditions on permutations (A, B, C) of a triple.

Condition (first):  A(B−C)³ ≠ B(C−A)³; its failure forces torsion ℤ/12.
Condition (second): AB² + BC² + CA² ≠ 3ABC; its failure forces torsion ℤ/9.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd

from sumprod.core.modules.rational.models import Triple
from sumprod.errors import NotPairwiseDistinctError, ValidationError


def fails_first(A: Fraction, B: Fraction, C: Fraction) -> bool:
    return A * (B - C) ** 3 == B * (C - A) ** 3


def fails_second(A: Fraction, B: Fraction, C: Fraction) -> bool:
    return A * B**2 + B * C**2 + C * A**2 == 3 * A * B * C


def ensure_pairwise_distinct(triple: Triple) -> None:
    if not triple.is_pairwise_distinct():
        raise NotPairwiseDistinctError(f"Entries of {triple} must be pairwise distinct")


def condition_first_violations(triple: Triple) -> list[Triple]:
    """Permutations (A, B, C) with A(B−C)³ = B(C−A)³; empty means condition (first) holds."""
    ensure_pairwise_distinct(triple)
    return [perm for perm in triple.permutations() if fails_first(*perm.entries)]


def condition_second_violations(triple: Triple) -> list[Triple]:
    """Permutations (A, B, C) with AB² + BC² + CA² = 3ABC; empty means condition (second) holds."""
    ensure_pairwise_distinct(triple)
    return [perm for perm in triple.permutations() if fails_second(*perm.entries)]


def coprime_guarantee(triple: Triple) -> bool:
    """True iff the nonzero integer entries are pairwise coprime and pairwise distinct.

    When true, neither condition can fail for any permutation.

    Raises:
        ValidationError: If an entry is not a nonzero integer
    """
    for entry in triple.entries:
        if entry.denominator != 1 or entry == 0:
            raise ValidationError(f"Entries must be nonzero integers, got {triple}")
    if not triple.is_pairwise_distinct():
        return False
    return all(gcd(a.numerator, b.numerator) == 1 for a, b in combinations(triple.entries, 2))

"""The sum-preserving change of coordinates between cube-sum and sum-product systems.

With (u, v, w) = ψ((x, y, z)) one has x³ + y³ + z³ = (u+v+w)³ − 24uvw, so fixing the sum
and the sum of cubes of (x, y, z) is the same as fixing the sum and the product of (u, v, w).
"""

from fractions import Fraction

from sumprod.core.modules.classify.conditions import ensure_pairwise_distinct
from sumprod.core.modules.cubes.models import CubeReduction
from sumprod.core.modules.rational.models import Triple


def psi(triple: Triple) -> Triple:
    x, y, z = triple.entries
    return Triple(x=(y + z) / 2, y=(x + z) / 2, z=(x + y) / 2)


def phi(triple: Triple) -> Triple:
    x, y, z = triple.entries
    return Triple(x=-x + y + z, y=x - y + z, z=x + y - z)


def cube_reduce(triple: Triple) -> CubeReduction:
    return CubeReduction(original=triple, reduced=psi(triple))


def fails_third(A: Fraction, B: Fraction, C: Fraction) -> bool:
    return (A + B) * (A - B) ** 3 == (B + C) * (B - C) ** 3


def fails_fourth(A: Fraction, B: Fraction, C: Fraction) -> bool:
    return A * B**2 + B * C**2 + C * A**2 == A**3 + B**3 + C**3


def condition_third_violations(triple: Triple) -> list[Triple]:
    """Permutations (A, B, C) with (A+B)(A−B)³ = (B+C)(B−C)³."""
    ensure_pairwise_distinct(triple)
    return [perm for perm in triple.permutations() if fails_third(*perm.entries)]


def condition_fourth_violations(triple: Triple) -> list[Triple]:
    """Permutations (A, B, C) with AB² + BC² + CA² = A³ + B³ + C³."""
    ensure_pairwise_distinct(triple)
    return [perm for perm in triple.permutations() if fails_fourth(*perm.entries)]

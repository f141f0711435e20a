"""Triples with (a+b+c)³ = 27abc and the rational parametrization of their solutions."""

from fractions import Fraction

from sumprod.core.modules.classify.conditions import ensure_pairwise_distinct
from sumprod.core.modules.families.models import FamilyKind, FamilyParams
from sumprod.core.modules.rational.models import Triple
from sumprod.core.modules.rational.operations import elementary_invariants, verify_sum_product
from sumprod.errors import ExcludedParameterError, NotASolutionError, NotInFamilyError, ZeroProductError

# Excluded t and the coincidence each one causes in (c(t−1)³, −ct³, c)
EXCLUDED_T: dict[Fraction, str] = {
    Fraction(-1): "b = c",
    Fraction(0): "b = 0",
    Fraction(1, 2): "a = b",
    Fraction(1): "a = 0",
    Fraction(2): "a = c",
}


def validate_genus_zero_params(scale: Fraction, t: Fraction) -> None:
    if scale == 0:
        raise ExcludedParameterError("Scale c must be nonzero")
    if t in EXCLUDED_T:
        raise ExcludedParameterError(f"t = {t} is excluded: it makes {EXCLUDED_T[t]}")


def genus_zero_triple(scale: Fraction, t: Fraction) -> Triple:
    validate_genus_zero_params(scale, t)
    return Triple(x=scale * (t - 1) ** 3, y=-scale * t**3, z=scale)


def genus_zero_invert(triple: Triple) -> FamilyParams:
    """Recover (c, t) with triple = (c(t−1)³, −ct³, c), using t = (−a+2b−c)/(a+b−2c).

    Raises:
        ZeroProductError: If an entry is zero
        NotPairwiseDistinctError: If entries repeat
        NotInFamilyError: If (a+b+c)³ ≠ 27abc
    """
    if triple.has_zero():
        raise ZeroProductError
    ensure_pairwise_distinct(triple)
    s, p = elementary_invariants(triple)
    if s**3 != 27 * p:
        raise NotInFamilyError(f"{triple} does not satisfy (a+b+c)^3 = 27abc")
    a, b, c = triple.entries
    denominator = a + b - 2 * c
    if denominator == 0:
        raise NotInFamilyError(f"a + b - 2c vanishes for {triple}")
    t = (-a + 2 * b - c) / denominator
    return FamilyParams(kind=FamilyKind.GENUS_ZERO, scale=c, t=t)


def genus_zero_constant_solution(scale: Fraction, t: Fraction) -> Triple:
    """The solution with three equal entries c(t−t²), which the u-family misses."""
    validate_genus_zero_params(scale, t)
    value = scale * (t - t**2)
    return Triple(x=value, y=value, z=value)


def genus_zero_solution(scale: Fraction, t: Fraction, u: Fraction) -> Triple:
    """The solution with parameter u; u = 0 gives the family triple itself."""
    validate_genus_zero_params(scale, t)
    if u in (-1, -t):
        raise ExcludedParameterError(f"u = {u} is excluded: it is a pole of the parametrization")
    return Triple(
        x=t * (t - 1) ** 3 / ((u + 1) * (u + t)),
        y=-t * (u + t) ** 2 / (u + 1),
        z=t * (u + 1) ** 2 / (u + t),
    ).scaled(scale)


def genus_zero_solution_invert(scale: Fraction, t: Fraction, solution: Triple) -> Fraction:
    """The unique u with genus_zero_solution(scale, t, u) == solution.

    Raises:
        NotASolutionError: If solution does not solve the system of the family triple
        NotInFamilyError: If solution is the constant triple
    """
    reference = genus_zero_triple(scale, t)
    if not verify_sum_product(reference, solution):
        raise NotASolutionError(f"{solution} is not a solution for {reference}")
    # the inversion formula is stated for c = 1
    x, y, z = solution.scaled(1 / scale).entries
    if x == y == z:
        raise NotInFamilyError(f"{solution} is the constant solution, outside the u-family")
    if solution == reference:
        return Fraction(0)
    numerator = 2 * t**4 + t**3 * z - 2 * t**3 + t * y * z + t * y - y * z
    denominator = t * (t**3 + t * z - t + y)
    u = -numerator / denominator
    if genus_zero_solution(scale, t, u) != solution:
        raise NotInFamilyError(f"{solution} is not reached by the u-family")
    return u

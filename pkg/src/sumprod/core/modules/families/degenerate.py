"""Triples violating condition (first) or (second), and the product-zero solution family."""

from fractions import Fraction

from sumprod.core.modules.classify.conditions import ensure_pairwise_distinct, fails_first, fails_second
from sumprod.core.modules.families.models import FamilyKind, FamilyParams
from sumprod.core.modules.rational.models import Triple
from sumprod.errors import ExcludedParameterError, NotInFamilyError, ZeroProductError

FIRST_EXCLUDED_T: dict[Fraction, str] = {
    Fraction(-1): "a = c = 0",
    Fraction(-1, 2): "a = b = c",
    Fraction(0): "b = c = 0",
}

SECOND_EXCLUDED_T: dict[Fraction, str] = {
    Fraction(-1): "b = 0",
    Fraction(0): "a = 0",
}


def _validate(scale: Fraction, t: Fraction, excluded: dict[Fraction, str]) -> None:
    if scale == 0:
        raise ExcludedParameterError("Scale r must be nonzero")
    if t in excluded:
        raise ExcludedParameterError(f"t = {t} is excluded: it makes {excluded[t]}")


def _ensure_invertible(triple: Triple) -> None:
    if triple.has_zero():
        raise ZeroProductError
    ensure_pairwise_distinct(triple)


def family_first(r: Fraction, t: Fraction) -> Triple:
    _validate(r, t, FIRST_EXCLUDED_T)
    return Triple(x=(t + 1) ** 3, y=-(t**3), z=-t * (t + 1) * (2 * t**2 + 2 * t + 1)).scaled(r)


def family_first_invert(triple: Triple) -> FamilyParams:
    """Recover (r, t) from a triple with a(b−c)³ = b(c−a)³ via t = (b−c)/(a−b), r = a/(t+1)³."""
    _ensure_invertible(triple)
    a, b, c = triple.entries
    if not fails_first(a, b, c):
        raise NotInFamilyError(f"{triple} does not satisfy a(b-c)^3 = b(c-a)^3")
    t = (b - c) / (a - b)
    return FamilyParams(kind=FamilyKind.FIRST, scale=a / (t + 1) ** 3, t=t)


def family_second(r: Fraction, t: Fraction) -> Triple:
    _validate(r, t, SECOND_EXCLUDED_T)
    return Triple(x=t**2, y=-(t + 1), z=t * (t + 1) ** 2).scaled(r)


def family_second_invert(triple: Triple) -> FamilyParams:
    """Recover (r, t) from a triple with ab² + bc² + ca² = 3abc via t = (a−c)/(b−a), r = a/t²."""
    _ensure_invertible(triple)
    a, b, c = triple.entries
    if not fails_second(a, b, c):
        raise NotInFamilyError(f"{triple} does not satisfy ab^2 + bc^2 + ca^2 = 3abc")
    t = (a - c) / (b - a)
    return FamilyParams(kind=FamilyKind.SECOND, scale=a / t**2, t=t)


def product_zero_solution(s: Fraction, x: Fraction) -> Triple:
    return Triple(x=x, y=s - x, z=Fraction(0))

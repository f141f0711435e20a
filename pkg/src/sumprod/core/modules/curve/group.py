"""Curve construction, discriminant and the chord-tangent group law over exact rationals."""

from fractions import Fraction

from sumprod.core.modules.curve.models import INFINITY, AffinePoint, Curve, CurvePoint, PointAtInfinity
from sumprod.errors import NotOnCurveError


def build_curve(s: Fraction, p: Fraction) -> Curve:
    """Curve v² = u³ − (s⁴/48 − sp/2)·u + (s⁶/864 − s³p/24 + p²/4)."""
    a4 = -(s**4 / 48 - s * p / 2)
    a6 = s**6 / 864 - s**3 * p / 24 + p**2 / 4
    return Curve(a4=a4, a6=a6, s=s, p=p)


def discriminant(curve: Curve) -> Fraction:
    # Equals p³(s³ − 27p) for curves built from (s, p)
    return -16 * (4 * curve.a4**3 + 27 * curve.a6**2)


def is_elliptic(s: Fraction, p: Fraction) -> bool:
    """Genus test s³ ≠ 27p, meaningful for nonzero entries (p = 0 is handled before the curve is used)."""
    return s**3 != 27 * p


def on_curve(point: CurvePoint, curve: Curve) -> bool:
    if isinstance(point, PointAtInfinity):
        return True
    return point.v**2 == point.u**3 + curve.a4 * point.u + curve.a6


def ensure_on_curve(point: CurvePoint, curve: Curve) -> None:
    if not on_curve(point, curve):
        raise NotOnCurveError(f"Point {point} is not on {curve}")


def neg(point: CurvePoint) -> CurvePoint:
    if isinstance(point, PointAtInfinity):
        return point
    return AffinePoint(u=point.u, v=-point.v)


def _add(first: CurvePoint, second: CurvePoint, curve: Curve) -> CurvePoint:
    if isinstance(first, PointAtInfinity):
        return second
    if isinstance(second, PointAtInfinity):
        return first
    if first.u == second.u:
        if first.v == -second.v:
            return INFINITY
        slope = (3 * first.u**2 + curve.a4) / (2 * first.v)
    else:
        slope = (second.v - first.v) / (second.u - first.u)
    u = slope**2 - first.u - second.u
    v = slope * (first.u - u) - first.v
    return AffinePoint(u=u, v=v)


def _multiply(n: int, point: CurvePoint, curve: Curve) -> CurvePoint:
    if n < 0:
        return _multiply(-n, neg(point), curve)
    result: CurvePoint = INFINITY
    addend = point
    while n:
        if n & 1:
            result = _add(result, addend, curve)
        n >>= 1
        if n:
            addend = _add(addend, addend, curve)
    return result


def add(first: CurvePoint, second: CurvePoint, curve: Curve) -> CurvePoint:
    """Group law with the point at infinity as identity.

    Raises:
        NotOnCurveError: If either input is not on the curve
    """
    ensure_on_curve(first, curve)
    ensure_on_curve(second, curve)
    return _add(first, second, curve)


def scalar_mul(n: int, point: CurvePoint, curve: Curve) -> CurvePoint:
    """n·point by double-and-add; negative n multiplies the negated point.

    Raises:
        NotOnCurveError: If the point is not on the curve
    """
    ensure_on_curve(point, curve)
    return _multiply(n, point, curve)

"""Bijection between solution triples of x+y+z=s, xyz=p (p ≠ 0) and curve points outside the exceptional set."""

from fractions import Fraction

from sumprod.core.modules.correspondence.models import ExceptionalSet
from sumprod.core.modules.curve.group import build_curve, ensure_on_curve
from sumprod.core.modules.curve.models import AffinePoint, CurvePoint, PointAtInfinity
from sumprod.core.modules.rational.models import Triple
from sumprod.core.modules.rational.operations import solves_sum_product
from sumprod.errors import ExceptionalPointError, NotASolutionError, ZeroProductError


def exceptional_points(s: Fraction, p: Fraction) -> ExceptionalSet:
    u = s**2 / 12
    exceptional = ExceptionalSet(plus=AffinePoint(u=u, v=p / 2), minus=AffinePoint(u=u, v=-p / 2))
    curve = build_curve(s, p)
    ensure_on_curve(exceptional.plus, curve)
    ensure_on_curve(exceptional.minus, curve)
    return exceptional


def rho(triple: Triple, s: Fraction, p: Fraction) -> AffinePoint:
    """Map a solution (x, y, z) to (−p/y + s²/12, −(p/y)(x + y/2 − s/2)).

    Raises:
        ZeroProductError: If p = 0
        NotASolutionError: If the triple does not solve x+y+z=s, xyz=p
    """
    if p == 0:
        raise ZeroProductError
    if not solves_sum_product(triple, s, p):
        raise NotASolutionError(f"{triple} does not satisfy x+y+z={s}, xyz={p}")
    x, y, _ = triple.entries
    ratio = p / y
    return AffinePoint(u=-ratio + s**2 / 12, v=-ratio * (x + y / 2 - s / 2))


def rho_inv(point: CurvePoint, s: Fraction, p: Fraction) -> Triple:
    """Inverse of rho on points outside the exceptional set.

    Raises:
        ExceptionalPointError: If the point is O or has u = s²/12
        NotOnCurveError: If the point is not on the curve for (s, p)
    """
    if isinstance(point, PointAtInfinity):
        raise ExceptionalPointError("The point at infinity has no preimage triple")
    offset = point.u - s**2 / 12
    if offset == 0:
        raise ExceptionalPointError(f"Point {point} lies in the exceptional set")
    ensure_on_curve(point, build_curve(s, p))
    shared = s * point.u / 2 - s**3 / 24 + p / 2
    return Triple(
        x=(point.v + shared) / offset,
        y=-p / offset,
        z=(-point.v + shared) / offset,
    )

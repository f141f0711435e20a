"""The torsion family T_abc, closed forms for 2P and −P+Q, and point orders bounded by Mazur's theorem."""

from fractions import Fraction
from typing import Final

from sumprod.core.modules.classify.conditions import ensure_pairwise_distinct
from sumprod.core.modules.classify.models import LabeledPoint, PointOrder, TorsionFamily
from sumprod.core.modules.curve.group import add, build_curve, ensure_on_curve, is_elliptic
from sumprod.core.modules.curve.models import AffinePoint, Curve, CurvePoint, PointAtInfinity
from sumprod.core.modules.rational.models import Triple
from sumprod.core.modules.rational.operations import elementary_invariants
from sumprod.errors import SingularCurveError, ValidationError, ZeroProductError

# Largest order of a rational torsion point on an elliptic curve over ℚ
MAZUR_BOUND: Final = 12


def ensure_elliptic_triple(triple: Triple) -> tuple[Fraction, Fraction]:
    """Check the torsion-family preconditions and return (s, p)."""
    ensure_pairwise_distinct(triple)
    if triple.has_zero():
        raise ZeroProductError
    s, p = elementary_invariants(triple)
    if not is_elliptic(s, p):
        raise SingularCurveError
    return s, p


def base_point(A: Fraction, B: Fraction, C: Fraction) -> AffinePoint:
    """P_ABC = (−AC + (A+B+C)²/12, AC(C−A)/2)."""
    return AffinePoint(u=-A * C + (A + B + C) ** 2 / 12, v=A * C * (C - A) / 2)


def order_three_point(s: Fraction, p: Fraction) -> AffinePoint:
    return AffinePoint(u=s**2 / 12, v=p / 2)


def torsion_family(triple: Triple) -> TorsionFamily:
    s, p = ensure_elliptic_triple(triple)
    curve = build_curve(s, p)
    points = []
    for perm in triple.permutations():
        point = base_point(*perm.entries)
        ensure_on_curve(point, curve)
        points.append(LabeledPoint(permutation=perm, point=point))
    q = order_three_point(s, p)
    ensure_on_curve(q, curve)
    return TorsionFamily(triple=triple, curve=curve, points=points, q=q)


def point_order_bounded(point: CurvePoint, curve: Curve) -> PointOrder:
    """Least n ≤ 12 with n·point = O, or infinite order when there is none.

    Raises:
        NotOnCurveError: If the point is not on the curve
    """
    ensure_on_curve(point, curve)
    multiple = point
    for n in range(1, MAZUR_BOUND + 1):
        if isinstance(multiple, PointAtInfinity):
            return PointOrder(order=n)
        multiple = add(multiple, point, curve)
    return PointOrder(order=None)


def double_formula(A: Fraction, B: Fraction, C: Fraction) -> AffinePoint:
    """Closed form of 2·P_ABC, equal to the group-law doubling.

    Raises:
        ValidationError: If A = C
    """
    if A == C:
        raise ValidationError("The doubling formula needs A != C")
    s = A + B + C
    u = s**2 / 12 - A * C * (A - B) * (B - C) / (A - C) ** 2
    v = A * C / (2 * (A - C) ** 3) * (A * (C - B) ** 3 - C * (B - A) ** 3)
    return AffinePoint(u=u, v=v)


def minus_p_plus_q_formula(A: Fraction, B: Fraction, C: Fraction) -> AffinePoint:
    """Closed form of −P_ABC + Q."""
    s = A + B + C
    return AffinePoint(u=s**2 / 12 - A * B, v=A * B * (B - A) / 2)

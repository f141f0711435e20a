"""Deterministic enumeration of the subgroup generated by a base point P and the order-3 point Q."""

from collections.abc import Iterator
from itertools import count

from sumprod.core.modules.curve.group import add, neg
from sumprod.core.modules.curve.models import Curve, CurvePoint


def group_walk(
    base: CurvePoint, q: CurvePoint, curve: Curve, max_abs_m: int | None = None
) -> Iterator[tuple[int, int, CurvePoint]]:
    """Yield (m, k, m·base + k·q) for m = 1, −1, 2, −2, ... and k = 0, 1, 2 within each m."""
    magnitudes = count(1) if max_abs_m is None else iter(range(1, max_abs_m + 1))
    multiple = base
    for magnitude in magnitudes:
        for m, point in ((magnitude, multiple), (-magnitude, neg(multiple))):
            shifted = point
            for k in range(3):
                yield m, k, shifted
                shifted = add(shifted, q, curve)
        multiple = add(multiple, base, curve)


def finite_group_walk(base: CurvePoint, q: CurvePoint, curve: Curve, order: int) -> Iterator[tuple[int, int, CurvePoint]]:
    """Each distinct element of ⟨base, q⟩ once, at its first position in walk order; base has finite order."""
    seen: set[CurvePoint] = set()
    for m, k, point in group_walk(base, q, curve, max_abs_m=order):
        if point not in seen:
            seen.add(point)
            yield m, k, point

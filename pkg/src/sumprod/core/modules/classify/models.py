"""Classification of a triple by the subgroup its torsion family generates."""

from enum import StrEnum

from pydantic import BaseModel, ConfigDict

from sumprod.core.modules.curve.models import AffinePoint, Curve
from sumprod.core.modules.families.models import FamilyParams
from sumprod.core.modules.rational.models import Rat, Triple


class Verdict(StrEnum):
    NOT_PAIRWISE_DISTINCT = "not_pairwise_distinct"
    PRODUCT_ZERO = "product_zero"
    GENUS_ZERO = "genus_zero"
    ELLIPTIC = "elliptic"


class TorsionType(StrEnum):
    Z12 = "Z12"
    Z9 = "Z9"
    ZXZ3 = "ZxZ3"


class Infinitude(StrEnum):
    YES = "yes"
    UNKNOWN = "unknown"


class PointOrder(BaseModel):
    """Order of a point as decided within the Mazur bound; None means infinite order."""

    model_config = ConfigDict(frozen=True)

    order: int | None

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    def __str__(self) -> str:
        return "infinite" if self.order is None else str(self.order)


class LabeledPoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    permutation: Triple  # (A, B, C)
    point: AffinePoint  # P_ABC


class TorsionFamily(BaseModel):
    """The six points P_ABC, one per permutation, and the order-3 point Q."""

    model_config = ConfigDict(frozen=True)

    triple: Triple
    curve: Curve
    points: list[LabeledPoint]
    q: AffinePoint

    def point_for(self, permutation: Triple) -> AffinePoint:
        for labeled in self.points:
            if labeled.permutation == permutation:
                return labeled.point
        raise KeyError(str(permutation))


class Classification(BaseModel):
    model_config = ConfigDict(frozen=True)

    triple: Triple
    verdict: Verdict
    solutions_infinite: Infinitude
    torsion: TorsionType | None = None
    curve: Curve | None = None
    discriminant: Rat | None = None
    first_violations: list[Triple] = []
    second_violations: list[Triple] = []
    family: FamilyParams | None = None  # (c, t) for genus zero; (r, t) of the first violating permutation

from pydantic import BaseModel, ConfigDict

from sumprod.core.modules.classify.models import Infinitude, PointOrder
from sumprod.core.modules.curve.models import AffinePoint
from sumprod.core.modules.rational.models import Triple


class OracleReport(BaseModel):
    """Solutions found by exhaustive search over one coordinate of bounded height.

    `exhaustive` is true by construction: every solution with some coordinate of height
    at most `bound` is listed. Nothing is claimed about solutions beyond the bound.
    """

    model_config = ConfigDict(frozen=True)

    triple: Triple
    bound: int
    cubes: bool = False
    solutions: list[Triple]  # canonically sorted, deduplicated, in ascending order
    exhaustive: bool = True


class ProbedPoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    solution: Triple
    point: AffinePoint
    order: PointOrder


class ProbeReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    triple: Triple
    bound: int
    points: list[ProbedPoint]
    found_infinite_order: bool  # a found point of infinite order proves infinitely many solutions
    solutions_infinite: Infinitude  # the classification's value, upgraded to yes by such a point

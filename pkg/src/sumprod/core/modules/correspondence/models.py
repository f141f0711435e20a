from pydantic import BaseModel, ConfigDict

from sumprod.core.modules.curve.models import INFINITY, AffinePoint, CurvePoint, PointAtInfinity


class ExceptionalSet(BaseModel):
    """The curve points (s²/12, ±p/2) and O, which have no preimage triple."""

    model_config = ConfigDict(frozen=True)

    plus: AffinePoint
    minus: AffinePoint
    infinity: PointAtInfinity = INFINITY

    def contains(self, point: CurvePoint) -> bool:
        if isinstance(point, PointAtInfinity):
            return True
        return point.u == self.plus.u

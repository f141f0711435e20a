"""Short Weierstrass curves v² = u³ + a4·u + a6 over ℚ and their points."""

from typing import Final, Literal

from pydantic import BaseModel, ConfigDict

from sumprod.core.modules.rational.models import Rat
from sumprod.core.modules.rational.parsing import rat_format


class Curve(BaseModel):
    """Curve attached to the invariants (s, p) of a triple."""

    model_config = ConfigDict(frozen=True)

    a4: Rat
    a6: Rat
    s: Rat  # provenance: a+b+c
    p: Rat  # provenance: abc

    def __str__(self) -> str:
        return f"v^2 = u^3 + ({rat_format(self.a4)})u + ({rat_format(self.a6)})"


class AffinePoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["affine"] = "affine"
    u: Rat
    v: Rat

    def __str__(self) -> str:
        return f"({rat_format(self.u)}, {rat_format(self.v)})"


class PointAtInfinity(BaseModel):
    """The point (0:1:0), identity of the group law."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["infinity"] = "infinity"

    def __str__(self) -> str:
        return "O"


CurvePoint = AffinePoint | PointAtInfinity

INFINITY: Final = PointAtInfinity()

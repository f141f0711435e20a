from enum import StrEnum
from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field

from sumprod.core.modules.rational.models import Rat, Triple


class ParametricFamily(StrEnum):
    GENUS_ZERO = "genus0"  # u-parametrized solutions
    GENUS_ZERO_CONSTANT = "genus0_constant"  # the constant solution outside the u-family
    PRODUCT_ZERO = "product_zero"  # (x, s−x, 0)


class GroupSource(BaseModel):
    """The curve point m·P + k·Q whose preimage is the record's triple."""

    model_config = ConfigDict(frozen=True)

    type: Literal["group"] = "group"
    m: int
    k: int = Field(..., ge=0, le=2)


class ParametricSource(BaseModel):
    model_config = ConfigDict(frozen=True)

    type: Literal["parametric"] = "parametric"
    family: ParametricFamily
    parameter: Rat | None  # None for the constant solution


Source = Annotated[GroupSource | ParametricSource, Field(discriminator="type")]


class SolutionRecord(BaseModel):
    """A verified solution and where in the enumeration it came from."""

    model_config = ConfigDict(frozen=True)

    triple: Triple
    source: Source
    verified: bool = True

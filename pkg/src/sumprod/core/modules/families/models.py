"""Closed-form families of triples and their parameters."""

from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field

from sumprod.core.modules.rational.models import Rat


class FamilyKind(StrEnum):
    GENUS_ZERO = "genus0"  # (c(t−1)³, −ct³, c): s³ = 27p
    FIRST = "first"  # (r(t+1)³, −rt³, −rt(t+1)(2t²+2t+1)): condition (first) fails
    SECOND = "second"  # (rt², −r(t+1), rt(t+1)²): condition (second) fails


class FamilyParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: FamilyKind
    scale: Rat = Field(..., description="c for the genus-zero family, r otherwise")
    t: Rat

"""Exact rationals and ordered triples."""

from fractions import Fraction
from itertools import permutations
from typing import Annotated, Self

from pydantic import BaseModel, ConfigDict, PlainSerializer, PlainValidator

from sumprod.core.modules.rational.parsing import rat_format, rat_parse

RatLike = Fraction | int | str


def coerce_rat(value: object) -> Fraction:
    """Accept Fraction, int or rational text; refuse floats and bools, which are not exact."""
    if isinstance(value, bool):
        raise TypeError("Booleans are not rational values")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return rat_parse(value)
    raise TypeError(f"Cannot use {type(value).__name__} as an exact rational")


# Exact rational in lowest terms; serialized to JSON as "n" or "n/d", never as a float
Rat = Annotated[Fraction, PlainValidator(coerce_rat), PlainSerializer(rat_format, return_type=str, when_used="json")]


class Triple(BaseModel):
    """Ordered triple of rationals; permutations are different triples."""

    model_config = ConfigDict(frozen=True)

    x: Rat
    y: Rat
    z: Rat

    @classmethod
    def of(cls, x: RatLike, y: RatLike, z: RatLike) -> Self:
        return cls(x=coerce_rat(x), y=coerce_rat(y), z=coerce_rat(z))

    @property
    def entries(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.x, self.y, self.z)

    def permutations(self) -> list["Triple"]:
        """All six orderings, in lexicographic order of positions."""
        return [Triple(x=a, y=b, z=c) for a, b, c in permutations(self.entries)]

    def canonical(self) -> "Triple":
        """Entries sorted ascending; used for set semantics."""
        a, b, c = sorted(self.entries)
        return Triple(x=a, y=b, z=c)

    def scaled(self, factor: Fraction) -> "Triple":
        return Triple(x=self.x * factor, y=self.y * factor, z=self.z * factor)

    def is_pairwise_distinct(self) -> bool:
        return len(set(self.entries)) == 3

    def has_zero(self) -> bool:
        return 0 in self.entries

    def is_positive(self) -> bool:
        return all(entry > 0 for entry in self.entries)

    def is_permutation_of(self, other: "Triple") -> bool:
        return sorted(self.entries) == sorted(other.entries)

    def __str__(self) -> str:
        return "(" + ", ".join(rat_format(entry) for entry in self.entries) + ")"

"""Rendering of command results: JSON lines on stdout, one object per line, flushed per line."""

import sys

from pydantic import BaseModel

from sumprod.core.modules.classify.models import Classification, PointOrder, TorsionFamily, Verdict
from sumprod.core.modules.curve.models import AffinePoint
from sumprod.core.modules.families.models import FamilyKind, FamilyParams
from sumprod.core.modules.rational.models import Rat, Triple
from sumprod.core.modules.rational.operations import triple_height
from sumprod.core.modules.rational.parsing import rat_format
from sumprod.core.modules.stream.models import SolutionRecord, Source


class SolutionLine(BaseModel):
    """One emitted solution, flattened for line-oriented consumers."""

    x: Rat
    y: Rat
    z: Rat
    height: int  # largest height among x, y, z
    source: Source
    verified: bool

    @classmethod
    def from_domain(cls, record: SolutionRecord) -> "SolutionLine":
        x, y, z = record.triple.entries
        return cls(x=x, y=y, z=z, height=triple_height(record.triple), source=record.source, verified=record.verified)


class TripleLine(BaseModel):
    x: Rat
    y: Rat
    z: Rat

    @classmethod
    def from_domain(cls, triple: Triple) -> "TripleLine":
        x, y, z = triple.entries
        return cls(x=x, y=y, z=z)


class PointOrderLine(BaseModel):
    permutation: Triple  # (A, B, C)
    point: AffinePoint  # P_ABC
    order: int | None  # None for infinite order

    @classmethod
    def from_domain(cls, family: TorsionFamily, orders: list[PointOrder]) -> list["PointOrderLine"]:
        return [
            cls(permutation=labeled.permutation, point=labeled.point, order=order.order)
            for labeled, order in zip(family.points, orders, strict=True)
        ]


class ClassificationLine(Classification):
    """A classification plus the bounded order of each P_ABC; the orders are empty unless the curve is elliptic."""

    point_orders: list[PointOrderLine] = []


class VerifyLine(BaseModel):
    reference: Triple
    candidate: Triple
    cubes: bool
    verified: bool


def write_line(text: str) -> None:
    # sys.stdout is looked up per call so redirection takes effect
    sys.stdout.write(text + "\n")
    sys.stdout.flush()


def write_json(model: BaseModel) -> None:
    write_line(model.model_dump_json())


def render_classification(classification: ClassificationLine) -> list[str]:
    lines = [
        f"triple: {classification.triple}",
        f"verdict: {classification.verdict}",
    ]
    if classification.torsion is not None:
        lines.append(f"torsion: {classification.torsion}")
    lines.append(f"solutions infinite: {classification.solutions_infinite}")
    if classification.curve is not None:
        lines.append(f"curve: {classification.curve}")
    if classification.discriminant is not None:
        lines.append(f"discriminant: {rat_format(classification.discriminant)}")
    if classification.verdict == Verdict.ELLIPTIC:
        lines.append(f"condition (first) violated by: {_permutations(classification.first_violations)}")
        lines.append(f"condition (second) violated by: {_permutations(classification.second_violations)}")
    if classification.family is not None:
        lines.append(f"family: {render_params(classification.family)}")
    if classification.point_orders:
        lines.append("point orders:")
        lines.extend(
            f"  P{item.permutation} = {item.point}: {'infinite' if item.order is None else item.order}"
            for item in classification.point_orders
        )
    return lines


def render_params(params: FamilyParams) -> str:
    scale_name = "c" if params.kind == FamilyKind.GENUS_ZERO else "r"
    return f"{params.kind} {scale_name} = {rat_format(params.scale)}, t = {rat_format(params.t)}"


def _permutations(permutations: list[Triple]) -> str:
    return ", ".join(str(perm) for perm in permutations) if permutations else "none"

from collections.abc import Iterator
from fractions import Fraction

from sumprod.config import Config
from sumprod.core.core import Core
from sumprod.core.modules.classify.classifier import classify_triple
from sumprod.core.modules.classify.models import Classification, PointOrder, TorsionFamily
from sumprod.core.modules.classify.torsion import point_order_bounded, torsion_family
from sumprod.core.modules.families.degenerate import family_first, family_first_invert, family_second, family_second_invert
from sumprod.core.modules.families.genus_zero import genus_zero_invert, genus_zero_solution, genus_zero_triple
from sumprod.core.modules.families.models import FamilyKind, FamilyParams
from sumprod.core.modules.oracle.models import OracleReport, ProbeReport
from sumprod.core.modules.rational.models import Triple
from sumprod.core.modules.rational.operations import verify_sum_cubes, verify_sum_product
from sumprod.core.modules.stream.models import SolutionRecord
from sumprod.errors import ValidationError


class App:
    """Facade for all tool operations; the CLI calls nothing else."""

    def __init__(self, config: Config) -> None:
        self._core = Core(config)

    @property
    def config(self) -> Config:
        return self._core.config

    def classify(self, triple: Triple) -> Classification:
        return classify_triple(triple)

    def torsion(self, triple: Triple) -> tuple[TorsionFamily, list[PointOrder]]:
        """The torsion family of an elliptic triple and the bounded order of each P_ABC."""
        family = torsion_family(triple)
        return family, [point_order_bounded(labeled.point, family.curve) for labeled in family.points]

    def solve(
        self,
        triple: Triple,
        limit: int | None = None,
        *,
        positive: bool = False,
        cubes: bool = False,
        cap: int | None = None,
        include_trivial: bool = False,
    ) -> Iterator[SolutionRecord]:
        """Select the stream matching the flags; positive streams never include trivial records."""
        if cap is not None and cap < 1:
            raise ValidationError(f"Cap must be positive, got {cap}")
        stream = self._core.services.stream
        if positive and cubes:
            return stream.positive_cube_stream(triple, limit, cap)
        if positive:
            return stream.positive_stream(triple, limit, cap)
        if cubes:
            return stream.cube_stream(triple, limit, skip_trivial=not include_trivial)
        return stream.solution_stream(triple, limit, skip_trivial=not include_trivial)

    def family_triple(self, kind: FamilyKind, scale: Fraction, t: Fraction) -> Triple:
        match kind:
            case FamilyKind.GENUS_ZERO:
                return genus_zero_triple(scale, t)
            case FamilyKind.FIRST:
                return family_first(scale, t)
            case FamilyKind.SECOND:
                return family_second(scale, t)

    def family_invert(self, kind: FamilyKind, triple: Triple) -> FamilyParams:
        match kind:
            case FamilyKind.GENUS_ZERO:
                return genus_zero_invert(triple)
            case FamilyKind.FIRST:
                return family_first_invert(triple)
            case FamilyKind.SECOND:
                return family_second_invert(triple)

    def genus_zero_solution(self, scale: Fraction, t: Fraction, u: Fraction) -> Triple:
        return genus_zero_solution(scale, t, u)

    def verify(self, reference: Triple, candidate: Triple, *, cubes: bool = False) -> bool:
        if cubes:
            return verify_sum_cubes(reference, candidate)
        return verify_sum_product(reference, candidate)

    def oracle(self, triple: Triple, bound: int, *, cubes: bool = False) -> OracleReport:
        if cubes:
            return self._core.services.oracle.brute_force_cube_solutions(triple, bound)
        return self._core.services.oracle.brute_force_solutions(triple, bound)

    def probe(self, triple: Triple, bound: int) -> ProbeReport:
        return self._core.services.oracle.curve_point_probe(triple, bound)

from collections.abc import Callable, Iterator
from itertools import islice

import structlog

from sumprod.core.core import Service
from sumprod.core.modules.classify.classifier import classify_triple
from sumprod.core.modules.classify.conditions import condition_first_violations, ensure_pairwise_distinct
from sumprod.core.modules.classify.models import Classification, TorsionType, Verdict
from sumprod.core.modules.classify.torsion import base_point, order_three_point, point_order_bounded
from sumprod.core.modules.correspondence.maps import exceptional_points, rho_inv
from sumprod.core.modules.cubes.transforms import (
    condition_fourth_violations,
    condition_third_violations,
    cube_reduce,
    phi,
)
from sumprod.core.modules.families.degenerate import product_zero_solution
from sumprod.core.modules.families.genus_zero import genus_zero_constant_solution, genus_zero_solution
from sumprod.core.modules.rational.models import Triple
from sumprod.core.modules.rational.operations import elementary_invariants, verify_sum_cubes, verify_sum_product
from sumprod.core.modules.stream.models import GroupSource, ParametricFamily, ParametricSource, SolutionRecord
from sumprod.core.modules.stream.walk import finite_group_walk, group_walk
from sumprod.errors import CapExhaustedError, ConditionViolationError, NotPairwiseDistinctError, NotPositiveError
from sumprod.utils import rationals_by_height

logger = structlog.get_logger(__name__)

Verifier = Callable[[Triple, Triple], bool]


class StreamService(Service):
    """Deterministic, verified solution streams for sum-product and cube-sum systems.

    Every public method validates its input eagerly and returns a lazy iterator.
    """

    def solution_stream(
        self, triple: Triple, limit: int | None = None, *, skip_trivial: bool = False
    ) -> Iterator[SolutionRecord]:
        """Solutions of x+y+z = a+b+c, xyz = abc in a fixed order.

        Elliptic ZxZ3 triples give an infinite group walk; Z12 and Z9 triples give the finite
        list of preimages of the torsion subgroup; genus-zero and product-zero triples give
        their parametric families.
        """
        classification = classify_triple(triple)
        if classification.verdict == Verdict.NOT_PAIRWISE_DISTINCT:
            raise NotPairwiseDistinctError(f"Entries of {triple} must be pairwise distinct")
        logger.debug("stream_started", triple=str(triple), verdict=classification.verdict, torsion=classification.torsion)
        records = self._records(triple, classification)
        if skip_trivial:
            records = (record for record in records if not record.triple.is_permutation_of(triple))
        return islice(records, limit)

    def positive_stream(self, triple: Triple, count: int | None = None, cap: int | None = None) -> Iterator[SolutionRecord]:
        """All-positive solutions other than permutations of the input.

        Raises:
            NotPositiveError: If an entry is not positive
            NotPairwiseDistinctError: If entries repeat
            ConditionViolationError: If condition (first) fails for some permutation
            CapExhaustedError: While iterating, once `cap` records were examined before `count` were emitted
        """
        self._ensure_positive(triple)
        violations = condition_first_violations(triple)
        if violations:
            raise ConditionViolationError("first", violations)
        return self._take_positive(triple, self.solution_stream(triple), count, cap)

    def cube_stream(self, triple: Triple, limit: int | None = None, *, skip_trivial: bool = False) -> Iterator[SolutionRecord]:
        """Solutions of x+y+z = a+b+c, x³+y³+z³ = a³+b³+c³, as φ-images of the reduced sum-product stream."""
        ensure_pairwise_distinct(triple)
        third = condition_third_violations(triple)
        if third:
            raise ConditionViolationError("third", third)
        fourth = condition_fourth_violations(triple)
        if fourth:
            raise ConditionViolationError("fourth", fourth)
        records = self._cube_records(triple)
        if skip_trivial:
            records = (record for record in records if not record.triple.is_permutation_of(triple))
        return islice(records, limit)

    def positive_cube_stream(self, triple: Triple, count: int | None = None, cap: int | None = None) -> Iterator[SolutionRecord]:
        """All-positive cube-sum solutions other than permutations of the input; cap semantics as positive_stream."""
        self._ensure_positive(triple)
        violations = condition_third_violations(triple)
        if violations:
            raise ConditionViolationError("third", violations)
        return self._take_positive(triple, self._cube_records(triple), count, cap)

    def _records(self, triple: Triple, classification: Classification) -> Iterator[SolutionRecord]:
        match classification.verdict:
            case Verdict.PRODUCT_ZERO:
                return self._product_zero_records(triple)
            case Verdict.GENUS_ZERO:
                return self._genus_zero_records(triple, classification)
            case _:
                return self._group_records(triple, classification)

    def _product_zero_records(self, triple: Triple) -> Iterator[SolutionRecord]:
        s, _ = elementary_invariants(triple)
        for x in rationals_by_height():
            solution = product_zero_solution(s, x)
            source = ParametricSource(family=ParametricFamily.PRODUCT_ZERO, parameter=x)
            yield _verified(triple, solution, source, verify_sum_product)

    def _genus_zero_records(self, triple: Triple, classification: Classification) -> Iterator[SolutionRecord]:
        if classification.family is None:
            raise RuntimeError(f"Genus-zero classification of {triple} carries no parameters")
        scale, t = classification.family.scale, classification.family.t
        constant = genus_zero_constant_solution(scale, t)
        constant_source = ParametricSource(family=ParametricFamily.GENUS_ZERO_CONSTANT, parameter=None)
        yield _verified(triple, constant, constant_source, verify_sum_product)
        for u in rationals_by_height():
            if u in (-1, -t):
                continue
            solution = genus_zero_solution(scale, t, u)
            source = ParametricSource(family=ParametricFamily.GENUS_ZERO, parameter=u)
            yield _verified(triple, solution, source, verify_sum_product)

    def _group_records(self, triple: Triple, classification: Classification) -> Iterator[SolutionRecord]:
        s, p = elementary_invariants(triple)
        if classification.curve is None:
            raise RuntimeError(f"Elliptic classification of {triple} carries no curve")
        curve = classification.curve
        base = base_point(*triple.entries)
        q = order_three_point(s, p)
        exceptional = exceptional_points(s, p)

        if classification.torsion == TorsionType.ZXZ3:
            walk = group_walk(base, q, curve)
        else:
            order = point_order_bounded(base, curve).order
            if order is None:
                raise RuntimeError(f"Base point of {triple} has infinite order in a finite classification")
            walk = finite_group_walk(base, q, curve, order)

        emitted = 0
        for m, k, point in walk:
            if exceptional.contains(point):
                continue
            emitted += 1
            yield _verified(triple, rho_inv(point, s, p), GroupSource(m=m, k=k), verify_sum_product)
        logger.debug("finite_stream_completed", triple=str(triple), torsion=classification.torsion, emitted=emitted)

    def _cube_records(self, triple: Triple) -> Iterator[SolutionRecord]:
        reduction = cube_reduce(triple)
        for record in self.solution_stream(reduction.reduced):
            yield _verified(triple, phi(record.triple), record.source, verify_sum_cubes)

    def _take_positive(
        self, triple: Triple, records: Iterator[SolutionRecord], count: int | None, cap: int | None
    ) -> Iterator[SolutionRecord]:
        cap = self.core.config.cap if cap is None else cap
        if count == 0:
            return
        emitted = 0
        examined = 0
        for record in islice(records, cap):
            examined += 1
            if record.triple.is_positive() and not record.triple.is_permutation_of(triple):
                yield record
                emitted += 1
                if count is not None and emitted >= count:
                    return
        if examined < cap:
            # the underlying stream was finite
            return
        logger.warning("positive_cap_exhausted", triple=str(triple), emitted=emitted, requested=count, cap=cap)
        raise CapExhaustedError(emitted=emitted, requested=count, cap=cap)

    @staticmethod
    def _ensure_positive(triple: Triple) -> None:
        if not triple.is_positive():
            raise NotPositiveError(f"Entries of {triple} must be positive")
        ensure_pairwise_distinct(triple)


def _verified(reference: Triple, solution: Triple, source: GroupSource | ParametricSource, verify: Verifier) -> SolutionRecord:
    if not verify(reference, solution):
        raise RuntimeError(f"Stream produced {solution}, which does not solve the system of {reference}")
    return SolutionRecord(triple=solution, source=source, verified=True)

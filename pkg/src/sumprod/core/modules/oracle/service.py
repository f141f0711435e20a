from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import repeat

import structlog

from sumprod.core.core import Service
from sumprod.core.modules.classify.classifier import classify_triple
from sumprod.core.modules.classify.models import Infinitude
from sumprod.core.modules.classify.torsion import ensure_elliptic_triple, point_order_bounded
from sumprod.core.modules.correspondence.maps import rho
from sumprod.core.modules.cubes.transforms import phi, psi
from sumprod.core.modules.curve.group import build_curve
from sumprod.core.modules.oracle.models import OracleReport, ProbedPoint, ProbeReport
from sumprod.core.modules.oracle.search import SortedTriple, candidate_xs, partition, search_chunk
from sumprod.core.modules.rational.models import Triple
from sumprod.core.modules.rational.operations import elementary_invariants, verify_sum_cubes, verify_sum_product
from sumprod.errors import ValidationError, ZeroProductError

logger = structlog.get_logger(__name__)


class OracleService(Service):
    """Exhaustive bounded-height ground truth, independent of the curve machinery."""

    def brute_force_solutions(self, triple: Triple, bound: int) -> OracleReport:
        """All solutions of x+y+z = a+b+c, xyz = abc having a coordinate of height at most `bound`.

        Raises:
            ZeroProductError: If abc = 0
            ValidationError: If bound is negative
        """
        s, p = elementary_invariants(triple)
        if p == 0:
            raise ZeroProductError("The oracle needs a nonzero product; product-zero solutions are (x, s-x, 0)")
        solutions = [Triple(x=a, y=b, z=c) for a, b, c in self._search(s, p, bound)]
        for solution in solutions:
            if not verify_sum_product(triple, solution):
                raise RuntimeError(f"Oracle produced {solution}, which does not solve the system of {triple}")
        return OracleReport(triple=triple, bound=bound, solutions=solutions)

    def brute_force_cube_solutions(self, triple: Triple, bound: int) -> OracleReport:
        """φ-images of the bounded search on the reduced system ψ(triple).

        The height bound applies to coordinates of the reduced system.

        Raises:
            ZeroProductError: If the reduced system has zero product
        """
        reduced = psi(triple)
        s, p = elementary_invariants(reduced)
        if p == 0:
            raise ZeroProductError(f"Reduced system {reduced} has zero product")
        solutions = sorted(
            {phi(Triple(x=a, y=b, z=c)).canonical() for a, b, c in self._search(s, p, bound)},
            key=lambda solution: solution.entries,
        )
        for solution in solutions:
            if not verify_sum_cubes(triple, solution):
                raise RuntimeError(f"Oracle produced {solution}, which does not solve the cube system of {triple}")
        return OracleReport(triple=triple, bound=bound, cubes=True, solutions=solutions)

    def curve_point_probe(self, triple: Triple, bound: int) -> ProbeReport:
        """Map every ordering of every oracle solution to the curve and bound its order.

        A point of infinite order proves the solution set infinite even where the
        classification is undecided; not finding one proves nothing.

        Raises:
            NotPairwiseDistinctError, ZeroProductError, SingularCurveError: If the curve is not elliptic
        """
        s, p = ensure_elliptic_triple(triple)
        curve = build_curve(s, p)
        report = self.brute_force_solutions(triple, bound)
        probed: list[ProbedPoint] = []
        seen = set()
        for solution in report.solutions:
            for ordering in solution.permutations():
                point = rho(ordering, s, p)
                if point in seen:
                    continue
                seen.add(point)
                probed.append(ProbedPoint(solution=ordering, point=point, order=point_order_bounded(point, curve)))
        found_infinite = any(not item.order.is_finite for item in probed)
        infinite = Infinitude.YES if found_infinite else classify_triple(triple).solutions_infinite
        logger.info(
            "curve_probe_completed", triple=str(triple), bound=bound, points=len(probed), found_infinite_order=found_infinite
        )
        return ProbeReport(
            triple=triple, bound=bound, points=probed, found_infinite_order=found_infinite, solutions_infinite=infinite
        )

    def _search(self, s: Fraction, p: Fraction, bound: int) -> list[SortedTriple]:
        if bound < 0:
            raise ValidationError(f"Height bound must be nonnegative, got {bound}")
        xs = candidate_xs(bound)
        workers = max(1, self.core.config.oracle_workers)
        if workers == 1:
            found = search_chunk(xs, s, p)
        else:
            chunks = partition(xs, workers)
            with ProcessPoolExecutor(max_workers=workers) as pool:
                found = [item for chunk in pool.map(search_chunk, chunks, repeat(s), repeat(p)) for item in chunk]
        merged = sorted(set(found))
        logger.info("oracle_search_completed", bound=bound, candidates=len(xs), solutions=len(merged), workers=workers)
        return merged

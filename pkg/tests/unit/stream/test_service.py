"""Tests for StreamService."""

from fractions import Fraction
from itertools import islice

import pytest

from sumprod.config import Config
from sumprod.core.core import Core
from sumprod.core.modules.classify.torsion import base_point, order_three_point
from sumprod.core.modules.correspondence.maps import rho
from sumprod.core.modules.curve.group import add, build_curve, scalar_mul
from sumprod.core.modules.rational.models import Triple
from sumprod.core.modules.rational.operations import cube_sum, elementary_invariants, verify_sum_cubes, verify_sum_product
from sumprod.core.modules.stream.models import GroupSource, ParametricFamily, ParametricSource
from sumprod.errors import CapExhaustedError, ConditionViolationError, NotPairwiseDistinctError, NotPositiveError

SECOND_MULTIPLE = Triple.of("-3/2", 8, "-1/2")
THIRD_MULTIPLE = Triple.of("49/15", "54/35", "25/21")


def triples(records):
    return [record.triple for record in records]


class TestSolutionStreamElliptic:
    """Tests for the infinite group-walk stream of (1, 2, 3)."""

    def test_first_records_are_input_permutations(self, stream_service, triple_123):
        """Test that m = ±1 yields the six orderings of the input, starting with the input."""
        records = list(stream_service.solution_stream(triple_123, 6))
        assert records[0].triple == triple_123
        assert records[0].source == GroupSource(m=1, k=0)
        assert all(record.triple.is_permutation_of(triple_123) for record in records)
        assert len(set(triples(records))) == 6

    def test_images_of_multiples(self, stream_service, triple_123):
        """Test that ρ⁻¹(2P) and ρ⁻¹(3P) appear at m = 2 and m = 3."""
        records = list(stream_service.solution_stream(triple_123, 18))
        assert records[6].triple == SECOND_MULTIPLE
        assert records[6].source == GroupSource(m=2, k=0)
        assert records[12].triple == THIRD_MULTIPLE

    def test_skip_trivial(self, stream_service, triple_123):
        """Test that skip_trivial starts at 2P and its rotation."""
        records = list(stream_service.solution_stream(triple_123, 2, skip_trivial=True))
        assert triples(records) == [SECOND_MULTIPLE, Triple.of("-1/2", "-3/2", 8)]

    def test_records_verified_and_distinct(self, stream_service, triple_123):
        """Test exact verification and no repeats on a prefix."""
        records = list(stream_service.solution_stream(triple_123, 60))
        assert all(record.verified for record in records)
        assert all(verify_sum_product(triple_123, record.triple) for record in records)
        assert len(set(triples(records))) == 60

    def test_source_roundtrip(self, stream_service, triple_123):
        """Test that ρ of each record is its source element m·P + k·Q."""
        s, p = elementary_invariants(triple_123)
        curve = build_curve(s, p)
        base, q = base_point(*triple_123.entries), order_three_point(s, p)
        for record in stream_service.solution_stream(triple_123, 36):
            assert isinstance(record.source, GroupSource)
            expected = add(scalar_mul(record.source.m, base, curve), scalar_mul(record.source.k, q, curve), curve)
            assert rho(record.triple, s, p) == expected

    def test_translates_are_permutations(self, stream_service, triple_123):
        """Test that the records at (m, k) are orderings of the record at (m, 0)."""
        records = list(stream_service.solution_stream(triple_123, 36))
        for index in range(0, 36, 3):
            for offset in (1, 2):
                assert records[index + offset].triple.is_permutation_of(records[index].triple)

    def test_deterministic(self, stream_service, triple_123):
        """Test that two runs give identical sequences."""
        first = list(stream_service.solution_stream(triple_123, 30))
        second = list(stream_service.solution_stream(triple_123, 30))
        assert first == second

    def test_repeated_entries_rejected_eagerly(self, stream_service):
        """Test that the precondition fails before iteration starts."""
        with pytest.raises(NotPairwiseDistinctError):
            stream_service.solution_stream(Triple.of(1, 1, 2))


class TestSolutionStreamFinite:
    """Tests for the finite Z12 and Z9 streams."""

    def test_z12_stream_terminates(self, stream_service):
        """Test that (3, 10, 24) yields the 9 preimages of its 12-element group."""
        triple = Triple.of(3, 10, 24)
        records = list(stream_service.solution_stream(triple))
        assert len(records) == 9
        assert len(set(triples(records))) == 9
        assert all(verify_sum_product(triple, record.triple) for record in records)
        assert sum(record.triple.is_permutation_of(triple) for record in records) == 6

    def test_z9_stream_is_input_permutations(self, stream_service):
        """Test that (1, −2, 4) yields exactly its six orderings."""
        triple = Triple.of(1, -2, 4)
        records = list(stream_service.solution_stream(triple))
        assert len(records) == 6
        assert all(record.triple.is_permutation_of(triple) for record in records)


class TestSolutionStreamParametric:
    """Tests for genus-zero and product-zero streams."""

    def test_genus_zero(self, stream_service):
        """Test the constant solution first, then u = 0 and u = 1."""
        records = list(stream_service.solution_stream(Triple.of(8, -27, 1), 3))
        assert triples(records) == [Triple.of(-6, -6, -6), Triple.of(8, -27, 1), Triple.of(3, -24, 3)]
        assert records[0].source == ParametricSource(family=ParametricFamily.GENUS_ZERO_CONSTANT, parameter=None)
        assert records[2].source == ParametricSource(family=ParametricFamily.GENUS_ZERO, parameter=Fraction(1))

    def test_genus_zero_prefix_distinct(self, stream_service):
        """Test that a longer prefix has no repeats and verifies."""
        triple = Triple.of(8, -27, 1)
        records = list(stream_service.solution_stream(triple, 80))
        assert len(set(triples(records))) == 80
        assert all(verify_sum_product(triple, record.triple) for record in records)

    def test_product_zero(self, stream_service):
        """Test (x, s − x, 0) over x = −1, 0, 1."""
        records = list(stream_service.solution_stream(Triple.of(1, 0, 5), 3))
        assert triples(records) == [Triple.of(-1, 7, 0), Triple.of(0, 6, 0), Triple.of(1, 5, 0)]


class TestPositiveStream:
    """Tests for positive_stream."""

    def test_first_positive(self, stream_service, triple_123):
        """Test that the first positive non-trivial solution is ρ⁻¹(3P)."""
        records = list(stream_service.positive_stream(triple_123, 1))
        assert triples(records) == [THIRD_MULTIPLE]

    def test_three_positive(self, stream_service, triple_123):
        """Test three distinct positive verified solutions."""
        records = list(stream_service.positive_stream(triple_123, 3))
        assert len(set(triples(records))) == 3
        assert all(record.triple.is_positive() for record in records)
        assert all(verify_sum_product(triple_123, record.triple) for record in records)

    def test_coprime_input(self, stream_service):
        """Test a positive solution for (2, 3, 25) other than its orderings."""
        triple = Triple.of(2, 3, 25)
        (record,) = stream_service.positive_stream(triple, 1)
        assert record.triple.is_positive()
        assert not record.triple.is_permutation_of(triple)

    def test_condition_violation_names_permutation(self, stream_service):
        """Test that (3, 10, 24) is refused with its violating ordering."""
        with pytest.raises(ConditionViolationError, match=r"\(3, 24, 10\)") as exc_info:
            stream_service.positive_stream(Triple.of(3, 10, 24), 1)
        assert exc_info.value.condition == "first"

    def test_nonpositive_input(self, stream_service):
        """Test that a negative entry is refused."""
        with pytest.raises(NotPositiveError):
            stream_service.positive_stream(Triple.of(1, -2, 4), 1)

    def test_count_zero(self, stream_service, triple_123):
        """Test that count 0 yields nothing."""
        assert list(stream_service.positive_stream(triple_123, 0)) == []

    @pytest.mark.parametrize("cap", [6, 12])
    def test_cap_exhausted(self, stream_service, triple_123, cap):
        """Test that the cap is reported distinctly when reached before the count."""
        with pytest.raises(CapExhaustedError) as exc_info:
            list(stream_service.positive_stream(triple_123, 1, cap=cap))
        assert exc_info.value.emitted == 0
        assert exc_info.value.cap == cap

    def test_cap_reached_exactly(self, stream_service, triple_123):
        """Test that the 13th examined record is ρ⁻¹(3P)."""
        assert triples(stream_service.positive_stream(triple_123, 1, cap=13)) == [THIRD_MULTIPLE]

    def test_cap_from_config(self, monkeypatch, triple_123):
        """Test that the configured cap applies when none is given."""
        monkeypatch.setenv("SUMPROD_CAP", "6")
        stream = Core(Config(_env_file=None)).services.stream
        with pytest.raises(CapExhaustedError):
            list(stream.positive_stream(triple_123, 1))

    def test_records_emitted_before_cap(self, stream_service, triple_123):
        """Test that records found before the cap are still yielded."""
        stream = stream_service.positive_stream(triple_123, 4, cap=15)
        emitted = list(islice(stream, 3))
        assert len(emitted) == 3
        with pytest.raises(CapExhaustedError) as exc_info:
            next(stream)
        assert exc_info.value.emitted == 3


class TestCubeStream:
    """Tests for cube_stream and positive_cube_stream."""

    def test_first_non_trivial(self, stream_service, triple_123):
        """Test φ∘ρ⁻¹(2P) on the reduced system."""
        (record,) = stream_service.cube_stream(triple_123, 1, skip_trivial=True)
        assert record.triple == Triple.of("15/2", -10, "17/2")

    def test_first_record_is_input(self, stream_service, triple_123):
        """Test that without skipping, the walk starts at the input."""
        (record,) = stream_service.cube_stream(triple_123, 1)
        assert record.triple == triple_123

    def test_records_verify(self, stream_service, triple_123):
        """Test that every record solves the cube-sum system."""
        records = list(stream_service.cube_stream(triple_123, 30))
        assert all(verify_sum_cubes(triple_123, record.triple) for record in records)
        assert len(set(triples(records))) == 30

    def test_repeated_entries_rejected(self, stream_service):
        """Test that (a, a, c) is refused."""
        with pytest.raises(NotPairwiseDistinctError):
            stream_service.cube_stream(Triple.of(2, 2, 5))

    def test_third_violation(self, stream_service):
        """Test that (−19, −1, 17) is refused under (third)."""
        with pytest.raises(ConditionViolationError, match="third"):
            stream_service.cube_stream(Triple.of(-19, -1, 17))

    def test_fourth_violation(self, stream_service):
        """Test that (1, 7, −5) is refused under (fourth)."""
        with pytest.raises(ConditionViolationError, match="fourth"):
            stream_service.cube_stream(Triple.of(1, 7, -5))

    @pytest.mark.parametrize("triple", [(1, 2, 3), (2, 3, 4)])
    def test_positive_cube_solution(self, stream_service, triple):
        """Test a positive cube-sum solution other than the input's orderings."""
        reference = Triple.of(*triple)
        (record,) = stream_service.positive_cube_stream(reference, 1)
        assert record.triple.is_positive()
        assert not record.triple.is_permutation_of(reference)
        assert sum(record.triple.entries) == sum(reference.entries)
        assert cube_sum(record.triple) == cube_sum(reference)

    def test_positive_cube_count_zero(self, stream_service, triple_123):
        """Test that count 0 yields nothing."""
        assert list(stream_service.positive_cube_stream(triple_123, 0)) == []

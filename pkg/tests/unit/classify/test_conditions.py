"""Tests for conditions (first), (second) and the coprime guarantee."""

import pytest
from hypothesis import given, settings

from sumprod.core.modules.classify.conditions import (
    condition_first_violations,
    condition_second_violations,
    coprime_guarantee,
)
from sumprod.core.modules.rational.models import Triple
from sumprod.errors import NotPairwiseDistinctError, ValidationError
from tests.strategies import coprime_integer_triples


class TestConditionFirst:
    """Tests for condition_first_violations."""

    def test_holds_for_reference_triple(self, triple_123):
        """Test that no permutation of (1, 2, 3) violates (first)."""
        assert condition_first_violations(triple_123) == []

    @pytest.mark.parametrize(("triple", "witness"), [((3, 10, 24), (3, 24, 10)), ((2, 15, 54), (2, 54, 15))])
    def test_violating_examples(self, triple, witness):
        """Test triples with A(B−C)³ = B(C−A)³ for some permutation."""
        assert Triple.of(*witness) in condition_first_violations(Triple.of(*triple))

    def test_repeated_entries_rejected(self):
        """Test that repeated entries raise NotPairwiseDistinctError."""
        with pytest.raises(NotPairwiseDistinctError):
            condition_first_violations(Triple.of(1, 1, 2))


class TestConditionSecond:
    """Tests for condition_second_violations."""

    def test_holds_for_reference_triple(self, triple_123):
        """Test that no permutation of (1, 2, 3) violates (second)."""
        assert condition_second_violations(triple_123) == []

    @pytest.mark.parametrize(("triple", "witness"), [((1, -2, 4), (1, -2, 4)), ((-3, 4, 18), (-3, 18, 4))])
    def test_violating_examples(self, triple, witness):
        """Test triples with AB² + BC² + CA² = 3ABC for some permutation."""
        assert Triple.of(*witness) in condition_second_violations(Triple.of(*triple))

    def test_repeated_entries_rejected(self):
        """Test that repeated entries raise NotPairwiseDistinctError."""
        with pytest.raises(NotPairwiseDistinctError):
            condition_second_violations(Triple.of(5, 2, 5))


class TestCoprimeGuarantee:
    """Tests for coprime_guarantee."""

    @pytest.mark.parametrize(
        ("triple", "expected"),
        [((3, 4, 5), True), ((3, 10, 24), False), ((2, 3, 25), True), ((1, 1, 2), False)],
    )
    def test_examples(self, triple, expected):
        """Test pairwise coprimality together with distinctness."""
        assert coprime_guarantee(Triple.of(*triple)) is expected

    @pytest.mark.parametrize("triple", [(1, 2, "3/2"), (0, 1, 2)])
    def test_requires_nonzero_integers(self, triple):
        """Test that fractions and zero entries are refused."""
        with pytest.raises(ValidationError):
            coprime_guarantee(Triple.of(*triple))

    @settings(max_examples=200)
    @given(coprime_integer_triples)
    def test_coprime_triples_satisfy_both_conditions(self, triple):
        """Test that pairwise coprime distinct integers violate neither condition."""
        assert coprime_guarantee(triple)
        assert condition_first_violations(triple) == []
        assert condition_second_violations(triple) == []

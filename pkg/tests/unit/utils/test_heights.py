"""Tests for exact square roots and the height enumeration of ℚ."""

from fractions import Fraction
from itertools import islice

from sumprod.utils import integer_sqrt, rational_sqrt, rationals_by_height, rationals_of_height


class TestSquareRoots:
    """Tests for integer_sqrt and rational_sqrt."""

    def test_integer_sqrt(self):
        """Test perfect squares, non-squares and negatives."""
        assert integer_sqrt(49) == 7
        assert integer_sqrt(0) == 0
        assert integer_sqrt(50) is None
        assert integer_sqrt(-4) is None

    def test_rational_sqrt(self):
        """Test that n/d is a square iff both parts are squares."""
        assert rational_sqrt(Fraction(361, 4)) == Fraction(19, 2)
        assert rational_sqrt(Fraction(2, 9)) is None
        assert rational_sqrt(Fraction(4, 3)) is None
        assert rational_sqrt(Fraction(-1)) is None


class TestRationalsByHeight:
    """Tests for the deterministic enumeration of ℚ."""

    def test_height_one(self):
        """Test the rationals of height 1."""
        assert rationals_of_height(1) == [Fraction(-1), Fraction(0), Fraction(1)]

    def test_height_two_ordered_by_numerator(self):
        """Test numerator-then-denominator order within a height."""
        assert rationals_of_height(2) == [Fraction(-2), Fraction(-1, 2), Fraction(1, 2), Fraction(2)]

    def test_bounded_enumeration_counts(self):
        """Test that heights 1..3 give 3 + 4 + 8 reduced rationals, each once."""
        values = list(rationals_by_height(3))
        assert len(values) == 15
        assert len(set(values)) == 15

    def test_unbounded_enumeration_is_lazy(self):
        """Test that the unbounded enumeration can be sliced."""
        assert list(islice(rationals_by_height(), 5)) == [Fraction(-1), Fraction(0), Fraction(1), Fraction(-2), Fraction(-1, 2)]

    def test_nonpositive_height_is_empty(self):
        """Test that there are no rationals of height 0."""
        assert rationals_of_height(0) == []

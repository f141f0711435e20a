"""Hypothesis strategies for rationals, triples and family parameters."""

from fractions import Fraction
from math import gcd

from hypothesis import strategies as st

from sumprod.core.modules.rational.models import Triple
from sumprod.core.modules.rational.operations import elementary_invariants

rationals = st.fractions(min_value=-60, max_value=60, max_denominator=12)
nonzero_rationals = rationals.filter(lambda value: value != 0)


def _triple(entries: tuple[Fraction, Fraction, Fraction]) -> Triple:
    return Triple(x=entries[0], y=entries[1], z=entries[2])


def _is_elliptic(triple: Triple) -> bool:
    s, p = elementary_invariants(triple)
    return s**3 != 27 * p


triples = st.tuples(rationals, rationals, rationals).map(_triple)

distinct_triples = st.tuples(rationals, rationals, rationals).filter(lambda entries: len(set(entries)) == 3).map(_triple)

# pairwise distinct, nonzero entries and a smooth curve
elliptic_triples = (
    st.tuples(nonzero_rationals, nonzero_rationals, nonzero_rationals)
    .filter(lambda entries: len(set(entries)) == 3)
    .map(_triple)
    .filter(_is_elliptic)
)


def _pairwise_coprime(entries: tuple[int, int, int]) -> bool:
    a, b, c = entries
    return gcd(a, b) == 1 and gcd(b, c) == 1 and gcd(a, c) == 1


coprime_integer_triples = (
    st.tuples(st.integers(-300, 300), st.integers(-300, 300), st.integers(-300, 300))
    .filter(lambda entries: 0 not in entries and len(set(entries)) == 3)
    .filter(_pairwise_coprime)
    .map(lambda entries: Triple.of(*entries))
)

scales = st.fractions(min_value=-20, max_value=20, max_denominator=9).filter(lambda value: value != 0)
parameters = st.fractions(min_value=-20, max_value=20, max_denominator=9)

genus_zero_params = st.tuples(scales, parameters.filter(lambda t: t not in (-1, 0, Fraction(1, 2), 1, 2)))
first_params = st.tuples(scales, parameters.filter(lambda t: t not in (-1, Fraction(-1, 2), 0)))
second_params = st.tuples(scales, parameters.filter(lambda t: t not in (-1, 0)))

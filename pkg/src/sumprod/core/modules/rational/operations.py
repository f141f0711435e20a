"""Elementary symmetric invariants, heights and exact verification of solution triples."""

from fractions import Fraction

from sumprod.core.modules.rational.models import Triple


def height(value: Fraction) -> int:
    """max(|numerator|, denominator) of a reduced rational."""
    return max(abs(value.numerator), value.denominator)


def triple_height(triple: Triple) -> int:
    return max(height(entry) for entry in triple.entries)


def elementary_invariants(triple: Triple) -> tuple[Fraction, Fraction]:
    """Return (s, p) = (x+y+z, xyz)."""
    x, y, z = triple.entries
    return x + y + z, x * y * z


def cube_sum(triple: Triple) -> Fraction:
    return sum((entry**3 for entry in triple.entries), Fraction(0))


def solves_sum_product(candidate: Triple, s: Fraction, p: Fraction) -> bool:
    return elementary_invariants(candidate) == (s, p)


def verify_sum_product(reference: Triple, candidate: Triple) -> bool:
    """True iff candidate has the same sum and the same product as reference."""
    return elementary_invariants(candidate) == elementary_invariants(reference)


def verify_sum_cubes(reference: Triple, candidate: Triple) -> bool:
    """True iff candidate has the same sum and the same sum of cubes as reference."""
    return sum(candidate.entries) == sum(reference.entries) and cube_sum(candidate) == cube_sum(reference)

from sumprod.core.modules.classify.conditions import condition_first_violations, condition_second_violations
from sumprod.core.modules.classify.models import Classification, Infinitude, TorsionType, Verdict
from sumprod.core.modules.curve.group import build_curve, discriminant, is_elliptic
from sumprod.core.modules.families.degenerate import family_first_invert, family_second_invert
from sumprod.core.modules.families.genus_zero import genus_zero_invert
from sumprod.core.modules.rational.models import Triple
from sumprod.core.modules.rational.operations import elementary_invariants

TORSION_INFINITUDE: dict[TorsionType, Infinitude] = {
    TorsionType.Z12: Infinitude.UNKNOWN,
    TorsionType.Z9: Infinitude.UNKNOWN,
    TorsionType.ZXZ3: Infinitude.YES,
}


def classify_triple(triple: Triple) -> Classification:
    """Classify a triple; checks run in the order repeated entries, zero product, genus zero, elliptic.

    For elliptic curves the torsion type is Z12 when condition (first) fails for some
    permutation, Z9 when condition (second) fails, and ZxZ3 otherwise.
    """
    if not triple.is_pairwise_distinct():
        return Classification(triple=triple, verdict=Verdict.NOT_PAIRWISE_DISTINCT, solutions_infinite=Infinitude.UNKNOWN)

    s, p = elementary_invariants(triple)
    if p == 0:
        return Classification(triple=triple, verdict=Verdict.PRODUCT_ZERO, solutions_infinite=Infinitude.YES)

    curve = build_curve(s, p)
    if not is_elliptic(s, p):
        return Classification(
            triple=triple,
            verdict=Verdict.GENUS_ZERO,
            solutions_infinite=Infinitude.YES,
            curve=curve,
            discriminant=discriminant(curve),
            family=genus_zero_invert(triple),
        )

    first = condition_first_violations(triple)
    second = condition_second_violations(triple)
    family = None
    if first:
        torsion = TorsionType.Z12
        family = family_first_invert(first[0])
    elif second:
        torsion = TorsionType.Z9
        family = family_second_invert(second[0])
    else:
        torsion = TorsionType.ZXZ3

    return Classification(
        triple=triple,
        verdict=Verdict.ELLIPTIC,
        solutions_infinite=TORSION_INFINITUDE[torsion],
        torsion=torsion,
        curve=curve,
        discriminant=discriminant(curve),
        first_violations=first,
        second_violations=second,
        family=family,
    )

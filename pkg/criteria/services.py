import logging
from math import gcd
from typing import Optional, Union

from congruence.services import (
    check_modulus,
    interval,
    multiset_congruent,
    reduce_exponents,
    residue_counts,
    uneven_residues,
)
from semigroups.exceptions import BadParameters, InvalidForm, NoClosedForm
from semigroups.models import NumericalSemigroup
from semigroups.services import (
    apery_set,
    generalized_arithmetic_generators,
    is_maximal_embedding_dimension,
)

from . import closed_forms
from .models import (
    ALL_MODULI,
    ArithmeticAperyForm,
    EDReport,
    Family,
    FamilyClassification,
    ModuliSentinel,
    Route,
)

logger = logging.getLogger(__name__)


def _first_nonzero(counts, offset: int) -> Optional[tuple[int, int]]:
    """
    For a difference vector D(r) = n(r - offset) - n(r) of gap residue counts,
    the gap-count pair behind its first nonzero entry.
    """
    m = len(counts)
    for r, value in enumerate(counts):
        if value:
            return tuple(sorted(((r - offset) % m, r)))
    return None


def ed_direct(semigroup: NumericalSemigroup, m: int) -> EDReport:
    histogram = residue_counts(semigroup.gaps, m)
    witness = uneven_residues(histogram)
    return EDReport(modulus=m, verdict=witness is None, route=Route.DIRECT, witness=witness)


def apery_base(semigroup: NumericalSemigroup, m: int) -> int:
    """Least nonzero element of S coprime to m."""
    check_modulus(m)
    n = 1
    while n not in semigroup or gcd(n, m) != 1:
        n += 1
    return n


def ed_apery_criterion(semigroup: NumericalSemigroup, m: int) -> EDReport:
    """
    Even distribution as Ap(S; a) == [0, a - 1] (mod m) for a base a coprime to m.

    (x^a - 1) * P_H = P_Ap - C_a, so a residue r where the two sides differ
    also separates the gap counts at r - a and r.
    """
    a = apery_base(semigroup, m)
    logger.debug("Apery base for %s mod %s is %s", semigroup, m, a)
    ap = apery_set(semigroup, a)
    block = interval(0, a - 1)
    if multiset_congruent(ap, block, m):
        return EDReport(modulus=m, verdict=True, route=Route.APERY, base=a)

    left = residue_counts(ap, m).counts
    right = residue_counts(block, m).counts
    difference = [x - y for x, y in zip(left, right)]
    return EDReport(
        modulus=m,
        verdict=False,
        route=Route.APERY,
        witness=_first_nonzero(difference, a),
        base=a,
    )


def ed_polynomial(semigroup: NumericalSemigroup, m: int) -> EDReport:
    product = reduce_exponents(semigroup.gaps, m).times_x_minus_one()
    if product.is_zero():
        return EDReport(modulus=m, verdict=True, route=Route.POLYNOMIAL)
    # Coefficient of x^r in (x - 1) * P_H is n(r - 1) - n(r).
    return EDReport(
        modulus=m,
        verdict=False,
        route=Route.POLYNOMIAL,
        witness=_first_nonzero(product.coeffs, 1),
    )


def _divisors(n: int) -> list[int]:
    small = [k for k in range(1, int(n**0.5) + 1) if n % k == 0]
    return sorted(set(small + [n // k for k in small]))


def ed_all_moduli(semigroup: NumericalSemigroup) -> Union[frozenset, ModuliSentinel]:
    """Every m modulo which H(S) is evenly distributed; such m divide the genus."""
    if semigroup.genus == 0:
        return ALL_MODULI
    return frozenset(
        m for m in _divisors(semigroup.genus) if residue_counts(semigroup.gaps, m).is_flat
    )


def _check_form(form: ArithmeticAperyForm) -> None:
    if form.a < 1 or form.delta < 1 or form.beta < 0:
        raise InvalidForm(f"not an arithmetic Apery form: {form}")
    if form.a >= 3 and (gcd(form.a, form.delta) != 1 or form.beta % form.a != 0):
        raise InvalidForm(f"need gcd(a, delta) = 1 and a | beta, got {form}")


def detect_arithmetic_apery(
    semigroup: NumericalSemigroup, a: int
) -> Optional[ArithmeticAperyForm]:
    """
    Parameters (a, beta, delta) with Ap(S; a) = {0} and beta + i * delta for
    1 <= i <= a - 1, or None when the nonzero Apery elements are not an
    arithmetic progression.
    """
    ap = apery_set(semigroup, a)
    if a == 1:
        return ArithmeticAperyForm(a=1, beta=0, delta=1)
    if a == 2:
        return ArithmeticAperyForm(a=2, beta=ap.elements[1] - 1, delta=1)

    nonzero = sorted(ap.nonzero)
    delta = nonzero[1] - nonzero[0]
    if any(y - x != delta for x, y in zip(nonzero, nonzero[1:])):
        return None
    form = ArithmeticAperyForm(a=a, beta=nonzero[0] - delta, delta=delta)
    _check_form(form)
    return form


def main_theorem_cases(form: ArithmeticAperyForm, m: int) -> tuple[int, ...]:
    """Which of the four congruence cases hold modulo m (gcd condition aside)."""
    a, beta, delta = form.a, form.beta, form.delta

    def congruent(x, y):
        return (x - y) % m == 0

    checks = (
        (1, congruent(a, 1)),
        (2, congruent(a, 2) and congruent(beta + delta, 1)),
        (3, congruent(delta, 1) and congruent(beta, 0)),
        (4, congruent(delta, -1) and congruent(beta, a)),
    )
    return tuple(case for case, holds in checks if holds)


def ed_main_theorem(form: ArithmeticAperyForm, m: int) -> EDReport:
    """
    ED verdict for a semigroup with an arithmetic Apery set.

    The a = 1 (beta = 0, delta = 1) and a = 2 (delta = 1) conventions make the
    same four cases exact, so they share the evaluation below.
    """
    check_modulus(m)
    _check_form(form)
    cases = main_theorem_cases(form, m)
    verdict = gcd(form.a * form.delta, m) == 1 and bool(cases)
    return EDReport(
        modulus=m,
        verdict=verdict,
        route=Route.CLOSED_FORM,
        cases=cases if verdict else (),
    )


def _generalized_arithmetic_parameters(
    semigroup: NumericalSemigroup,
) -> Optional[tuple[int, int, int]]:
    generators = semigroup.minimal_generators
    a = generators[0]
    others = generators[1:]
    d = others[1] - others[0]
    if any(y - x != d for x, y in zip(others, others[1:])):
        return None
    h, rest = divmod(others[0] - d, a)
    if rest or h < 1 or gcd(a, d) != 1:
        return None
    if tuple(generalized_arithmetic_generators(a, h, d)) != generators:
        return None

    # Ap(S; a) determines S, so it must match the family's Apery set.
    expected = {0} | {h * a + i * d for i in range(1, a)}
    if set(apery_set(semigroup, a).elements) != expected:
        logger.warning("Apery set of %s does not match (a=%s, h=%s, d=%s)", semigroup, a, h, d)
        return None
    return a, h, d


def classify_family(semigroup: NumericalSemigroup) -> FamilyClassification:
    generators = semigroup.minimal_generators
    if semigroup.multiplicity == 2:
        return FamilyClassification(Family.MULT2, b=generators[1])
    if semigroup.embedding_dimension == 2:
        return FamilyClassification(Family.EMBDIM2, a=generators[0], b=generators[1])
    if semigroup.multiplicity >= 3 and is_maximal_embedding_dimension(semigroup):
        parameters = _generalized_arithmetic_parameters(semigroup)
        if parameters is not None:
            a, h, d = parameters
            if h == 1:
                return FamilyClassification(Family.ARITH_MED, a=a, d=d)
            return FamilyClassification(Family.GEN_ARITH_MED, a=a, h=h, d=d)
    return FamilyClassification(Family.OTHER)


def ed_med_criterion(semigroup: NumericalSemigroup, m: int) -> bool:
    """For MED S of multiplicity a, gcd(a, m) = 1: (A minus {a}) == [1, a - 1] (mod m)."""
    check_modulus(m)
    a = semigroup.multiplicity
    if not is_maximal_embedding_dimension(semigroup):
        raise BadParameters(f"{semigroup} does not have maximal embedding dimension")
    if gcd(a, m) != 1:
        raise BadParameters(f"multiplicity {a} is not coprime to m={m}")
    return multiset_congruent(semigroup.minimal_generators[1:], interval(1, a - 1), m)


def _family_verdict(classification: FamilyClassification, m: int) -> bool:
    family = classification.family
    p = classification
    if family == Family.MULT2:
        return closed_forms.ed_mult2(p.b, m)
    if family == Family.EMBDIM2:
        return closed_forms.ed_embdim2(p.a, p.b, m)
    if family == Family.ARITH_MED:
        return closed_forms.ed_arith(p.a, p.d, m)
    return closed_forms.ed_gen_arith(p.a, p.h, p.d, m)


def ed_closed_form(semigroup: NumericalSemigroup, m: int) -> EDReport:
    check_modulus(m)
    classification = classify_family(semigroup)
    form = detect_arithmetic_apery(semigroup, semigroup.multiplicity)

    if classification.family == Family.OTHER:
        if form is None:
            raise NoClosedForm(f"no closed-form criterion applies to {semigroup}")
        return ed_main_theorem(form, m)

    verdict = _family_verdict(classification, m)
    generators = semigroup.minimal_generators
    if generators[0] == 3 and len(generators) == 3:
        b, c = generators[1], generators[2]
        if closed_forms.ed_mult3(b, c, m) != verdict:
            logger.warning("Multiplicity-3 criterion disagrees for %s mod %s", semigroup, m)

    cases = ()
    if verdict and form is not None and form.a >= 3:
        cases = main_theorem_cases(form, m)
    return EDReport(modulus=m, verdict=verdict, route=Route.CLOSED_FORM, cases=cases)


def condition_text(classification: FamilyClassification) -> Optional[str]:
    """The family's ED condition on m, with its parameters filled in."""
    p = classification
    if p.family == Family.MULT2:
        return f"m odd and m | {(p.b - 1) // 2}"
    if p.family == Family.EMBDIM2:
        return f"gcd({p.a * p.b}, m) = 1 and ({p.a} = 1 or {p.b} = 1 mod m)"
    if p.family == Family.ARITH_MED:
        return f"gcd({p.a * p.d}, m) = 1 and ({p.a} = 1 or {p.d} = -1 mod m)"
    if p.family == Family.GEN_ARITH_MED:
        return (
            f"gcd({p.a * p.d}, m) = 1 and ({p.a} = 1 or ({p.a} = 2 and {2 * p.h + p.d} = 1) "
            f"or ({p.d} = 1 and {p.h} = 0) or ({p.d} = -1 and {p.h} = 1) mod m)"
        )
    return None

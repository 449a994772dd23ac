import logging
import math
from collections import Counter
from typing import Iterable

from django.conf import settings

from .exceptions import (
    EmptyInput,
    GcdNotOne,
    InvalidGenerator,
    NotAMember,
    SemigroupTooLarge,
)
from .models import AperySet, NumericalSemigroup

logger = logging.getLogger(__name__)


def _check_table_size(size: int) -> None:
    limit = settings.NSGAP_SIEVE_LIMIT
    if size > limit:
        raise SemigroupTooLarge(size, limit)


def _add_generator(distances: list, generator: int) -> None:
    """
    Relax the residue table mod a = len(distances) with one more generator.

    The residues split into gcd(a, g) cycles r -> r + g (mod a); walking each
    cycle once from its current minimum settles it (round-robin update).
    """
    a = len(distances)
    step = generator % a
    if step == 0:
        return
    cycles = math.gcd(a, step)
    length = a // cycles
    for start in range(cycles):
        cycle = [(start + k * step) % a for k in range(length)]
        lowest = min(range(length), key=lambda k: distances[cycle[k]])
        current = distances[cycle[lowest]]
        if current == math.inf:
            continue
        for k in range(1, length):
            residue = cycle[(lowest + k) % length]
            current = min(current + generator, distances[residue])
            distances[residue] = current


def _minimal_generators_and_apery(generators: list[int]) -> tuple[list[int], list[int]]:
    """
    Drop redundant generators and return Ap(S; min generator) alongside.

    Generators are taken in increasing order: g is redundant iff the smaller
    kept generators already reach g, i.e. g >= distances[g mod a].
    """
    a = generators[0]
    _check_table_size(a)
    distances = [0] + [math.inf] * (a - 1)
    kept = [a]
    for g in generators[1:]:
        if distances[g % a] <= g:
            logger.debug("Generator %s is redundant", g)
            continue
        kept.append(g)
        _add_generator(distances, g)
    return kept, [int(d) for d in distances]


def _representable_up_to(generators: list[int], bound: int) -> bytearray:
    """Sieve of the integers in [0, bound] that are non-negative combinations."""
    _check_table_size(bound + 1)
    representable = bytearray(bound + 1)
    representable[0] = 1
    for g in generators:
        for n in range(g, bound + 1):
            if representable[n - g]:
                representable[n] = 1
    return representable


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Build the canonical numerical semigroup generated by `gens`."""
    gens = list(gens)
    if not gens:
        raise EmptyInput()
    for g in gens:
        if isinstance(g, bool) or not isinstance(g, int) or g < 1:
            raise InvalidGenerator(g)

    gcd = math.gcd(*gens)
    if gcd != 1:
        raise GcdNotOne(gcd)

    distinct = sorted(set(gens))
    if distinct[0] == 1:
        return NumericalSemigroup(
            minimal_generators=(1,),
            gaps=(),
            frobenius=-1,
            multiplicity_apery=(0,),
            generators=tuple(gens),
        )

    minimal, apery = _minimal_generators_and_apery(distinct)
    multiplicity = minimal[0]
    frobenius = frobenius_from_apery(AperySet(multiplicity, tuple(apery)))

    representable = _representable_up_to(minimal, frobenius + multiplicity)
    gaps = tuple(n for n in range(1, frobenius + 1) if not representable[n])

    return NumericalSemigroup(
        minimal_generators=tuple(minimal),
        gaps=gaps,
        frobenius=frobenius,
        multiplicity_apery=tuple(apery),
        generators=tuple(gens),
    )


def contains(semigroup: NumericalSemigroup, n: int) -> bool:
    return n in semigroup


def apery_set(semigroup: NumericalSemigroup, a: int) -> AperySet:
    """Ap(S; a) for a nonzero element a of S."""
    if a <= 0 or a not in semigroup:
        raise NotAMember(a, semigroup)
    if a == semigroup.multiplicity:
        return AperySet(a, semigroup.multiplicity_apery)

    # Every residue class has a member in [0, F + a].
    _check_table_size(semigroup.frobenius + a + 1)
    elements = [None] * a
    missing = a
    n = 0
    while missing:
        if n in semigroup and elements[n % a] is None:
            elements[n % a] = n
            missing -= 1
        n += 1
    return AperySet(a, tuple(elements))


def frobenius_from_apery(ap: AperySet) -> int:
    return max(ap.elements) - ap.relative_to


def gaps_from_apery(ap: AperySet) -> tuple[int, ...]:
    """Recover H(S) as {w - k*a : w in Ap(S; a), k >= 1, w - k*a > 0}."""
    a = ap.relative_to
    gaps = []
    for w in ap.elements:
        gaps.extend(range(w - a, 0, -a))
    return tuple(sorted(gaps))


def is_maximal_embedding_dimension(semigroup: NumericalSemigroup) -> bool:
    return semigroup.embedding_dimension == semigroup.multiplicity


def generalized_arithmetic_generators(a: int, h: int, d: int) -> list[int]:
    """{a} together with h*a + i*d for 1 <= i <= a - 1."""
    return [a] + [h * a + i * d for i in range(1, a)]


def arithmetic_generators(a: int, d: int) -> list[int]:
    return generalized_arithmetic_generators(a, 1, d)


def gap_polynomial(semigroup: NumericalSemigroup) -> Counter:
    """Sparse P_H(S)(x) as exponent -> coefficient."""
    return Counter(semigroup.gaps)


def alternating_gap_sum(semigroup: NumericalSemigroup) -> int:
    """Sum of (-1)^n over the gaps: #even gaps - #odd gaps."""
    return sum(1 if n % 2 == 0 else -1 for n in semigroup.gaps)

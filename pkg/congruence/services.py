import logging
from typing import Iterable, Optional

from semigroups.exceptions import BadParameters, InvalidModulus, NegativeExponent

from .models import IntMultiset, ResidueHistogram
from .polynomials import CycPoly, divmod_x_power_minus_one, multiply_by_x_minus_one

logger = logging.getLogger(__name__)


def check_modulus(m: int) -> None:
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise InvalidModulus(m)


def _non_negative(values: Iterable[int]) -> list[int]:
    entries = list(values)
    for value in entries:
        if value < 0:
            raise NegativeExponent(value)
    return entries


def interval(lo: int, hi: int) -> IntMultiset:
    return IntMultiset.interval(lo, hi)


def residue_counts(values: Iterable[int], m: int) -> ResidueHistogram:
    """n_{r,m}: how many entries fall in each residue class r in [0, m - 1]."""
    check_modulus(m)
    counts = [0] * m
    for value in values:
        # Python's % already gives the canonical residue for negative values.
        counts[value % m] += 1
    return ResidueHistogram(m, tuple(counts))


def multiset_congruent(a: Iterable[int], b: Iterable[int], m: int) -> bool:
    return residue_counts(a, m) == residue_counts(b, m)


def is_evenly_distributed(values: Iterable[int], m: int) -> bool:
    return residue_counts(values, m).is_flat


def uneven_residues(histogram: ResidueHistogram) -> Optional[tuple[int, int]]:
    """Lexicographically least pair r1 < r2 with unequal counts, if any."""
    counts = histogram.counts
    for r in range(1, histogram.modulus):
        if counts[r] != counts[0]:
            return 0, r
    return None


def reduce_exponents(values: Iterable[int], m: int) -> CycPoly:
    """P_A(x) reduced modulo x^m - 1; its coefficients are the residue counts."""
    entries = _non_negative(values)
    return CycPoly(m, residue_counts(entries, m).counts)


def cyc_c_n(n: int, m: int) -> CycPoly:
    """C_n(x) = 1 + x + ... + x^(n-1) reduced modulo x^m - 1."""
    check_modulus(m)
    if n < 1:
        raise BadParameters(f"C_n needs n >= 1, got {n}")
    full, rest = divmod(n, m)
    return CycPoly(m, tuple(full + (1 if r < rest else 0) for r in range(m)))


def ed_via_polynomial(values: Iterable[int], m: int) -> bool:
    """Even distribution as (x - 1) * P_A(x) == 0 in Z[x]/(x^m - 1)."""
    return reduce_exponents(values, m).times_x_minus_one().is_zero()


def divisible_by_c_n(values: Iterable[int], m: int) -> bool:
    """
    Whether C_m(x) divides P_A(x) exactly in Z[x].

    P_A = C_m * Q iff (x - 1) * P_A = (x^m - 1) * Q, and dividing by the monic
    x^m - 1 is exact integer long division.
    """
    check_modulus(m)
    entries = _non_negative(values)
    if not entries:
        return True
    dense = [0] * (max(entries) + 1)
    for e in entries:
        dense[e] += 1
    logger.debug("Dividing (x - 1) * P_A of degree %s by x^%s - 1", len(dense) - 1, m)
    _, remainder = divmod_x_power_minus_one(multiply_by_x_minus_one(dense), m)
    return not any(remainder)

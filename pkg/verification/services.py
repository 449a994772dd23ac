import logging
import random
import time
from collections import Counter
from math import gcd
from typing import Callable

from congruence.services import divisible_by_c_n, interval, multiset_congruent
from criteria import closed_forms
from criteria.models import ArithmeticAperyForm
from criteria.services import (
    detect_arithmetic_apery,
    ed_all_moduli,
    ed_apery_criterion,
    ed_direct,
    ed_main_theorem,
    ed_med_criterion,
    ed_polynomial,
)
from semigroups.exceptions import BadParameters
from semigroups.models import NumericalSemigroup
from semigroups.services import (
    alternating_gap_sum,
    apery_set,
    from_generators,
    generalized_arithmetic_generators,
    is_maximal_embedding_dimension,
)

from .models import Mismatch, SweepReport
from .oracle import oracle_ed
from .support import four_element_congruence

logger = logging.getLogger(__name__)

RANDOM_GENERATOR_MAX = 60


class _Sweep:
    """Collects checks for one sweep and turns them into a SweepReport."""

    def __init__(self, name: str):
        self.name = name
        self.instances = 0
        self.mismatches = []
        self.started = time.perf_counter()
        logger.info("Starting sweep %s", name)

    def check(self, check: str, parameters: dict, expected, got) -> bool:
        if expected == got:
            return True
        mismatch = Mismatch(tuple(parameters.items()), check, expected, got)
        logger.warning(
            "Sweep %s: %s failed for %s (expected %r, got %r)",
            self.name, check, parameters, expected, got,
        )
        self.mismatches.append(mismatch)
        return False

    def report(self) -> SweepReport:
        elapsed = (time.perf_counter() - self.started) * 1000
        logger.info(
            "Finished sweep %s: %s instances, %s mismatches in %.1f ms",
            self.name, self.instances, len(self.mismatches), elapsed,
        )
        return SweepReport(
            sweep_name=self.name,
            instances_checked=self.instances,
            mismatches=tuple(sorted(self.mismatches)),
            elapsed_ms=elapsed,
        )


def _moduli(semigroup: NumericalSemigroup) -> range:
    return range(1, semigroup.genus + 3)


def random_generators(rng: random.Random) -> list[int]:
    """3 to 5 distinct values in [2, 60] with gcd 1."""
    while True:
        count = rng.randint(3, 5)
        generators = sorted(rng.sample(range(2, RANDOM_GENERATOR_MAX + 1), count))
        if gcd(*generators) == 1:
            return generators


def check_tuenter_identity(semigroup: NumericalSemigroup, a: int) -> bool:
    """
    (x^a - 1) * P_H(x) == sum of x^w over Ap(S; a) minus C_a(x), exactly in Z[x].
    """
    ap = apery_set(semigroup, a)
    left = Counter()
    for n in semigroup.gaps:
        left[n + a] += 1
        left[n] -= 1
    left.subtract(ap.elements)
    left.update(range(a))
    return not any(left.values())


def check_tuenter_sum(semigroup: NumericalSemigroup, a: int, f: Callable) -> bool:
    """sum over gaps of f(n + a) - f(n) == sum over Ap(S; a) of f minus sum of f on [0, a - 1]."""
    ap = apery_set(semigroup, a)
    left = sum(f(n + a) - f(n) for n in semigroup.gaps)
    right = sum(f(w) for w in ap.elements) - sum(f(n) for n in range(a))
    return left == right


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def _square(n: int) -> int:
    return n * n


def sweep_embdim2(max_b: int) -> SweepReport:
    if max_b < 3:
        raise BadParameters(f"max_b must be at least 3, got {max_b}")
    sweep = _Sweep("emb2")
    for b in range(3, max_b + 1):
        for a in range(2, b):
            if gcd(a, b) != 1:
                continue
            semigroup = from_generators([a, b])
            params = {"a": a, "b": b}
            sweep.check("genus", params, closed_forms.genus_embdim2(a, b), semigroup.genus)
            sweep.check(
                "frobenius", params, closed_forms.frobenius_embdim2(a, b), semigroup.frobenius
            )
            sweep.check(
                "alternating_sum",
                params,
                closed_forms.alternating_sum_embdim2(a, b),
                alternating_gap_sum(semigroup),
            )
            sweep.check(
                "parity", params, bool(a % 2 and b % 2), closed_forms.ed_embdim2(a, b, 2)
            )
            for m in _moduli(semigroup):
                sweep.instances += 1
                sweep.check(
                    "ed_embdim2",
                    {**params, "m": m},
                    oracle_ed(semigroup, m),
                    closed_forms.ed_embdim2(a, b, m),
                )
    return sweep.report()


def sweep_gen_arith(max_a: int, max_hd: int) -> SweepReport:
    if max_a < 3 or max_hd < 1:
        raise BadParameters(f"need max_a >= 3 and max_hd >= 1, got {max_a}, {max_hd}")
    sweep = _Sweep("genarith")
    for a in range(3, max_a + 1):
        for h in range(1, max_hd + 1):
            for d in range(1, max_hd + 1):
                if gcd(a, d) != 1:
                    continue
                _check_gen_arith_instance(sweep, a, h, d)
    return sweep.report()


def _check_gen_arith_instance(sweep: _Sweep, a: int, h: int, d: int) -> None:
    semigroup = from_generators(generalized_arithmetic_generators(a, h, d))
    params = {"a": a, "h": h, "d": d}
    sweep.check("genus", params, closed_forms.genus_gen_arith(a, h, d), semigroup.genus)
    sweep.check(
        "frobenius", params, closed_forms.frobenius_gen_arith(a, h, d), semigroup.frobenius
    )
    form = detect_arithmetic_apery(semigroup, a)
    expected_form = ArithmeticAperyForm(a=a, beta=h * a, delta=d)
    if not sweep.check("apery_form", params, expected_form, form):
        return

    for m in _moduli(semigroup):
        sweep.instances += 1
        at = {**params, "m": m}
        truth = oracle_ed(semigroup, m)
        verdict = closed_forms.ed_gen_arith(a, h, d, m)
        sweep.check("ed_gen_arith", at, truth, verdict)
        sweep.check("main_theorem", at, truth, ed_main_theorem(form, m).verdict)
        sweep.check("four_element", at, truth, four_element_congruence(form, m))
        if truth:
            sweep.check("necessary", at, True, closed_forms.gen_arith_necessary(a, h, d, m))
        if h == 1:
            sweep.check("ed_arith", at, verdict, closed_forms.ed_arith(a, d, m))
        if a == 3:
            b, c = generalized_arithmetic_generators(a, h, d)[1:]
            sweep.check("ed_mult3", at, truth, closed_forms.ed_mult3(b, c, m))


def sweep_equivalences(trials: int, seed: int) -> SweepReport:
    if trials < 1:
        raise BadParameters(f"trials must be at least 1, got {trials}")
    sweep = _Sweep("equiv")
    rng = random.Random(seed)
    for _ in range(trials):
        generators = random_generators(rng)
        semigroup = from_generators(generators)
        _check_equivalences(sweep, semigroup, {"gens": tuple(generators)})
    return sweep.report()


def _check_equivalences(sweep: _Sweep, semigroup: NumericalSemigroup, params: dict) -> None:
    evenly = set()
    apery_sets = {}

    def apery_at(a):
        if a not in apery_sets:
            apery_sets[a] = apery_set(semigroup, a)
        return apery_sets[a]

    for m in _moduli(semigroup):
        sweep.instances += 1
        at = {**params, "m": m}
        direct = ed_direct(semigroup, m).verdict
        if direct:
            evenly.add(m)

        sweep.check("oracle", at, oracle_ed(semigroup, m), direct)
        sweep.check("polynomial", at, direct, ed_polynomial(semigroup, m).verdict)
        sweep.check("c_m_divides", at, direct, divisible_by_c_n(semigroup.gaps, m))

        apery = ed_apery_criterion(semigroup, m)
        sweep.check("apery", at, direct, apery.verdict)
        ap = apery_at(apery.base)
        sweep.check(
            "apery_nonzero",
            at,
            direct,
            multiset_congruent(ap.nonzero, interval(1, apery.base - 1), m),
        )

        for g in semigroup.minimal_generators:
            if gcd(g, m) == 1:
                ap_g = apery_at(g)
                sweep.check(
                    "two_base", {**at, "base": g}, direct,
                    multiset_congruent(ap_g, interval(0, g - 1), m),
                )

        if is_maximal_embedding_dimension(semigroup) and gcd(semigroup.multiplicity, m) == 1:
            sweep.check("med", at, direct, ed_med_criterion(semigroup, m))

        # m = 1 is a single residue class, nothing to check.
        if direct and m > 1:
            for a in range(1, semigroup.frobenius + m + 2):
                if a in semigroup:
                    sweep.check(
                        "apery_implied", {**at, "base": a}, True,
                        multiset_congruent(apery_at(a), interval(0, a - 1), m),
                    )

    for m in sorted(evenly):
        divisors = {k for k in range(1, m + 1) if m % k == 0}
        sweep.check("divisor_closed", {**params, "m": m}, set(), divisors - evenly)

    genus = semigroup.genus
    if genus > 0 and genus in semigroup:
        sweep.check(
            "genus_obstruction", {**params, "m": genus}, False, ed_direct(semigroup, genus).verdict
        )


def sweep_tuenter(trials: int, seed: int) -> SweepReport:
    if trials < 1:
        raise BadParameters(f"trials must be at least 1, got {trials}")
    sweep = _Sweep("tuenter")
    rng = random.Random(seed)
    for _ in range(trials):
        generators = random_generators(rng)
        semigroup = from_generators(generators)
        bases = [n for n in range(1, semigroup.frobenius + 21) if n in semigroup]
        a = rng.choice(bases)
        params = {"gens": tuple(generators), "a": a}
        sweep.instances += 1
        sweep.check("identity", params, True, check_tuenter_identity(semigroup, a))
        sweep.check("sum_sign", params, True, check_tuenter_sum(semigroup, a, _sign))
        sweep.check("sum_square", params, True, check_tuenter_sum(semigroup, a, _square))
    return sweep.report()


def mult3_pairs(max_c: int):
    """(b, c) with 3 < b < c <= max_c, c < 2b, gcd(3, bc) = 1 and b, c apart mod 3."""
    for c in range(5, max_c + 1):
        for b in range(max(4, c // 2 + 1), c):
            if b % 3 and c % 3 and (b - c) % 3:
                yield b, c


def sweep_mult3(max_c: int, max_m: int) -> SweepReport:
    if max_c < 5 or max_m < 1:
        raise BadParameters(f"need max_c >= 5 and max_m >= 1, got {max_c}, {max_m}")
    sweep = _Sweep("mult3")
    for b, c in mult3_pairs(max_c):
        semigroup = from_generators([3, b, c])
        h, d = (2 * b - c) // 3, c - b
        for m in range(1, max_m + 1):
            sweep.instances += 1
            at = {"b": b, "c": c, "m": m}
            verdict = closed_forms.ed_mult3(b, c, m)
            sweep.check("ed_gen_arith", at, verdict, closed_forms.ed_gen_arith(3, h, d, m))
            sweep.check("oracle", at, oracle_ed(semigroup, m), verdict)
    return sweep.report()


def sweep_mult2(max_b: int) -> SweepReport:
    if max_b < 3:
        raise BadParameters(f"max_b must be at least 3, got {max_b}")
    sweep = _Sweep("mult2")
    for b in range(3, max_b + 1, 2):
        semigroup = from_generators([2, b])
        half = (b - 1) // 2
        expected = frozenset(k for k in range(1, half + 1, 2) if half % k == 0)
        form = ArithmeticAperyForm(a=2, beta=b - 1, delta=1)
        moduli = _moduli(semigroup)
        params = {"b": b}
        sweep.instances += 1
        sweep.check("ed_all_moduli", params, expected, ed_all_moduli(semigroup))
        sweep.check(
            "ed_mult2", params, expected,
            frozenset(m for m in moduli if closed_forms.ed_mult2(b, m)),
        )
        sweep.check(
            "main_theorem", params, expected,
            frozenset(m for m in moduli if ed_main_theorem(form, m).verdict),
        )
        sweep.check(
            "oracle", params, expected, frozenset(m for m in moduli if oracle_ed(semigroup, m))
        )
    return sweep.report()

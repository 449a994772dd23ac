import random
from fractions import Fraction
from math import gcd
from unittest.mock import patch

from django.test import SimpleTestCase

from congruence.services import divisible_by_c_n
from criteria.models import ArithmeticAperyForm
from criteria.services import ed_direct, ed_main_theorem
from semigroups.exceptions import BadParameters, NotAMember
from semigroups.services import from_generators
from verification.models import Mismatch, SweepReport
from verification.oracle import naive_bound, naive_gaps, oracle_ed
from verification.services import (
    check_tuenter_identity,
    check_tuenter_sum,
    mult3_pairs,
    random_generators,
    sweep_embdim2,
    sweep_equivalences,
    sweep_gen_arith,
    sweep_mult2,
    sweep_mult3,
    sweep_tuenter,
)
from verification.support import (
    c_m_divides,
    four_element_congruence,
    poly_gcd,
    x_power_minus_one,
)


class OracleTestCase(SimpleTestCase):
    """The brute-force oracle works from the generators as given, never the minimized ones."""

    def test_examples(self):
        self.assertTrue(oracle_ed(from_generators([5, 7]), 4))
        self.assertFalse(oracle_ed(from_generators([4, 5, 11]), 5))
        self.assertTrue(oracle_ed(from_generators([1]), 3))

    def test_naive_gaps_match_the_sieve(self):
        for generators in ([5, 7], [3, 5], [4, 5, 11], [6, 9, 20], [2, 3], [1]):
            s = from_generators(generators)
            self.assertEqual(naive_gaps(s), s.gaps)

    @patch("semigroups.services._minimal_generators_and_apery", return_value=([4, 5], [0, 5, 10, 15]))
    def test_oracle_catches_a_lost_generator(self, mock_minimal):
        # Minimization wrongly drops 11, leaving <4, 5> with gaps evenly spread mod 3.
        s = from_generators([4, 5, 11])
        self.assertEqual(s.gaps, (1, 2, 3, 6, 7, 11))
        self.assertEqual(naive_gaps(s), (1, 2, 3, 6, 7))
        self.assertTrue(ed_direct(s, 3).verdict)
        self.assertFalse(oracle_ed(s, 3))

    def test_naive_bound(self):
        self.assertEqual(naive_bound([5, 7]), 56)


class TuenterTestCase(SimpleTestCase):
    def test_identity(self):
        self.assertTrue(check_tuenter_identity(from_generators([3, 5]), 3))
        self.assertTrue(check_tuenter_identity(from_generators([4, 5, 11]), 4))
        self.assertTrue(check_tuenter_identity(from_generators([1]), 1))
        self.assertTrue(check_tuenter_identity(from_generators([3, 5]), 14))

    def test_identity_needs_a_member(self):
        with self.assertRaises(NotAMember):
            check_tuenter_identity(from_generators([3, 5]), 4)

    def test_sum_with_exact_functions(self):
        s = from_generators([5, 7])
        self.assertTrue(check_tuenter_sum(s, 5, lambda n: n))
        self.assertTrue(check_tuenter_sum(s, 7, lambda n: Fraction(1, n + 1)))
        self.assertTrue(check_tuenter_sum(s, 12, lambda n: (-1) ** n))

    def test_hundred_random_pairs(self):
        report = sweep_tuenter(100, 7)
        self.assertEqual(report.instances_checked, 100)
        self.assertEqual(report.mismatches, ())


class SupportTestCase(SimpleTestCase):
    def test_four_element_test_matches_the_theorem(self):
        for a in range(3, 8):
            for delta in range(1, 12):
                if gcd(a, delta) != 1:
                    continue
                for h in range(0, 4):
                    form = ArithmeticAperyForm(a, h * a, delta)
                    for m in range(1, 25):
                        self.assertEqual(
                            four_element_congruence(form, m), ed_main_theorem(form, m).verdict
                        )

    def test_gcd_of_x_powers_minus_one(self):
        for a in range(1, 31):
            for b in range(1, 31):
                self.assertEqual(
                    poly_gcd(x_power_minus_one(a), x_power_minus_one(b)),
                    x_power_minus_one(gcd(a, b)),
                    (a, b),
                )

    def test_gcd_is_primitive_with_positive_leading_coefficient(self):
        # gcd(2x^2 - 2, -3x - 3) = x + 1.
        self.assertEqual(poly_gcd([-2, 0, 2], [-3, -3]), [1, 1])

    def test_sympy_remainder_agrees_with_exact_division(self):
        for generators in ([5, 7], [4, 5, 11], [3, 13, 17]):
            gaps = from_generators(generators).gaps
            for m in range(1, 14):
                self.assertEqual(c_m_divides(gaps, m), divisible_by_c_n(gaps, m))


class SweepReportTestCase(SimpleTestCase):
    def test_elapsed_is_ignored_by_equality(self):
        self.assertEqual(SweepReport("emb2", 3, (), 1.0), SweepReport("emb2", 3, (), 99.0))
        self.assertTrue(SweepReport("emb2", 3).passed)

    def test_mismatches_sort_by_parameters(self):
        late = Mismatch((("a", 3), ("b", 4)), "genus", 3, 4)
        early = Mismatch((("a", 2), ("b", 9)), "genus", 4, 5)
        self.assertEqual(sorted([late, early]), [early, late])
        self.assertEqual(early.parameter_dict(), {"a": 2, "b": 9})

    @patch("verification.services.closed_forms.genus_embdim2", return_value=-1)
    @patch("verification.services.logger")
    def test_mismatch_is_logged_and_reported(self, mock_logger, mock_genus):
        report = sweep_embdim2(3)
        self.assertFalse(report.passed)
        self.assertEqual(report.mismatches[0].check, "genus")
        self.assertEqual(report.mismatches[0].parameter_dict(), {"a": 2, "b": 3})
        mock_logger.warning.assert_called_once()


class SweepTestCase(SimpleTestCase):
    """
    Every sweep on a small grid and at its default size.

    The default-size runs take a few seconds each; all of them must report zero
    mismatches against the brute-force oracle.
    """

    def test_embdim2_grid(self):
        report = sweep_embdim2(3)
        # <2, 3> has genus 1: moduli 1, 2 and 3.
        self.assertEqual(report.instances_checked, 3)
        self.assertTrue(report.passed)
        self.assertEqual(sweep_embdim2(15).mismatches, ())

    def test_embdim2_full_size(self):
        report = sweep_embdim2(40)
        self.assertEqual(report.mismatches, ())
        self.assertGreater(report.instances_checked, 0)

    def test_gen_arith_small(self):
        self.assertGreaterEqual(sweep_gen_arith(3, 1).instances_checked, 1)
        self.assertEqual(sweep_gen_arith(3, 10).mismatches, ())

    def test_gen_arith_full_size(self):
        report = sweep_gen_arith(12, 10)
        self.assertEqual(report.mismatches, ())

    def test_equivalences_full_size(self):
        report = sweep_equivalences(200, 42)
        self.assertEqual(report.mismatches, ())

    def test_equivalences_are_deterministic(self):
        self.assertEqual(sweep_equivalences(3, 5), sweep_equivalences(3, 5))

    def test_mult3_reconciliation(self):
        report = sweep_mult3(60, 30)
        self.assertEqual(report.mismatches, ())
        self.assertEqual(report.instances_checked, 30 * len(list(mult3_pairs(60))))

    def test_mult3_pairs(self):
        self.assertEqual(list(mult3_pairs(8)), [(4, 5), (5, 7), (7, 8)])

    def test_mult2(self):
        report = sweep_mult2(41)
        self.assertEqual(report.instances_checked, 20)
        self.assertEqual(report.mismatches, ())

    def test_bad_grids(self):
        with self.assertRaises(BadParameters):
            sweep_embdim2(2)
        with self.assertRaises(BadParameters):
            sweep_gen_arith(2, 5)
        with self.assertRaises(BadParameters):
            sweep_equivalences(0, 1)

    def test_random_generators(self):
        rng = random.Random(1)
        for _ in range(50):
            generators = random_generators(rng)
            self.assertTrue(3 <= len(generators) <= 5)
            self.assertEqual(gcd(*generators), 1)
            self.assertTrue(all(2 <= g <= 60 for g in generators))

from math import gcd
from unittest.mock import patch

from django.test import SimpleTestCase
from hypothesis import assume, given, settings as hypothesis_settings, strategies as st

from congruence.services import residue_counts
from criteria import closed_forms
from criteria.models import ALL_MODULI, ArithmeticAperyForm, Family, FamilyClassification, Route
from criteria.services import (
    apery_base,
    classify_family,
    condition_text,
    detect_arithmetic_apery,
    ed_all_moduli,
    ed_apery_criterion,
    ed_closed_form,
    ed_direct,
    ed_main_theorem,
    ed_med_criterion,
    ed_polynomial,
)
from semigroups.exceptions import (
    BadParameters,
    InvalidForm,
    InvalidModulus,
    NoClosedForm,
    NotAMember,
)
from semigroups.services import from_generators, generalized_arithmetic_generators


class DirectAndAperyTestCase(SimpleTestCase):
    """
    The counting routes (direct, Apery, polynomial) on the worked examples.

    All three must agree on the verdict; the witness pair may differ by route.
    """

    def setUp(self):
        """
        <5, 7>: gaps evenly distributed exactly for m in {1, 2, 3, 4, 6}.
        <3, 5>: gaps {1, 2, 4, 7}, evenly distributed mod 4.
        <4, 5, 11>: Ap(S; 5) is congruent to [0, 4] mod 5, yet the gaps are not
        evenly distributed mod 5.
        """
        self.five_seven = from_generators([5, 7])
        self.three_five = from_generators([3, 5])
        self.non_example = from_generators([4, 5, 11])

    def test_direct(self):
        report = ed_direct(self.five_seven, 6)
        self.assertTrue(report.verdict)
        self.assertEqual(report.route, Route.DIRECT)
        self.assertIsNone(report.witness)

        report = ed_direct(self.five_seven, 12)
        self.assertFalse(report.verdict)
        self.assertEqual(report.witness, (0, 1))

        self.assertTrue(ed_direct(from_generators([1]), 9).verdict)

    def test_apery_criterion(self):
        report = ed_apery_criterion(self.three_five, 4)
        self.assertTrue(report.verdict)
        self.assertEqual(report.base, 3)

        report = ed_apery_criterion(self.non_example, 5)
        self.assertFalse(report.verdict)
        self.assertEqual(report.base, 4)
        self.assertEqual(report.witness, (0, 1))

        self.assertTrue(ed_apery_criterion(self.non_example, 1).verdict)

    def test_apery_base_is_least_coprime_member(self):
        self.assertEqual(apery_base(self.five_seven, 5), 7)
        self.assertEqual(apery_base(self.five_seven, 35), 12)
        with self.assertRaises(InvalidModulus):
            apery_base(self.five_seven, 0)

    @patch("criteria.services.logger")
    def test_apery_base_is_logged(self, mock_logger):
        ed_apery_criterion(self.three_five, 4)
        mock_logger.debug.assert_called_once_with(
            "Apery base for %s mod %s is %s", self.three_five, 4, 3
        )

    def test_polynomial(self):
        self.assertTrue(ed_polynomial(self.five_seven, 6).verdict)
        report = ed_polynomial(self.five_seven, 12)
        self.assertFalse(report.verdict)
        self.assertEqual(report.route, Route.POLYNOMIAL)
        self.assertEqual(report.witness, (0, 11))

    def test_non_example(self):
        # Ap(S; 5) is congruent to [0, 4] mod 5, yet the gaps are unbalanced.
        self.assertFalse(ed_direct(self.non_example, 5).verdict)
        self.assertFalse(ed_apery_criterion(self.non_example, 5).verdict)

    def test_all_moduli(self):
        self.assertEqual(ed_all_moduli(self.five_seven), frozenset({1, 2, 3, 4, 6}))
        self.assertEqual(ed_all_moduli(self.non_example), frozenset({1}))
        self.assertIs(ed_all_moduli(from_generators([1])), ALL_MODULI)

    @hypothesis_settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(min_value=2, max_value=25), min_size=2, max_size=4))
    def test_routes_agree(self, generators):
        assume(gcd(*generators) == 1)
        s = from_generators(generators)
        for m in range(1, s.genus + 3):
            direct = ed_direct(s, m)
            for report in (ed_apery_criterion(s, m), ed_polynomial(s, m)):
                self.assertEqual(report.verdict, direct.verdict)
                if report.witness is not None:
                    counts = residue_counts(s.gaps, m).counts
                    r1, r2 = report.witness
                    self.assertNotEqual(counts[r1], counts[r2])


class ArithmeticAperyTestCase(SimpleTestCase):
    def test_detect(self):
        self.assertEqual(
            detect_arithmetic_apery(from_generators([5, 7]), 5), ArithmeticAperyForm(5, 0, 7)
        )
        self.assertEqual(
            detect_arithmetic_apery(from_generators([3, 13, 17]), 3), ArithmeticAperyForm(3, 9, 4)
        )
        self.assertIsNone(detect_arithmetic_apery(from_generators([4, 5, 11]), 4))

    def test_small_bases(self):
        self.assertEqual(
            detect_arithmetic_apery(from_generators([1]), 1), ArithmeticAperyForm(1, 0, 1)
        )
        self.assertEqual(
            detect_arithmetic_apery(from_generators([2, 7]), 2), ArithmeticAperyForm(2, 6, 1)
        )

    def test_detect_needs_a_member(self):
        with self.assertRaises(NotAMember):
            detect_arithmetic_apery(from_generators([5, 7]), 6)

    def test_main_theorem(self):
        form = ArithmeticAperyForm(5, 0, 7)
        report = ed_main_theorem(form, 6)
        self.assertTrue(report.verdict)
        self.assertEqual(report.cases, (3,))
        self.assertEqual(report.route, Route.CLOSED_FORM)

        self.assertFalse(ed_main_theorem(form, 12).verdict)
        self.assertFalse(ed_main_theorem(ArithmeticAperyForm(3, 9, 4), 2).verdict)

    def test_every_case_fires_modulo_one(self):
        report = ed_main_theorem(ArithmeticAperyForm(3, 9, 4), 1)
        self.assertTrue(report.verdict)
        self.assertEqual(report.cases, (1, 2, 3, 4))

    def test_small_base_conventions(self):
        for m in range(1, 20):
            self.assertTrue(ed_main_theorem(ArithmeticAperyForm(1, 0, 1), m).verdict)
        # <2, 7>: m odd and m | 6.
        moduli = {m for m in range(1, 20) if ed_main_theorem(ArithmeticAperyForm(2, 6, 1), m).verdict}
        self.assertEqual(moduli, {1, 3})

    def test_invalid_forms(self):
        with self.assertRaises(InvalidForm):
            ed_main_theorem(ArithmeticAperyForm(4, 2, 3), 5)
        with self.assertRaises(InvalidForm):
            ed_main_theorem(ArithmeticAperyForm(3, 9, 3), 5)
        with self.assertRaises(InvalidForm):
            ed_main_theorem(ArithmeticAperyForm(3, -3, 1), 5)


class ClassifyFamilyTestCase(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(
            classify_family(from_generators([5, 7])), FamilyClassification(Family.EMBDIM2, a=5, b=7)
        )
        self.assertEqual(
            classify_family(from_generators([3, 13, 17])),
            FamilyClassification(Family.GEN_ARITH_MED, a=3, h=3, d=4),
        )
        self.assertEqual(
            classify_family(from_generators([3, 4, 5])),
            FamilyClassification(Family.ARITH_MED, a=3, d=1),
        )
        self.assertEqual(classify_family(from_generators([4, 5, 11])).family, Family.OTHER)
        self.assertEqual(classify_family(from_generators([1])).family, Family.OTHER)

    def test_multiplicity_two_wins(self):
        classification = classify_family(from_generators([2, 7]))
        self.assertEqual(classification.family, Family.MULT2)
        self.assertEqual(classification.parameters, {"b": 7})

    def test_generalized_family_round_trip(self):
        for a in range(3, 8):
            for h in range(1, 5):
                for d in range(1, 6):
                    if gcd(a, d) != 1:
                        continue
                    s = from_generators(generalized_arithmetic_generators(a, h, d))
                    classification = classify_family(s)
                    self.assertEqual((classification.a, classification.d), (a, d))
                    self.assertEqual(classification.h, None if h == 1 else h)

    def test_med_but_not_arithmetic(self):
        s = from_generators([4, 6, 7, 9])
        self.assertEqual(s.embedding_dimension, 4)
        self.assertEqual(classify_family(s).family, Family.OTHER)

    def test_condition_text(self):
        self.assertEqual(
            condition_text(FamilyClassification(Family.EMBDIM2, a=5, b=7)),
            "gcd(35, m) = 1 and (5 = 1 or 7 = 1 mod m)",
        )
        self.assertEqual(
            condition_text(FamilyClassification(Family.MULT2, b=7)), "m odd and m | 3"
        )
        self.assertIsNone(condition_text(FamilyClassification(Family.OTHER)))


class MedAndClosedFormTestCase(SimpleTestCase):
    """Maximal embedding dimension criterion and the family dispatch of ed_closed_form."""

    def test_med_criterion(self):
        self.assertTrue(ed_med_criterion(from_generators([3, 4, 5]), 2))
        self.assertFalse(ed_med_criterion(from_generators([3, 13, 17]), 2))

    def test_med_criterion_preconditions(self):
        with self.assertRaises(BadParameters):
            ed_med_criterion(from_generators([4, 5, 11]), 3)
        with self.assertRaises(BadParameters):
            ed_med_criterion(from_generators([3, 4, 5]), 3)

    def test_med_criterion_matches_direct(self):
        for generators in ([3, 4, 5], [3, 13, 17], [4, 5, 6, 7], [4, 6, 7, 9], [5, 6, 7, 8, 9]):
            s = from_generators(generators)
            for m in range(1, s.genus + 3):
                if gcd(s.multiplicity, m) == 1:
                    self.assertEqual(ed_med_criterion(s, m), ed_direct(s, m).verdict)

    def test_closed_form_examples(self):
        report = ed_closed_form(from_generators([5, 7]), 6)
        self.assertTrue(report.verdict)
        self.assertEqual(report.route, Route.CLOSED_FORM)
        self.assertEqual(report.cases, (3,))
        self.assertTrue(ed_closed_form(from_generators([2, 7]), 3).verdict)
        self.assertTrue(ed_closed_form(from_generators([1]), 9).verdict)

    def test_no_closed_form(self):
        with self.assertRaises(NoClosedForm):
            ed_closed_form(from_generators([4, 5, 11]), 5)

    @patch("criteria.services.logger")
    def test_closed_form_matches_direct(self, mock_logger):
        for generators in ([5, 7], [2, 9], [3, 4, 5], [3, 13, 17], [5, 13, 16, 19, 22], [7, 10]):
            s = from_generators(generators)
            for m in range(1, s.genus + 3):
                self.assertEqual(ed_closed_form(s, m).verdict, ed_direct(s, m).verdict)
        mock_logger.warning.assert_not_called()


class ClosedFormsTestCase(SimpleTestCase):
    def test_embdim2(self):
        self.assertTrue(closed_forms.ed_embdim2(5, 7, 6))
        self.assertFalse(closed_forms.ed_embdim2(5, 7, 12))
        self.assertTrue(closed_forms.ed_embdim2(5, 7, 1))
        self.assertTrue(closed_forms.ed_embdim2(2, 7, 3))

    def test_mult2(self):
        self.assertTrue(closed_forms.ed_mult2(7, 3))
        self.assertFalse(closed_forms.ed_mult2(7, 2))
        self.assertTrue(closed_forms.ed_mult2(9, 1))

    def test_mult3(self):
        self.assertTrue(closed_forms.ed_mult3(4, 5, 2))
        self.assertTrue(closed_forms.ed_mult3(4, 5, 1))
        for m in range(2, 31):
            self.assertFalse(closed_forms.ed_mult3(5, 7, m))

    def test_gen_arith(self):
        self.assertTrue(closed_forms.ed_gen_arith(5, 2, 3, 4))
        self.assertFalse(closed_forms.ed_gen_arith(5, 2, 3, 6))
        self.assertTrue(closed_forms.ed_gen_arith(5, 2, 3, 1))

    def test_arith(self):
        self.assertTrue(closed_forms.ed_arith(5, 1, 4))
        self.assertFalse(closed_forms.ed_arith(3, 5, 3))
        self.assertTrue(closed_forms.ed_arith(3, 5, 2))
        for a in range(3, 9):
            for d in range(1, 9):
                if gcd(a, d) == 1:
                    for m in range(1, 30):
                        self.assertEqual(
                            closed_forms.ed_arith(a, d, m), closed_forms.ed_gen_arith(a, 1, d, m)
                        )

    def test_bad_parameters(self):
        with self.assertRaises(BadParameters):
            closed_forms.ed_embdim2(7, 5, 3)
        with self.assertRaises(BadParameters):
            closed_forms.ed_embdim2(4, 6, 1)
        with self.assertRaises(BadParameters):
            closed_forms.ed_mult2(4, 3)
        with self.assertRaises(BadParameters):
            closed_forms.ed_mult3(4, 6, 1)
        with self.assertRaises(BadParameters):
            closed_forms.ed_gen_arith(3, 1, 3, 2)
        with self.assertRaises(InvalidModulus):
            closed_forms.ed_embdim2(5, 7, 0)

    def test_invariants(self):
        s = from_generators([3, 13, 17])
        self.assertEqual(closed_forms.genus_gen_arith(3, 3, 4), s.genus)
        self.assertEqual(closed_forms.frobenius_gen_arith(3, 3, 4), s.frobenius)
        self.assertEqual(closed_forms.genus_embdim2(5, 7), 12)
        self.assertEqual(closed_forms.frobenius_embdim2(5, 7), 23)
        self.assertEqual(closed_forms.genus_arith(3, 1), 2)

    def test_alternating_sum(self):
        self.assertEqual(closed_forms.alternating_sum_embdim2(3, 5), 0)
        self.assertEqual(closed_forms.alternating_sum_embdim2(2, 5), -2)
        self.assertEqual(closed_forms.alternating_sum_embdim2(3, 4), -1)

    def test_wang_wang_parity(self):
        for b in range(3, 41):
            for a in range(2, b):
                if gcd(a, b) != 1:
                    continue
                both_odd = a % 2 == 1 and b % 2 == 1
                self.assertEqual(closed_forms.ed_embdim2(a, b, 2), both_odd)
                self.assertEqual(ed_direct(from_generators([a, b]), 2).verdict, both_odd)

    def test_gen_arith_necessary(self):
        self.assertTrue(closed_forms.gen_arith_necessary(5, 2, 3, 4))
        self.assertFalse(closed_forms.gen_arith_necessary(5, 2, 3, 3))

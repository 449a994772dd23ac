from math import gcd
from unittest.mock import patch

from django.test import SimpleTestCase, override_settings
from hypothesis import assume, given, settings as hypothesis_settings, strategies as st

from semigroups.exceptions import (
    EmptyInput,
    GcdNotOne,
    InvalidGenerator,
    NotAMember,
    SemigroupTooLarge,
)
from semigroups.models import AperySet
from semigroups.services import (
    alternating_gap_sum,
    apery_set,
    arithmetic_generators,
    contains,
    frobenius_from_apery,
    from_generators,
    gap_polynomial,
    gaps_from_apery,
    generalized_arithmetic_generators,
    is_maximal_embedding_dimension,
)

generator_lists = st.lists(st.integers(min_value=2, max_value=30), min_size=2, max_size=4)


class FromGeneratorsTestCase(SimpleTestCase):
    def test_five_seven(self):
        s = from_generators([5, 7])
        self.assertEqual(s.gaps, (1, 2, 3, 4, 6, 8, 9, 11, 13, 16, 18, 23))
        self.assertEqual(s.genus, 12)
        self.assertEqual(s.frobenius, 23)
        self.assertEqual(s.multiplicity, 5)
        self.assertEqual(s.embedding_dimension, 2)
        self.assertEqual(str(s), "<5, 7>")

    def test_three_five(self):
        s = from_generators([5, 3])
        self.assertEqual(s.gaps, (1, 2, 4, 7))
        self.assertEqual(s.minimal_generators, (3, 5))

    def test_non_example(self):
        s = from_generators([4, 5, 11])
        self.assertEqual(s.gaps, (1, 2, 3, 6, 7))
        self.assertEqual(s.genus, 5)
        self.assertEqual(s.minimal_generators, (4, 5, 11))

    def test_multiple_of_a_generator_is_dropped(self):
        self.assertEqual(from_generators([2, 4, 7]).minimal_generators, (2, 7))

    def test_redundant_generators_are_dropped(self):
        s = from_generators([6, 9, 20, 12, 9])
        self.assertEqual(s.minimal_generators, (6, 9, 20))
        self.assertEqual(s.generators, (6, 9, 20, 12, 9))
        self.assertEqual(s.frobenius, 43)
        self.assertEqual(s.genus, 22)

    @patch("semigroups.services.logger")
    def test_redundant_generator_is_logged(self, mock_logger):
        from_generators([3, 5, 8])
        mock_logger.debug.assert_called_with("Generator %s is redundant", 8)

    def test_one_gives_the_whole_monoid(self):
        s = from_generators([1, 5])
        self.assertEqual(s.minimal_generators, (1,))
        self.assertEqual(s.gaps, ())
        self.assertEqual(s.frobenius, -1)
        self.assertEqual(s.genus, 0)

    def test_invalid_input(self):
        with self.assertRaises(EmptyInput):
            from_generators([])
        with self.assertRaises(InvalidGenerator):
            from_generators([0, 3])
        with self.assertRaises(InvalidGenerator):
            from_generators([-2, 3])

    def test_gcd_not_one(self):
        with self.assertRaises(GcdNotOne) as ctx:
            from_generators([4, 6])
        self.assertEqual(ctx.exception.gcd, 2)
        self.assertEqual(str(ctx.exception), "gcd of generators is 2, not 1")

    @override_settings(NSGAP_SIEVE_LIMIT=100)
    def test_sieve_limit(self):
        with self.assertRaises(SemigroupTooLarge):
            from_generators([101, 102])

    def test_membership(self):
        s = from_generators([5, 7])
        self.assertTrue(contains(s, 0))
        self.assertTrue(contains(s, 12))
        self.assertFalse(contains(s, 13))
        self.assertFalse(contains(s, -1))
        self.assertTrue(24 in s)

    @hypothesis_settings(max_examples=60, deadline=None)
    @given(generator_lists)
    def test_gaps_are_exactly_the_non_members(self, generators):
        assume(gcd(*generators) == 1)
        s = from_generators(generators)
        representable = {0}
        for n in range(1, s.frobenius + 2):
            if any(n - g in representable for g in generators if g <= n):
                representable.add(n)
        self.assertEqual(s.gaps, tuple(n for n in range(s.frobenius + 1) if n not in representable))
        self.assertNotIn(s.frobenius + 1, s.gap_set)

    @hypothesis_settings(max_examples=30, deadline=None)
    @given(generator_lists)
    def test_rebuilding_from_minimal_generators(self, generators):
        assume(gcd(*generators) == 1)
        s = from_generators(generators)
        self.assertEqual(from_generators(s.minimal_generators), s)
        self.assertLessEqual(s.embedding_dimension, s.multiplicity)


class AperySetTestCase(SimpleTestCase):
    def test_three_five(self):
        s = from_generators([3, 5])
        self.assertEqual(apery_set(s, 3).elements, (0, 10, 5))
        self.assertEqual(apery_set(s, 5).sorted_elements(), (0, 3, 6, 9, 12))
        self.assertEqual(
            apery_set(s, 14).sorted_elements(),
            (0, 3, 5, 6, 8, 9, 10, 11, 12, 13, 15, 16, 18, 21),
        )

    def test_non_example(self):
        s = from_generators([4, 5, 11])
        self.assertEqual(apery_set(s, 5).sorted_elements(), (0, 4, 8, 11, 12))
        self.assertEqual(apery_set(s, 4).elements, (0, 5, 10, 11))

    def test_five_seven(self):
        ap = apery_set(from_generators([5, 7]), 5)
        self.assertEqual(ap.elements, (0, 21, 7, 28, 14))
        self.assertEqual(ap.nonzero, (21, 7, 28, 14))
        self.assertEqual(frobenius_from_apery(ap), 23)

    def test_not_a_member(self):
        s = from_generators([5, 7])
        for value in (0, -5, 13):
            with self.assertRaises(NotAMember):
                apery_set(s, value)

    def test_gaps_from_apery(self):
        self.assertEqual(gaps_from_apery(AperySet(3, (0, 10, 5))), (1, 2, 4, 7))

    @hypothesis_settings(max_examples=60, deadline=None)
    @given(generator_lists, st.integers(min_value=1, max_value=40))
    def test_apery_set_determines_the_gaps(self, generators, offset):
        assume(gcd(*generators) == 1)
        s = from_generators(generators)
        a = s.frobenius + offset
        ap = apery_set(s, a)
        self.assertEqual(len(ap), a)
        self.assertEqual(gaps_from_apery(ap), s.gaps)
        # Selmer: the genus is sum(Ap)/a - (a - 1)/2.
        self.assertEqual(2 * sum(ap), a * (2 * s.genus + a - 1))
        for w in ap:
            self.assertIn(w, s)
            self.assertTrue(w < a or w - a not in s)


class FamiliesTestCase(SimpleTestCase):
    def test_generalized_arithmetic_generators(self):
        self.assertEqual(generalized_arithmetic_generators(5, 2, 3), [5, 13, 16, 19, 22])
        self.assertEqual(arithmetic_generators(3, 1), [3, 4, 5])

    def test_maximal_embedding_dimension(self):
        self.assertTrue(is_maximal_embedding_dimension(from_generators([3, 13, 17])))
        self.assertFalse(is_maximal_embedding_dimension(from_generators([4, 5, 11])))
        self.assertTrue(is_maximal_embedding_dimension(from_generators([1])))

    def test_alternating_gap_sum(self):
        self.assertEqual(alternating_gap_sum(from_generators([3, 5])), 0)
        self.assertEqual(alternating_gap_sum(from_generators([2, 5])), -2)
        self.assertEqual(alternating_gap_sum(from_generators([1])), 0)

    def test_gap_polynomial(self):
        poly = gap_polynomial(from_generators([3, 5]))
        self.assertEqual(dict(poly), {1: 1, 2: 1, 4: 1, 7: 1})

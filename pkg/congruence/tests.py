from django.test import SimpleTestCase
from hypothesis import given, settings as hypothesis_settings, strategies as st

from congruence.models import IntMultiset
from congruence.polynomials import CycPoly, divmod_x_power_minus_one, multiply_by_x_minus_one
from congruence.services import (
    cyc_c_n,
    divisible_by_c_n,
    ed_via_polynomial,
    interval,
    is_evenly_distributed,
    multiset_congruent,
    reduce_exponents,
    residue_counts,
    uneven_residues,
)
from semigroups.exceptions import BadParameters, InvalidModulus, NegativeExponent

FIVE_SEVEN_GAPS = (1, 2, 3, 4, 6, 8, 9, 11, 13, 16, 18, 23)


class IntMultisetTestCase(SimpleTestCase):
    def test_order_does_not_matter(self):
        self.assertEqual(IntMultiset.of([3, 1, 1]), IntMultiset.of([1, 3, 1]))
        self.assertNotEqual(IntMultiset.of([1, 3]), IntMultiset.of([1, 1, 3]))

    def test_interval(self):
        self.assertEqual(interval(0, 3).entries, (0, 1, 2, 3))
        self.assertEqual(interval(3, 2).cardinality, 0)

    def test_without_and_union(self):
        multiset = IntMultiset.of([1, 1, 3])
        self.assertEqual(multiset.without(1).entries, (1, 3))
        self.assertEqual(multiset.without(7), multiset)
        self.assertEqual(multiset.union([0]).entries, (0, 1, 1, 3))
        self.assertEqual(multiset.multiplicities()[1], 2)


class ResidueCountsTestCase(SimpleTestCase):
    """Residue histograms, multiset congruence and the laws of even distribution."""

    def test_five_seven_gaps(self):
        self.assertEqual(residue_counts(FIVE_SEVEN_GAPS, 6).counts, (2, 2, 2, 2, 2, 2))
        self.assertTrue(is_evenly_distributed(FIVE_SEVEN_GAPS, 6))
        self.assertFalse(is_evenly_distributed(FIVE_SEVEN_GAPS, 12))

    def test_uneven_residues(self):
        self.assertEqual(uneven_residues(residue_counts(FIVE_SEVEN_GAPS, 12)), (0, 1))
        self.assertIsNone(uneven_residues(residue_counts(FIVE_SEVEN_GAPS, 4)))
        self.assertEqual(uneven_residues(residue_counts([0, 1, 1], 3)), (0, 1))

    def test_negative_values_use_canonical_residues(self):
        self.assertEqual(residue_counts([-1, -4], 3).counts, (0, 0, 2))

    def test_empty_and_trivial(self):
        self.assertTrue(is_evenly_distributed([], 7))
        self.assertTrue(is_evenly_distributed([5, 8, 13], 1))

    def test_invalid_modulus(self):
        for m in (0, -3, True):
            with self.assertRaises(InvalidModulus):
                residue_counts([1], m)

    def test_multiset_congruence(self):
        # Ap(<3, 5>; a) against [0, a - 1] modulo 4, for a = 3, 5 and 14.
        self.assertTrue(multiset_congruent([0, 10, 5], interval(0, 2), 4))
        self.assertTrue(multiset_congruent([0, 6, 12, 3, 9], interval(0, 4), 4))
        self.assertTrue(
            multiset_congruent(
                [0, 3, 5, 6, 8, 9, 10, 11, 12, 13, 15, 16, 18, 21], interval(0, 13), 4
            )
        )
        self.assertFalse(multiset_congruent([0, 10, 5], interval(0, 2), 5))
        # Ap(<4, 5, 11>; 5) is congruent to [0, 4] although its gaps are not balanced.
        self.assertTrue(multiset_congruent([0, 4, 8, 11, 12], interval(0, 4), 5))

    @hypothesis_settings(max_examples=100, deadline=None)
    @given(
        st.lists(st.integers(min_value=-20, max_value=40), max_size=10),
        st.integers(min_value=0, max_value=40),
        st.integers(min_value=1, max_value=9),
    )
    def test_congruence_laws(self, values, extra, m):
        shifted = [v + m * (i % 3) for i, v in enumerate(values)]
        self.assertTrue(multiset_congruent(values, values, m))
        self.assertTrue(multiset_congruent(values, shifted, m))
        self.assertTrue(multiset_congruent(shifted, values, m))
        # Removing congruent elements from congruent multisets keeps them congruent.
        left = IntMultiset.of(values).union([extra])
        right = IntMultiset.of(shifted).union([extra + m])
        self.assertTrue(multiset_congruent(left.without(extra), right.without(extra + m), m))

    @hypothesis_settings(max_examples=150, deadline=None)
    @given(
        st.lists(st.integers(min_value=0, max_value=200), max_size=30),
        st.lists(st.integers(min_value=0, max_value=200), max_size=30),
        st.integers(min_value=1, max_value=64),
    )
    def test_congruence_is_equality_of_reduced_polynomials(self, values, others, m):
        shifted = [v + m * (v % 5) for v in values]
        for candidate in (others, shifted):
            self.assertEqual(
                multiset_congruent(values, candidate, m),
                reduce_exponents(values, m) == reduce_exponents(candidate, m),
            )

    @hypothesis_settings(max_examples=150, deadline=None)
    @given(
        st.integers(min_value=1, max_value=64),
        st.integers(min_value=0, max_value=3),
        st.data(),
    )
    def test_evenly_distributed_multisets(self, m, copies, data):
        # `copies` entries in every residue class, each lifted by a random multiple of m.
        lifts = data.draw(
            st.lists(st.integers(min_value=0, max_value=5), min_size=m * copies, max_size=m * copies)
        )
        values = [i % m + m * k for i, k in enumerate(lifts)]
        self.assertTrue(is_evenly_distributed(values, m))
        self.assertEqual(residue_counts(values, m).counts, (copies,) * m)
        self.assertTrue(ed_via_polynomial(values, m))
        self.assertTrue(divisible_by_c_n(values, m))
        for d in range(1, m + 1):
            if m % d == 0:
                self.assertTrue(is_evenly_distributed(values, d))

    @hypothesis_settings(max_examples=200, deadline=None)
    @given(
        st.lists(st.integers(min_value=-30, max_value=120), max_size=24),
        st.integers(min_value=1, max_value=64),
    )
    def test_cardinality_and_divisor_laws(self, values, m):
        if not is_evenly_distributed(values, m):
            return
        self.assertEqual(len(values) % m, 0)
        self.assertEqual(set(residue_counts(values, m).counts), {len(values) // m})
        for d in range(1, m + 1):
            if m % d == 0:
                self.assertTrue(is_evenly_distributed(values, d))


class CycPolyTestCase(SimpleTestCase):
    def test_x_is_a_unit(self):
        x = CycPoly.monomial(1, 4)
        self.assertEqual(x * CycPoly.monomial(-1, 4), CycPoly.monomial(0, 4))
        self.assertEqual(CycPoly.monomial(7, 4).coeffs, (0, 0, 0, 1))

    def test_ring_operations(self):
        p = CycPoly.from_coefficients([1, 2, 0, 0, 3], 3)
        self.assertEqual(p.coeffs, (1, 5, 0))
        self.assertEqual((p - p), CycPoly.zero(3))
        self.assertEqual(p + (-p), CycPoly.zero(3))
        self.assertEqual((p * CycPoly.monomial(0, 3)), p)

    def test_different_rings(self):
        with self.assertRaises(BadParameters):
            CycPoly.zero(3) + CycPoly.zero(4)
        with self.assertRaises(BadParameters):
            CycPoly(3, (1, 2))

    def test_c_n(self):
        self.assertEqual(cyc_c_n(5, 3).coeffs, (2, 2, 1))
        self.assertTrue(cyc_c_n(6, 6).times_x_minus_one().is_zero())
        with self.assertRaises(BadParameters):
            cyc_c_n(0, 3)

    def test_reduce_exponents(self):
        self.assertEqual(reduce_exponents([1, 5, 9], 4).coeffs, (0, 3, 0, 0))
        with self.assertRaises(NegativeExponent):
            reduce_exponents([1, -2], 4)


class ExactDivisionTestCase(SimpleTestCase):
    def test_x_power_minus_one_divides_itself(self):
        quotient, remainder = divmod_x_power_minus_one([-1, 0, 0, 1], 3)
        self.assertEqual(quotient, [1])
        self.assertEqual(remainder, [0, 0, 0])

    def test_multiply_by_x_minus_one(self):
        self.assertEqual(multiply_by_x_minus_one([1, 1, 1]), [-1, 0, 0, 1])

    def test_c_m_divisibility(self):
        self.assertTrue(divisible_by_c_n(FIVE_SEVEN_GAPS, 6))
        self.assertFalse(divisible_by_c_n(FIVE_SEVEN_GAPS, 12))
        self.assertTrue(divisible_by_c_n([], 5))
        self.assertTrue(divisible_by_c_n([0, 1, 2], 3))

    @hypothesis_settings(max_examples=200, deadline=None)
    @given(
        st.lists(st.integers(min_value=0, max_value=200), max_size=40),
        st.integers(min_value=1, max_value=64),
    )
    def test_three_views_agree(self, values, m):
        expected = is_evenly_distributed(values, m)
        self.assertEqual(ed_via_polynomial(values, m), expected)
        self.assertEqual(divisible_by_c_n(values, m), expected)

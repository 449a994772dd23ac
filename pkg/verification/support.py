"""
Predicates used only to cross-check the main code paths.
"""

from math import gcd
from typing import Iterable, Sequence

import sympy

from congruence.services import multiset_congruent
from criteria.models import ArithmeticAperyForm

_x = sympy.Symbol("x")


def four_element_congruence(form: ArithmeticAperyForm, m: int) -> bool:
    """
    gcd(a*delta, m) = 1 and {a, a*delta + beta + 1, beta + delta, delta + 1}
    is congruent to {a + delta, a*delta + beta, beta + delta + 1, 1} mod m.
    """
    a, beta, delta = form.a, form.beta, form.delta
    if gcd(a * delta, m) != 1:
        return False
    left = (a, a * delta + beta + 1, beta + delta, delta + 1)
    right = (a + delta, a * delta + beta, beta + delta + 1, 1)
    return multiset_congruent(left, right, m)


def x_power_minus_one(n: int) -> list[int]:
    """Dense coefficients of x^n - 1, lowest degree first."""
    return [-1] + [0] * (n - 1) + [1]


def poly_gcd(p: Sequence[int], q: Sequence[int]) -> list[int]:
    """
    gcd of two nonzero polynomials of Z[x] given lowest degree first, as the
    primitive generator with positive leading coefficient.
    """
    left = sympy.Poly(list(reversed(p)), _x, domain="ZZ")
    right = sympy.Poly(list(reversed(q)), _x, domain="ZZ")
    return [int(c) for c in reversed(left.gcd(right).all_coeffs())]


def c_m_divides(values: Iterable[int], m: int) -> bool:
    """C_m(x) | P_A(x), decided by sympy's polynomial remainder over ZZ."""
    p = sympy.Poly(sum(_x**e for e in values), _x, domain="ZZ")
    c_m = sympy.Poly(sum(_x**i for i in range(m)), _x, domain="ZZ")
    return p.rem(c_m).is_zero

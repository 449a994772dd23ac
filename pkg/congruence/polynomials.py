"""
Exact integer polynomial arithmetic.

`CycPoly` is a class in Z[x]/(x^m - 1) held as its dense reduced representative
(coefficients of x^0 .. x^(m-1)). The free functions work on plain dense
coefficient lists of Z[x], lowest degree first.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence

from semigroups.exceptions import BadParameters, InvalidModulus


def _check_modulus(m: int) -> None:
    if m < 1:
        raise InvalidModulus(m)


@dataclass(frozen=True)
class CycPoly:
    modulus: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        _check_modulus(self.modulus)
        if len(self.coeffs) != self.modulus:
            raise BadParameters(
                f"expected {self.modulus} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def zero(cls, m: int) -> "CycPoly":
        _check_modulus(m)
        return cls(m, (0,) * m)

    @classmethod
    def monomial(cls, exponent: int, m: int, coefficient: int = 1) -> "CycPoly":
        """c * x^e; negative e is fine since x^m = 1 makes x a unit."""
        _check_modulus(m)
        coeffs = [0] * m
        coeffs[exponent % m] = coefficient
        return cls(m, tuple(coeffs))

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[int], m: int) -> "CycPoly":
        """Reduce a polynomial of any degree, given lowest degree first."""
        _check_modulus(m)
        coeffs = [0] * m
        for exponent, c in enumerate(coefficients):
            coeffs[exponent % m] += c
        return cls(m, tuple(coeffs))

    def _same_ring(self, other: "CycPoly") -> None:
        if not isinstance(other, CycPoly) or other.modulus != self.modulus:
            raise BadParameters("polynomials live in different quotient rings")

    def __add__(self, other: "CycPoly") -> "CycPoly":
        self._same_ring(other)
        return CycPoly(
            self.modulus, tuple(x + y for x, y in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "CycPoly") -> "CycPoly":
        self._same_ring(other)
        return CycPoly(
            self.modulus, tuple(x - y for x, y in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "CycPoly":
        return CycPoly(self.modulus, tuple(-x for x in self.coeffs))

    def __mul__(self, other: "CycPoly") -> "CycPoly":
        """Cyclic convolution: exponents add modulo m."""
        self._same_ring(other)
        m = self.modulus
        product = [0] * m
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                if y:
                    product[(i + j) % m] += x * y
        return CycPoly(m, tuple(product))

    def times_x_minus_one(self) -> "CycPoly":
        """(x - 1) * self, in O(m) instead of a full convolution."""
        c = self.coeffs
        return CycPoly(self.modulus, tuple(c[r - 1] - c[r] for r in range(self.modulus)))

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def multiply_by_x_minus_one(coeffs: Sequence[int]) -> list[int]:
    """(x - 1) * p in Z[x]."""
    result = [0] * (len(coeffs) + 1)
    for i, c in enumerate(coeffs):
        result[i + 1] += c
        result[i] -= c
    return result


def divmod_x_power_minus_one(coeffs: Sequence[int], m: int) -> tuple[list[int], list[int]]:
    """
    Exact division by x^m - 1 in Z[x]: returns (quotient, remainder), deg r < m.

    The divisor is monic, so the long division stays in Z: each top coefficient
    c of x^k (k >= m) moves to the quotient at x^(k-m) and adds c to x^(k-m).
    """
    _check_modulus(m)
    work = list(coeffs)
    if len(work) <= m:
        return [0], work + [0] * (m - len(work))
    quotient = [0] * (len(work) - m)
    for k in range(len(work) - 1, m - 1, -1):
        c = work[k]
        if c:
            quotient[k - m] += c
            work[k - m] += c
            work[k] = 0
    return quotient, work[:m]

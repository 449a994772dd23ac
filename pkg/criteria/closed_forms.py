"""
Closed-form even-distribution criteria and invariants for the families whose
Apery sets (minus 0) are arithmetic sequences.
"""

from math import gcd

from congruence.services import check_modulus
from semigroups.exceptions import BadParameters


def _congruent(x: int, y: int, m: int) -> bool:
    return (x - y) % m == 0


def check_embdim2(a: int, b: int) -> None:
    if not 1 < a < b or gcd(a, b) != 1:
        raise BadParameters(f"embedding dimension 2 needs 1 < a < b coprime, got a={a}, b={b}")


def check_gen_arith(a: int, h: int, d: int) -> None:
    if a < 3 or h < 1 or d < 1 or gcd(a, d) != 1:
        raise BadParameters(
            f"generalized arithmetic family needs a >= 3, h, d >= 1 and gcd(a, d) = 1, "
            f"got a={a}, h={h}, d={d}"
        )


def _check_mult3(b: int, c: int) -> None:
    if not 3 < b < c < 2 * b or b % 3 == 0 or c % 3 == 0 or (b - c) % 3 == 0:
        raise BadParameters(
            f"multiplicity 3, embedding dimension 3 needs 3 < b < c < 2b, "
            f"gcd(3, bc) = 1 and b, c in different classes mod 3, got b={b}, c={c}"
        )


def ed_embdim2(a: int, b: int, m: int) -> bool:
    """<a, b>: gcd(ab, m) = 1 and (a = 1 or b = 1 mod m)."""
    check_embdim2(a, b)
    check_modulus(m)
    return gcd(a * b, m) == 1 and (_congruent(a, 1, m) or _congruent(b, 1, m))


def ed_mult2(b: int, m: int) -> bool:
    """<2, b>: m odd and m divides (b - 1) / 2."""
    if b < 3 or b % 2 == 0:
        raise BadParameters(f"multiplicity 2 needs an odd b >= 3, got b={b}")
    check_modulus(m)
    return m % 2 == 1 and ((b - 1) // 2) % m == 0


def ed_mult3(b: int, c: int, m: int) -> bool:
    """<3, b, c> of embedding dimension 3."""
    _check_mult3(b, c)
    check_modulus(m)
    if gcd(3, m) != 1:
        return False
    return gcd(b - 1, c - 2) % m == 0 or gcd(b - 2, c - 1) % m == 0


def ed_gen_arith(a: int, h: int, d: int, m: int) -> bool:
    """<{a} and h*a + i*d for 1 <= i <= a - 1> (maximal embedding dimension)."""
    check_gen_arith(a, h, d)
    check_modulus(m)
    if gcd(a * d, m) != 1:
        return False
    return (
        _congruent(a, 1, m)
        or (_congruent(a, 2, m) and _congruent(2 * h + d, 1, m))
        or (_congruent(d, 1, m) and _congruent(h, 0, m))
        or (_congruent(d, -1, m) and _congruent(h, 1, m))
    )


def ed_arith(a: int, d: int, m: int) -> bool:
    """<a, a + d, ..., a + (a - 1)d>; the h = 1 case of ed_gen_arith."""
    check_gen_arith(a, 1, d)
    check_modulus(m)
    return gcd(a * d, m) == 1 and (_congruent(a, 1, m) or _congruent(d, -1, m))


def gen_arith_necessary(a: int, h: int, d: int, m: int) -> bool:
    """Implied by (not equivalent to) even distribution in the generalized family."""
    check_gen_arith(a, h, d)
    check_modulus(m)
    return gcd(a * d, m) == 1 and ((a - 1) % m == 0 or (2 * h + d - 1) % m == 0)


def genus_embdim2(a: int, b: int) -> int:
    return (a - 1) * (b - 1) // 2


def frobenius_embdim2(a: int, b: int) -> int:
    return a * b - a - b


def genus_gen_arith(a: int, h: int, d: int) -> int:
    return (a - 1) * (2 * h + d - 1) // 2


def frobenius_gen_arith(a: int, h: int, d: int) -> int:
    # Largest Apery element minus a.
    return h * a + (a - 1) * d - a


def genus_arith(a: int, d: int) -> int:
    return (a - 1) * (d + 1) // 2


def alternating_sum_embdim2(a: int, b: int) -> int:
    """
    #even gaps - #odd gaps of <a, b>: zero when a and b are both odd,
    otherwise -(o - 1) / 2 with o the odd one of the two.
    """
    check_embdim2(a, b)
    if a % 2 and b % 2:
        return 0
    odd = b if b % 2 else a
    return -(odd - 1) // 2

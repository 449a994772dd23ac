import enum
from dataclasses import dataclass
from typing import Optional

from django.db import models


class Route(models.TextChoices):
    DIRECT = "direct", "Residue counts of the gaps"
    APERY = "apery", "Apery set congruence"
    POLYNOMIAL = "polynomial", "(x - 1) * P_H(x) in Z[x]/(x^m - 1)"
    CLOSED_FORM = "closed_form", "Closed-form family criterion"


class Family(models.TextChoices):
    MULT2 = "mult2", "Multiplicity 2"
    EMBDIM2 = "embdim2", "Embedding dimension 2"
    GEN_ARITH_MED = "gen_arith_med", "MED, generalized arithmetic generators"
    ARITH_MED = "arith_med", "MED, arithmetic generators"
    OTHER = "other", "No closed form"


class ModuliSentinel(enum.Enum):
    ALL = "all"


# Returned by ed_all_moduli when there are no gaps.
ALL_MODULI = ModuliSentinel.ALL


@dataclass(frozen=True)
class ArithmeticAperyForm:
    """Ap(S; a) = {0} together with beta + i * delta for 1 <= i <= a - 1."""

    a: int
    beta: int
    delta: int

    def nonzero_elements(self) -> tuple[int, ...]:
        return tuple(self.beta + i * self.delta for i in range(1, self.a))


@dataclass(frozen=True)
class FamilyClassification:
    family: Family
    a: Optional[int] = None
    b: Optional[int] = None
    h: Optional[int] = None
    d: Optional[int] = None

    @property
    def parameters(self) -> dict:
        return {
            name: value
            for name, value in (("a", self.a), ("b", self.b), ("h", self.h), ("d", self.d))
            if value is not None
        }


@dataclass(frozen=True)
class EDReport:
    """
    Verdict on whether the gaps are evenly distributed modulo `modulus`.

    `witness` is a residue pair with unequal counts (only on a negative verdict
    from a counting route); `cases` lists the main-theorem cases that fired.
    """

    modulus: int
    verdict: bool
    route: Route
    witness: Optional[tuple[int, int]] = None
    cases: tuple[int, ...] = ()
    base: Optional[int] = None

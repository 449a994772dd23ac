from dataclasses import dataclass, field
from functools import cached_property

# Value types only: nothing here is persisted.


@dataclass(frozen=True)
class AperySet:
    """
    Ap(S; a): for each residue class r mod a, the least element of S in it.

    `elements[r]` is congruent to r modulo `relative_to`, so `elements[0] == 0`.
    """

    relative_to: int
    elements: tuple[int, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def nonzero(self) -> tuple[int, ...]:
        """Ap(S; a) without 0, in residue order."""
        return self.elements[1:]

    def sorted_elements(self) -> tuple[int, ...]:
        return tuple(sorted(self.elements))


@dataclass(frozen=True)
class NumericalSemigroup:
    """
    A numerical semigroup in canonical form.

    Only `semigroups.services.from_generators` should build these; it guarantees
    the generators are minimal with gcd 1 and that gaps/frobenius are exact.
    """

    minimal_generators: tuple[int, ...]
    gaps: tuple[int, ...]
    frobenius: int
    # Ap(S; multiplicity), a by-product of construction.
    multiplicity_apery: tuple[int, ...] = field(repr=False, compare=False, default=())
    # The generators as given, before redundant ones were dropped.
    generators: tuple[int, ...] = field(repr=False, compare=False, default=())

    @property
    def multiplicity(self) -> int:
        return self.minimal_generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.minimal_generators)

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @cached_property
    def gap_set(self) -> frozenset:
        return frozenset(self.gaps)

    def __contains__(self, n) -> bool:
        if n < 0:
            return False
        return n > self.frobenius or n not in self.gap_set

    def __str__(self):
        return "<" + ", ".join(str(g) for g in self.minimal_generators) + ">"

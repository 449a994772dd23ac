from collections import Counter
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class IntMultiset:
    """
    A finite multiset of integers.

    Entries are kept sorted, so equality ignores order but respects multiplicity.
    """

    entries: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(sorted(self.entries)))

    @classmethod
    def of(cls, values: Iterable[int]) -> "IntMultiset":
        return cls(tuple(values))

    @classmethod
    def interval(cls, lo: int, hi: int) -> "IntMultiset":
        """The integers lo, lo + 1, ..., hi; empty when lo > hi."""
        return cls(tuple(range(lo, hi + 1)))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def cardinality(self) -> int:
        return len(self.entries)

    def union(self, other: Iterable[int]) -> "IntMultiset":
        return IntMultiset(self.entries + tuple(other))

    def without(self, value: int) -> "IntMultiset":
        """Remove one occurrence of `value` (no-op when absent)."""
        entries = list(self.entries)
        if value in entries:
            entries.remove(value)
        return IntMultiset(tuple(entries))

    def multiplicities(self) -> Counter:
        return Counter(self.entries)


@dataclass(frozen=True)
class ResidueHistogram:
    """counts[r] = number of entries congruent to r modulo `modulus`."""

    modulus: int
    counts: tuple[int, ...]

    @property
    def cardinality(self) -> int:
        return sum(self.counts)

    @property
    def is_flat(self) -> bool:
        return len(set(self.counts)) <= 1

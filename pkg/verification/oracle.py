"""
Brute-force ground truth.

Nothing here touches the Apery machinery or the criteria: membership is a plain
knapsack search from the generators up to a generous fixed bound.
"""

from collections import Counter
from functools import lru_cache

from semigroups.models import NumericalSemigroup


def naive_bound(generators) -> int:
    """max^2 + max, comfortably above any Frobenius number of these generators."""
    largest = max(generators)
    return largest * largest + largest


@lru_cache(maxsize=4096)
def _naive_gaps(generators: tuple[int, ...]) -> tuple[int, ...]:
    bound = naive_bound(generators)
    smallest = min(generators)
    reachable = [False] * (bound + 1)
    reachable[0] = True
    gaps = []
    run = 1
    for n in range(1, bound + 1):
        reachable[n] = any(g <= n and reachable[n - g] for g in generators)
        if not reachable[n]:
            gaps.append(n)
            run = 0
            continue
        run += 1
        # `smallest` consecutive members: adding it covers everything beyond.
        if run >= smallest:
            break
    return tuple(gaps)


def naive_gaps(semigroup: NumericalSemigroup) -> tuple[int, ...]:
    """Gaps searched from the generators as given, not from the minimized ones."""
    generators = semigroup.generators or semigroup.minimal_generators
    return _naive_gaps(tuple(sorted(set(generators))))


def oracle_ed(semigroup: NumericalSemigroup, m: int) -> bool:
    counts = Counter(n % m for n in naive_gaps(semigroup))
    return len({counts[r] for r in range(m)}) == 1

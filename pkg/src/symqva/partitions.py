"""Integer partitions as weakly decreasing tuples of positive ints."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial

__all__ = [
    "Partition",
    "make_partition",
    "partitions_of",
    "weight",
    "dominance_leq",
    "comparable",
    "z_of",
    "multiplicities",
    "linear_extension",
    "union",
    "conjugate",
]

Partition = tuple


def make_partition(parts):
    """Validate and normalize a sequence of positive ints into a Partition."""
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    return tuple(sorted(parts, reverse=True))


def weight(lam):
    return sum(lam)


@lru_cache(maxsize=None)
def partitions_of(n):
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise ValueError("negative weight")
    return tuple(_parts(n, n))


def _parts(n, largest):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _parts(n - first, first):
            yield (first,) + rest


def _prefix_sums(lam, length):
    out, acc = [], 0
    for i in range(length):
        acc += lam[i] if i < len(lam) else 0
        out.append(acc)
    return out


def dominance_leq(mu, lam):
    """True iff mu is below or equal to lam in dominance order."""
    if weight(mu) != weight(lam):
        raise ValueError(f"dominance needs equal weights: {mu} vs {lam}")
    n = max(len(mu), len(lam))
    return all(a <= b for a, b in zip(_prefix_sums(mu, n), _prefix_sums(lam, n)))


def comparable(mu, lam):
    return dominance_leq(mu, lam) or dominance_leq(lam, mu)


def multiplicities(lam):
    return Counter(lam)


@lru_cache(maxsize=None)
def z_of(lam):
    out = 1
    for i, m in Counter(lam).items():
        out *= i ** m * factorial(m)
    return out


def linear_extension(parts):
    """Sort equal-weight partitions into descending lex order.

    Descending lex refines dominance: if mu < lam strictly then lam comes first.
    """
    parts = [tuple(p) for p in parts]
    if len({weight(p) for p in parts}) > 1:
        raise ValueError("linear_extension needs partitions of a single weight")
    return sorted(parts, reverse=True)


def union(lam, mu):
    """Multiset union of parts, re-sorted (the index of p_lam * p_mu)."""
    return tuple(sorted(lam + mu, reverse=True))


def conjugate(lam):
    """Transpose of the Young diagram."""
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))

"""Hodge types of the motives behind elliptic and Siegel eigenforms.

A Hodge type is a multiset of (p, q) pairs, pure of weight p + q and
symmetric under swapping p and q.  Kunneth products add pairs termwise; the
weight solver recovers the unique weight pattern (K-2, K, K) for which the
product of the degree-1 and degree-2 types is the degree-3 type.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass


@dataclass(frozen=True)
class HodgeType:
    """Multiset of (p, q) pairs, stored sorted so equality is multiset
    equality with duplicates significant."""

    pairs: tuple[tuple[int, int], ...]
    weight: int

    def __post_init__(self) -> None:
        if not self.pairs:
            raise ValueError("need at least one (p, q) pair")
        pairs = tuple(sorted((int(p), int(q)) for p, q in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        for p, q in pairs:
            if p < 0 or q < 0:
                raise ValueError(f"negative Hodge index in ({p},{q})")
            if p + q != self.weight:
                raise ValueError(f"impure pair ({p},{q}) for weight {self.weight}")
        if Counter(pairs) != Counter((q, p) for p, q in pairs):
            raise ValueError("pairs are not symmetric under (p,q) <-> (q,p)")

    @property
    def rank(self) -> int:
        return len(self.pairs)


def _even_at_least(value: int, minimum: int, what: str) -> None:
    if value % 2 or value < minimum:
        raise ValueError(f"{what} must be even and at least {minimum}, got {value}")


def hodge_gl2(k: int) -> HodgeType:
    """Type of an elliptic eigenform of weight k: (0, k-1) + (k-1, 0)."""
    _even_at_least(k, 2, "weight")
    return HodgeType(((0, k - 1), (k - 1, 0)), k - 1)


def hodge_gsp4(l: int) -> HodgeType:
    """Type of a degree-2 eigenform of weight l, rank 4, weight 2l - 3."""
    _even_at_least(l, 2, "weight")
    return HodgeType(
        ((0, 2 * l - 3), (l - 2, l - 1), (l - 1, l - 2), (2 * l - 3, 0)),
        2 * l - 3,
    )


def hodge_gsp6(K: int) -> HodgeType:
    """Type of a degree-3 eigenform of weight K, rank 8, weight 3K - 6."""
    _even_at_least(K, 4, "weight")
    half = ((0, 3 * K - 6), (K - 3, 2 * K - 3), (K - 2, 2 * K - 4), (K - 1, 2 * K - 5))
    return HodgeType(half + tuple((q, p) for p, q in half), 3 * K - 6)


def kunneth_tensor(a: HodgeType, b: HodgeType) -> HodgeType:
    """Termwise sum multiset {(p1+p2, q1+q2)}, pure of weight w_a + w_b."""
    pairs = tuple(
        (p1 + p2, q1 + q2) for p1, q1 in a.pairs for p2, q2 in b.pairs
    )
    return HodgeType(pairs, a.weight + b.weight)


def weight_solver(lo: int, hi: int) -> tuple[tuple[int, int, int], ...]:
    """All even triples (k, l, K) in [lo, hi] with
    kunneth_tensor(hodge_gl2(k), hodge_gsp4(l)) == hodge_gsp6(K),
    by exhaustive multiset comparison."""
    if lo % 2:
        lo += 1
    evens = range(max(lo, 4), hi + 1, 2)
    out = []
    for k in evens:
        left_k = hodge_gl2(k)
        for l in evens:
            product = kunneth_tensor(left_k, hodge_gsp4(l))
            for K in evens:
                if product == hodge_gsp6(K):
                    out.append((k, l, K))
    return tuple(out)

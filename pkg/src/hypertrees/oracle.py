"""Brute-force oracles over the unrestricted sequence space.

A *tight walk* here is any vertex sequence whose consecutive k-windows are
pairwise distinct edges; vertices may repeat.  Chains, semicycles and their
self-intersecting variants are all tight walks, so enumerating walks decides
the definitions directly, without the non-self-intersection shortcut the
kernels rely on.  Exponential; meant for cross-checking at desk scale.
"""
from __future__ import annotations

from itertools import permutations
from typing import Iterator

from hypertrees.core import Hypergraph
from hypertrees.errors import BudgetExceeded


def tight_walks(H: Hypergraph, budget: int | None = None) -> Iterator[tuple[int, ...]]:
    """Every tight walk of H, depth first; each walk is yielded once."""
    edges = H.edge_sets
    k = H.k
    count = 0

    def grow(seq: tuple[int, ...], used: frozenset):
        nonlocal count
        count += 1
        if budget is not None and count > budget:
            raise BudgetExceeded(budget)
        yield seq
        tail = seq[len(seq) - k + 1:]
        for w in range(H.n):
            win = frozenset(tail + (w,))
            if len(win) == k and win in edges and win not in used:
                yield from grow(seq + (w,), used | {win})

    for e in H.edges:
        for perm in permutations(e):
            yield from grow(perm, frozenset([frozenset(e)]))


def any_semicycle(H: Hypergraph, budget: int | None = None) -> tuple[int, ...] | None:
    for seq in tight_walks(H, budget):
        if len(seq) > H.k and seq[0] == seq[-1]:
            return seq
    return None


def self_intersecting_chain(H: Hypergraph, budget: int | None = None) -> tuple[int, ...] | None:
    for seq in tight_walks(H, budget):
        if seq[0] != seq[-1] and len(set(seq)) < len(seq):
            return seq
    return None


def general_chain_connected(H: Hypergraph, budget: int | None = None) -> bool:
    """Chain-connectivity with self-intersecting chains allowed."""
    if H.n < 2:
        return True
    missing = {(u, v) for u in range(H.n) for v in range(u + 1, H.n)}
    for seq in tight_walks(H, budget):
        if seq[0] == seq[-1]:
            continue
        vs = sorted(set(seq))
        for i, u in enumerate(vs):
            for v in vs[i + 1:]:
                missing.discard((u, v))
        if not missing:
            return True
    return False

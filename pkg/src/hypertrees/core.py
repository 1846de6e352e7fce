"""Immutable k-uniform hypergraph model, tight line graph and class decomposition.

Vertices are the dense integers ``0..n-1``.  Every edge is stored twice: as an
ascending vertex tuple (the canonical form used for ordering, equality and
serialization) and as an ``n``-bit integer mask consumed by the search kernels.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Sequence

from hypertrees.errors import (
    ArityError,
    DuplicateEdgeError,
    IsolatedVertexError,
    ParamError,
    PreconditionError,
    RangeError,
)


def vertex_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def mask_vertices(mask: int) -> tuple[int, ...]:
    """Ascending vertex ids of the set bits of ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class Hypergraph:
    """A k-uniform hypergraph on vertices ``0..n-1``.

    Build instances with :func:`new_hypergraph`; the constructor itself trusts
    its arguments.  Equality is label-sensitive: ``(k, n, edges)`` must match.
    """

    k: int
    n: int
    edges: tuple[tuple[int, ...], ...]
    masks: tuple[int, ...] = field(compare=False, repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_sets(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(e) for e in self.edges)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def covered_mask(self) -> int:
        acc = 0
        for e in self.masks:
            acc |= e
        return acc

    def isolated_vertices(self) -> tuple[int, ...]:
        return mask_vertices(self.full_mask & ~self.covered_mask)

    def degree(self, v: int) -> int:
        bit = 1 << v
        return sum(1 for e in self.masks if e & bit)

    def has_edge(self, vertices: Iterable[int]) -> bool:
        return frozenset(vertices) in self.edge_sets

    def without_edge(self, index: int) -> "Hypergraph":
        edges = self.edges[:index] + self.edges[index + 1:]
        masks = self.masks[:index] + self.masks[index + 1:]
        return Hypergraph(self.k, self.n, edges, masks)

    def with_edges(self, extra: Iterable[Sequence[int]], n: int | None = None) -> "Hypergraph":
        return new_hypergraph(self.k, self.n if n is None else n, list(self.edges) + [list(e) for e in extra])

    def __str__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, e)) + "}" for e in self.edges)
        return f"Hypergraph(k={self.k}, n={self.n}, m={self.m}: {body})"


def new_hypergraph(k: int, n: int, edges: Iterable[Sequence[int]]) -> Hypergraph:
    """Validate and canonicalize an edge list into a :class:`Hypergraph`.

    Raises ``ArityError`` when an edge does not have exactly ``k`` distinct
    vertices, ``RangeError`` for vertex ids outside ``[0, n)`` and
    ``DuplicateEdgeError`` when two edges are equal as sets.
    """
    if not isinstance(k, int) or k < 2:
        raise ParamError(f"uniformity k must be an integer >= 2, got {k!r}")
    if not isinstance(n, int) or n < k:
        raise ParamError(f"vertex count n must be an integer >= k={k}, got {n!r}")
    seen: set[tuple[int, ...]] = set()
    canon = []
    for raw in edges:
        vs = tuple(sorted(int(v) for v in raw))
        if len(vs) != k or len(set(vs)) != k:
            raise ArityError(f"edge {list(raw)} does not have exactly {k} distinct vertices")
        if vs[0] < 0 or vs[-1] >= n:
            raise RangeError(f"edge {list(raw)} has a vertex outside [0, {n})")
        if vs in seen:
            raise DuplicateEdgeError(f"edge {list(raw)} occurs more than once")
        seen.add(vs)
        canon.append(vs)
    canon.sort()
    return Hypergraph(k, n, tuple(canon), tuple(vertex_mask(e) for e in canon))


def from_masks(k: int, n: int, masks: Iterable[int]) -> Hypergraph:
    return new_hypergraph(k, n, [mask_vertices(e) for e in masks])


@dataclass(frozen=True)
class TightLineGraph:
    """Graph on edge indices; ``i ~ j`` iff the edges share exactly k-1 vertices."""

    node_count: int
    adjacency: tuple[frozenset[int], ...]

    def pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, nb in enumerate(self.adjacency) for j in sorted(nb) if i < j]

    def components(self) -> list[tuple[int, ...]]:
        seen = [False] * self.node_count
        comps = []
        for root in range(self.node_count):
            if seen[root]:
                continue
            seen[root] = True
            stack, comp = [root], []
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in self.adjacency[i]:
                    if not seen[j]:
                        seen[j] = True
                        stack.append(j)
            comps.append(tuple(sorted(comp)))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


def tight_line_graph(H: Hypergraph) -> TightLineGraph:
    target = H.k - 1
    adj: list[set[int]] = [set() for _ in range(H.m)]
    for i in range(H.m):
        mi = H.masks[i]
        for j in range(i + 1, H.m):
            if (mi & H.masks[j]).bit_count() == target:
                adj[i].add(j)
                adj[j].add(i)
    return TightLineGraph(H.m, tuple(frozenset(a) for a in adj))


@dataclass(frozen=True)
class ClassDecomposition:
    """Tight line graph components and their vertex projections ("classes")."""

    components: tuple[tuple[int, ...], ...]
    classes: tuple[frozenset[int], ...]
    sigma: int
    l: int
    r: int

    def class_count(self, v: int) -> int:
        return sum(1 for c in self.classes if v in c)


def class_decomposition(H: Hypergraph) -> ClassDecomposition:
    if H.isolated_vertices():
        raise IsolatedVertexError(f"vertices {list(H.isolated_vertices())} lie in no edge")
    comps = tight_line_graph(H).components()
    classes = tuple(frozenset(v for i in comp for v in H.edges[i]) for comp in comps)
    sigma = sum(len(c) for c in classes)
    r = min(sum(1 for c in classes if v in c) for v in range(H.n))
    return ClassDecomposition(tuple(comps), classes, sigma, len(classes), r)


@dataclass(frozen=True)
class ClassInequalities:
    """Diagnostic record for the two counting inequalities on ``sigma``.

    ``in_window`` is true exactly when neither inequality is strong enough to
    force ``m >= n-(k-1)``, i.e. ``(r-1)n/(k-1) < l-1 < (r-1)(k-1)``.
    """

    n: int
    k: int
    sigma: int
    l: int
    r: int
    rn: int
    second_rhs: int
    sigma_ge_rn: bool
    sigma_ge_second: bool
    window_low: Fraction
    window_high: int
    in_window: bool


def check_class_inequalities(D: ClassDecomposition, H: Hypergraph) -> ClassInequalities:
    from hypertrees.recognition import is_chain_connected

    if any(len(c) == H.n for c in D.classes):
        raise PreconditionError("class inequalities vacuous: some class covers every vertex")
    if not is_chain_connected(H):
        raise PreconditionError("hypergraph is not chain-connected")
    n, k, l, r = H.n, H.k, D.l, D.r
    rn = r * n
    second = n + r - 1 + (l - r) * k
    low = Fraction((r - 1) * n, k - 1)
    high = (r - 1) * (k - 1)
    return ClassInequalities(
        n=n, k=k, sigma=D.sigma, l=l, r=r, rn=rn, second_rhs=second,
        sigma_ge_rn=D.sigma >= rn, sigma_ge_second=D.sigma >= second,
        window_low=low, window_high=high, in_window=low < l - 1 < high,
    )

"""Constructors for the named hypergraph families.

Vertex numbering is fixed per family (documented on each function) so that
outputs are byte-reproducible.  Every constructor re-checks its own
edge-count formula before returning.
"""
from __future__ import annotations

import random
from itertools import combinations
from math import comb
from typing import Sequence

from hypertrees.core import Hypergraph, new_hypergraph
from hypertrees.errors import (
    ConstraintInfeasible,
    FreshVertexMissing,
    InternalInvariantError,
    NotEdgeMinimalAfterExtension,
    ParamError,
    SizeError,
)

B_CONSTRUCTION_MAX_N = 14


def _expect(H: Hypergraph, m: int, what: str) -> Hypergraph:
    if H.m != m:
        raise InternalInvariantError(f"{what}: expected {m} edges, built {H.m}")
    return H


def tight_path(n: int, k: int) -> Hypergraph:
    """Edges ``{i, ..., i+k-1}`` for ``0 <= i <= n-k``."""
    if k < 2 or n < k:
        raise ParamError(f"tight_path needs n >= k >= 2, got n={n}, k={k}")
    H = new_hypergraph(k, n, [range(i, i + k) for i in range(n - k + 1)])
    return _expect(H, n - (k - 1), "tight_path")


def tight_star(n: int, k: int) -> Hypergraph:
    """Centers ``0..k-2``; one edge per leaf ``k-1..n-1``."""
    if k < 2 or n < k:
        raise ParamError(f"tight_star needs n >= k >= 2, got n={n}, k={k}")
    centers = list(range(k - 1))
    H = new_hypergraph(k, n, [centers + [w] for w in range(k - 1, n)])
    return _expect(H, n - (k - 1), "tight_star")


def l_flower(n: int, k: int, l: int) -> Hypergraph:
    """Rim ``0..n-l-1`` (cyclic), centers ``n-l..n-1``.

    Edge ``i`` is the rim window ``i..i+k-l-1`` (mod ``n-l``) plus all centers.
    """
    if not n > k > l >= 1:
        raise ParamError(f"l_flower needs n > k > l >= 1, got n={n}, k={k}, l={l}")
    rim = n - l
    centers = list(range(rim, n))
    edges = [[(i + t) % rim for t in range(k - l)] + centers for i in range(rim)]
    return _expect(new_hypergraph(k, n, edges), n - l, "l_flower")


def flower(n: int, k: int) -> Hypergraph:
    return l_flower(n, k, 1)


def complete(n: int, k: int) -> Hypergraph:
    return new_hypergraph(k, n, combinations(range(n), k))


def fano_plane() -> Hypergraph:
    """Lines ``{i, i+1, i+3} mod 7``."""
    H = new_hypergraph(3, 7, [[i, (i + 1) % 7, (i + 3) % 7] for i in range(7)])
    return _expect(H, comb(7, 2) // comb(3, 2), "fano_plane")


def five_vertex_hypertree() -> Hypergraph:
    """The 3-uniform hypertree on 5 vertices with a disconnected tight line graph.

    Edges {1,2,3},{2,3,4},{1,4,5},{2,3,5} shifted to ids 0..4.
    """
    return new_hypergraph(3, 5, [[0, 1, 2], [1, 2, 3], [0, 3, 4], [1, 2, 4]])


def small_counterexample(k: int) -> Hypergraph:
    """Three edges on ``k+3`` vertices with fewer than ``n-(k-1)`` edges.

    ``V_x = {0,1,2}``, ``V_y = {3,4,5}``, ``V_z = {6,7,8}``, the shared block
    ``V' = {9..k+2}``; the edges are the three unions of two triples with V'.
    """
    if k < 6:
        raise ParamError("no counterexample exists for k <= 5; need k >= 6")
    vx, vy, vz = [0, 1, 2], [3, 4, 5], [6, 7, 8]
    shared = list(range(9, k + 3))
    H = new_hypergraph(k, k + 3, [vx + shared + vy, vx + shared + vz, vy + shared + vz])
    return _expect(H, 3, "small_counterexample")


def cluster_counterexample(k: int) -> Hypergraph:
    """``k-2`` clusters of ``k/2`` consecutive ids; one edge per cluster pair.

    ``k-2`` is the largest cluster count ``c`` with
    ``C(c,2) < ck/2 - (k-1)``.  Note this gives ``k(k-2)/2`` *vertices*.
    """
    if k < 6 or k % 2:
        raise ParamError(f"cluster_counterexample needs an even k >= 6, got {k}")
    half = k // 2
    c = max(c for c in range(2, 2 * k) if comb(c, 2) < c * half - (k - 1))
    if c != k - 2:
        raise InternalInvariantError(f"cluster count {c} != k-2")
    clusters = [list(range(j * half, (j + 1) * half)) for j in range(c)]
    H = new_hypergraph(k, c * half, [a + b for a, b in combinations(clusters, 2)])
    if not H.m < H.n - (k - 1):
        raise InternalInvariantError("cluster construction is not a counterexample")
    return _expect(H, comb(c, 2), "cluster_counterexample")


def odd_cluster_counterexample(k: int) -> Hypergraph:
    """Odd-k variant: clusters of ``(k-1)/2`` plus one extra vertex in every edge.

    The extra vertex (id ``n-1``) is shared by all edges; a private extra vertex
    per edge could never be chain-connected to another edge's extra vertex.
    The cluster count ``c`` is the largest value with
    ``C(c,2) < n - (k-1)`` where ``n = c(k-1)/2 + 1``.
    """
    if k < 7 or k % 2 == 0:
        raise ParamError(f"odd_cluster_counterexample needs an odd k >= 7, got {k}")
    half = (k - 1) // 2
    feasible = [c for c in range(2, 2 * k) if comb(c, 2) < c * half + 1 - (k - 1)]
    if not feasible:
        raise ConstraintInfeasible(f"no cluster count satisfies the counterexample inequality for k={k}")
    c = max(feasible)
    n = c * half + 1
    extra = n - 1
    clusters = [list(range(j * half, (j + 1) * half)) for j in range(c)]
    H = new_hypergraph(k, n, [a + b + [extra] for a, b in combinations(clusters, 2)])
    if n < (k - 1) * (k - 4) // 2 + 1:
        raise InternalInvariantError("odd cluster construction is smaller than promised")
    return _expect(H, comb(c, 2), "odd_cluster_counterexample")


def non_hypertree_cc(n: int) -> Hypergraph:
    """Chain-connected, edge-minimal, but with semicycles (and a tight cycle).

    ``x_i -> i-1``, ``y_i -> n+i-1``, ``z_i -> 2n+i-1`` for ``1 <= i <= n``;
    edges are the cyclic windows of ``x``, ``{x_{i-1}, x_i, y_i}`` and
    ``{z_i, x_i, x_{i+1}}`` with indices mod ``n``.
    """
    if n < 5:
        raise ParamError(f"non_hypertree_cc needs n >= 5, got {n}")
    def x(i): return (i - 1) % n
    def y(i): return n + (i - 1) % n
    def z(i): return 2 * n + (i - 1) % n
    edges = []
    for i in range(1, n + 1):
        edges.append([x(i), x(i + 1), x(i + 2)])
        edges.append([x(i - 1), x(i), y(i)])
        edges.append([z(i), x(i), x(i + 1)])
    return _expect(new_hypergraph(3, 3 * n, edges), 3 * n, "non_hypertree_cc")


def b_construction(F: Hypergraph) -> Hypergraph:
    """Add every bit string of length ``n_F`` as a vertex.

    Bit string ``b`` (bit 1 = most significant) becomes vertex ``n_F + b``;
    two strings ``u, w`` form an edge with ``v_i`` (id ``i-1``) where ``i`` is
    the first position at which they differ.
    """
    if F.k != 3:
        raise ParamError("the doubling construction is only defined for 3-uniform hypergraphs")
    nf = F.n
    if nf > B_CONSTRUCTION_MAX_N:
        raise SizeError(f"n_F={nf} would add 2^{nf} vertices; limit is {B_CONSTRUCTION_MAX_N}")
    strings = 1 << nf
    new_edges = []
    for u in range(strings):
        for w in range(u + 1, strings):
            first = nf - (u ^ w).bit_length() + 1
            new_edges.append([first - 1, nf + u, nf + w])
    H = new_hypergraph(3, nf + strings, list(F.edges) + new_edges)
    return _expect(H, F.m + comb(strings, 2), "b_construction")


def b_density(H: Hypergraph) -> float:
    """Edges per vertex pair, the ratio that tends to 1 under repeated doubling."""
    return H.m / comb(H.n, 2)


def recursive_extend(H: Hypergraph, new_edges: Sequence[Sequence[int]]) -> Hypergraph:
    """Add the fresh vertex ``H.n`` together with edges that all contain it.

    Accepted only when the result is again an edge-minimal hypertree.
    """
    from hypertrees.recognition import is_edge_minimal, is_hypertree

    fresh = H.n
    if not new_edges:
        raise FreshVertexMissing("at least one new edge through the fresh vertex is required")
    for e in new_edges:
        if fresh not in e:
            raise FreshVertexMissing(f"edge {list(e)} does not contain the fresh vertex {fresh}")
    grown = H.with_edges(new_edges, n=fresh + 1)
    if not (is_hypertree(grown) and is_edge_minimal(grown)):
        raise NotEdgeMinimalAfterExtension("extension is not an edge-minimal hypertree")
    return grown


def random_semicycle_free(n: int, k: int, seed: int, attempts: int | None = None) -> Hypergraph:
    """Grow a random semicycle-free hypergraph by rejection sampling.

    Candidate k-sets are visited in a seeded random order and kept unless they
    close a semicycle, giving an edge-maximal semicycle-free hypergraph; a
    seeded random prefix of it is returned so sparse instances occur too.
    """
    from hypertrees.recognition import find_semicycle

    rng = random.Random(seed)
    pool = list(combinations(range(n), k))
    rng.shuffle(pool)
    if attempts is not None:
        pool = pool[:attempts]
    kept: list[tuple[int, ...]] = []
    for cand in pool:
        trial = new_hypergraph(k, n, kept + [cand])
        if find_semicycle(trial) is None:
            kept.append(cand)
    keep = rng.randint(1, len(kept)) if kept else 0
    return new_hypergraph(k, n, kept[:keep])


FAMILIES = {
    "path": tight_path,
    "star": tight_star,
    "flower": flower,
    "l-flower": l_flower,
    "complete": complete,
    "fano": fano_plane,
    "five-vertex": five_vertex_hypertree,
    "small-counterexample": small_counterexample,
    "cluster-counterexample": cluster_counterexample,
    "odd-cluster-counterexample": odd_cluster_counterexample,
    "non-hypertree-cc": non_hypertree_cc,
    "random-semicycle-free": random_semicycle_free,
}

"""Chains, semicycles and cycles; hypertree recognition and classification.

All searches run over non-self-intersecting sequences (tight cycles aside).
In a semicycle-free host every chain is non-self-intersecting, so there the
restriction loses nothing; for other hosts it is the documented semantics and
:func:`classify` additionally reports the unrestricted answer at desk scale.

Every search accepts ``budget`` (maximum node expansions, ``None`` for
unlimited) and raises :class:`~hypertrees.errors.BudgetExceeded` instead of
guessing when it runs out.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from hypertrees import kernels, oracle
from hypertrees.core import Hypergraph, mask_vertices, tight_line_graph, vertex_mask
from hypertrees.errors import (
    BudgetExceeded,
    EmptyHypergraphError,
    InternalInvariantError,
    NotAHypertreeError,
    ParamError,
    RangeError,
)


@dataclass(frozen=True)
class ChainWitness:
    seq: tuple[int, ...]
    k: int

    @property
    def length(self) -> int:
        return len(self.seq) - self.k + 1


@dataclass(frozen=True)
class SemicycleWitness:
    """``seq`` lists ``v_1..v_l`` with ``v_l == v_1``."""

    seq: tuple[int, ...]
    k: int

    @property
    def length(self) -> int:
        return len(self.seq) - self.k + 1


@dataclass(frozen=True)
class CycleWitness:
    """Cyclic sequence; every cyclic k-window is a distinct edge."""

    seq: tuple[int, ...]
    k: int

    @property
    def length(self) -> int:
        return len(self.seq)


def _check_vertex(H: Hypergraph, v: int) -> None:
    if not 0 <= v < H.n:
        raise RangeError(f"vertex {v} outside [0, {H.n})")


def find_chain(H: Hypergraph, u: int, v: int, budget: int | None = None) -> ChainWitness | None:
    _check_vertex(H, u)
    _check_vertex(H, v)
    if u == v:
        raise ParamError("find_chain needs two distinct vertices")
    seq = kernels.find_chain(H.n, H.k, H.masks, u, v, budget)
    return None if seq is None else ChainWitness(tuple(seq), H.k)


def chain_cover(H: Hypergraph, budget: int | None = None) -> list[int]:
    """For every vertex, the mask of vertices it shares a chain with (complete sweep)."""
    return kernels.chain_cover(H.n, H.k, H.masks, budget, stop_when_full=False)


def is_chain_connected(H: Hypergraph, budget: int | None = None) -> bool:
    if H.n < 2:
        return True
    if H.covered_mask != H.full_mask:
        return False
    cov = kernels.chain_cover(H.n, H.k, H.masks, budget)
    full = H.full_mask
    return all(cov[v] | (1 << v) == full for v in range(H.n))


def chain_witness_table(H: Hypergraph, budget: int | None = None) -> dict[tuple[int, int], ChainWitness | None]:
    """One witness (or ``None``) per unordered vertex pair."""
    return {(u, v): find_chain(H, u, v, budget) for u, v in combinations(range(H.n), 2)}


def find_semicycle(H: Hypergraph, budget: int | None = None) -> SemicycleWitness | None:
    seq = kernels.semicycle(H.n, H.k, H.masks, budget)
    return None if seq is None else SemicycleWitness(tuple(seq), H.k)


def is_semicycle_free(H: Hypergraph, budget: int | None = None) -> bool:
    return find_semicycle(H, budget) is None


def find_tight_cycle(H: Hypergraph, budget: int | None = None) -> CycleWitness | None:
    seq = kernels.tight_cycle(H.n, H.k, H.masks, budget)
    return None if seq is None else CycleWitness(tuple(seq), H.k)


def is_hypertree(H: Hypergraph, budget: int | None = None) -> bool:
    return is_chain_connected(H, budget) and find_semicycle(H, budget) is None


def _require_hypertree(H: Hypergraph, budget: int | None) -> None:
    if not is_hypertree(H, budget):
        raise NotAHypertreeError(f"{H} is not a hypertree")


def is_edge_minimal(H: Hypergraph, budget: int | None = None) -> bool:
    """No edge can be dropped without losing chain-connectivity.

    Dropping an edge never creates a semicycle, so only connectivity is
    re-tested.
    """
    _require_hypertree(H, budget)
    return not any(is_chain_connected(H.without_edge(i), budget) for i in range(H.m))


def addable_edges(H: Hypergraph):
    present = set(H.masks)
    for c in combinations(range(H.n), H.k):
        if vertex_mask(c) not in present:
            yield c


def is_edge_maximal(H: Hypergraph, budget: int | None = None) -> bool:
    """Every k-set not already an edge would close a semicycle."""
    _require_hypertree(H, budget)
    for f in addable_edges(H):
        if find_semicycle(H.with_edges([f]), budget) is None:
            return False
    return True


def max_chain(H: Hypergraph, budget: int | None = None) -> ChainWitness:
    if H.m == 0:
        raise EmptyHypergraphError("a hypergraph without edges has no chains")
    _, seq = kernels.max_chain(H.n, H.k, H.masks, budget)
    return ChainWitness(tuple(seq), H.k)


def max_chain_length(H: Hypergraph, budget: int | None = None) -> int:
    return max_chain(H, budget).length


def is_l_hypertree(H: Hypergraph, l: int, budget: int | None = None) -> bool:
    return is_hypertree(H, budget) and max_chain_length(H, budget) <= l


def focus_vertices(H: Hypergraph) -> frozenset[int]:
    if H.m == 0:
        raise EmptyHypergraphError("focus vertices need at least one edge")
    acc = H.full_mask
    for e in H.masks:
        acc &= e
    return frozenset(mask_vertices(acc))


def is_l_geometric(H: Hypergraph, l: int) -> bool:
    """Every l-subset of the vertices lies in exactly one edge."""
    if not 1 <= l <= H.k:
        raise ParamError(f"l must lie in [1, k={H.k}], got {l}")
    counts: dict[tuple[int, ...], int] = {}
    for e in H.edges:
        for sub in combinations(e, l):
            counts[sub] = counts.get(sub, 0) + 1
    ok = len(counts) == comb(H.n, l) and all(c == 1 for c in counts.values())
    if ok and H.m * comb(H.k, l) != comb(H.n, l):
        raise InternalInvariantError("l-geometric hypergraph violates the design edge count")
    return ok


@dataclass(frozen=True)
class ClassificationReport:
    n: int
    k: int
    m: int
    chain_connected: bool
    semicycle_free: bool
    hypertree: bool
    line_graph_connected: bool
    line_graph_components: int
    max_chain_length: int
    focus_vertices: frozenset[int]
    edge_minimal: bool | None = None
    edge_maximal: bool | None = None
    geometric_l: int | None = None
    semicycle_witness: tuple[int, ...] | None = None
    max_chain_witness: tuple[int, ...] | None = None
    chain_connected_general: bool | None = None
    bounds: tuple = field(default=())


GENERAL_ORACLE_EDGE_LIMIT = 12


def classify(H: Hypergraph, budget: int | None = None) -> ClassificationReport:
    """Full structural verdict; optional fields stay ``None`` when their
    preconditions fail or their search would exceed ``budget``."""
    lg = tight_line_graph(H)
    comps = len(lg.components())
    cc = is_chain_connected(H, budget)
    semi = find_semicycle(H, budget)
    sf = semi is None
    tree = cc and sf
    if H.m:
        chain = max_chain(H, budget)
        longest, chain_seq = chain.length, chain.seq
        focus = focus_vertices(H)
    else:
        longest, chain_seq, focus = 0, None, frozenset()
    minimal = maximal = geo = None
    if tree:
        minimal = not any(is_chain_connected(H.without_edge(i), budget) for i in range(H.m))
        try:
            maximal = all(find_semicycle(H.with_edges([f]), budget) is not None for f in addable_edges(H))
        except BudgetExceeded:
            maximal = None
        geo = next((l for l in range(1, H.k + 1) if is_l_geometric(H, l)), None)
    general = None
    if not sf and H.m <= GENERAL_ORACLE_EDGE_LIMIT:
        try:
            general = oracle.general_chain_connected(H, budget)
        except BudgetExceeded:
            general = None
    return ClassificationReport(
        n=H.n, k=H.k, m=H.m,
        chain_connected=cc, semicycle_free=sf, hypertree=tree,
        line_graph_connected=comps <= 1, line_graph_components=comps,
        max_chain_length=longest, focus_vertices=focus,
        edge_minimal=minimal, edge_maximal=maximal, geometric_l=geo,
        semicycle_witness=None if semi is None else semi.seq,
        max_chain_witness=chain_seq,
        chain_connected_general=general,
    )

"""Berge paths and cycles on hypergraphs with edges of any size.

Used as an independent cross-check: the forest identity and the
loop-free inequality below are classical edge-count facts about Berge
cycles, and both are evaluated rather than assumed.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from hypertrees.core import Hypergraph
from hypertrees.errors import BudgetExceeded, DuplicateEdgeError, InputError, RangeError


@dataclass(frozen=True)
class GeneralHypergraph:
    n: int
    edges: tuple[frozenset[int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)


def new_general(n: int, edges: Iterable[Iterable[int]]) -> GeneralHypergraph:
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    out, seen = [], set()
    for e in edges:
        s = frozenset(e)
        if not s:
            raise InputError("edges must be nonempty")
        bad = [v for v in s if not 0 <= v < n]
        if bad:
            raise RangeError(f"vertex {bad[0]} outside [0, {n})")
        if s in seen:
            raise DuplicateEdgeError(f"duplicate edge {sorted(s)}")
        seen.add(s)
        out.append(s)
    out.sort(key=lambda s: (len(s), sorted(s)))
    return GeneralHypergraph(n, tuple(out))


def from_uniform(H: Hypergraph) -> GeneralHypergraph:
    return new_general(H.n, H.edges)


def berge_components(G: GeneralHypergraph) -> list[frozenset[int]]:
    parent = list(range(G.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in G.edges:
        vs = sorted(e)
        for v in vs[1:]:
            ra, rb = find(vs[0]), find(v)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, set[int]] = {}
    for v in range(G.n):
        groups.setdefault(find(v), set()).add(v)
    return [frozenset(g) for _, g in sorted(groups.items())]


def berge_cycle(G: GeneralHypergraph, min_length: int = 2, budget: int | None = None) -> tuple | None:
    """Alternating witness ``(v1, e1, v2, ..., el, v1)`` with ``l >= min_length``.

    Edges appear as indices into ``G.edges``.  Depth-first over distinct
    vertices and distinct edges; the smallest vertex of the cycle is used as
    its start so each cycle is found from one place only.
    """
    count = 0
    incident = [[i for i, e in enumerate(G.edges) if v in e] for v in range(G.n)]

    def dfs(path, used_v, used_e, start):
        nonlocal count
        count += 1
        if budget is not None and count > budget:
            raise BudgetExceeded(budget)
        v = path[-1]
        for i in incident[v]:
            if i in used_e:
                continue
            e = G.edges[i]
            if start in e and len(used_e) + 1 >= min_length and v != start:
                return path + [i, start]
            for w in sorted(e):
                if w > start and w not in used_v:
                    found = dfs(path + [i, w], used_v | {w}, used_e | {i}, start)
                    if found:
                        return found
        return None

    for s in range(G.n):
        found = dfs([s], {s}, frozenset(), s)
        if found:
            return tuple(found)
    return None


def has_berge_cycle(G: GeneralHypergraph, min_length: int = 2, budget: int | None = None) -> bool:
    return berge_cycle(G, min_length, budget) is not None


def berge_path_problems(G: GeneralHypergraph, walk: Sequence, cycle: bool = False) -> list[str]:
    """Check an alternating vertex/edge-index sequence."""
    walk = list(walk)
    if len(walk) < 3 or len(walk) % 2 == 0:
        return ["alternating sequence must have odd length >= 3"]
    vs, es = walk[0::2], walk[1::2]
    problems = []
    body = vs[:-1] if cycle else vs
    if len(set(body)) != len(body):
        problems.append("vertices repeat")
    if len(set(es)) != len(es):
        problems.append("edges repeat")
    if cycle:
        if vs[0] != vs[-1]:
            problems.append("cycle does not close")
        if len(es) < 2:
            problems.append("cycle needs at least 2 edges")
    for i, ei in enumerate(es):
        if not 0 <= ei < G.m:
            problems.append(f"edge index {ei} out of range")
        elif vs[i] not in G.edges[ei] or vs[i + 1] not in G.edges[ei]:
            problems.append(f"step {i}: vertices {vs[i]}, {vs[i + 1]} not both in edge {ei}")
    return problems


@dataclass(frozen=True)
class ForestIdentity:
    lhs: int
    rhs: int
    components: int
    cycle_free: bool
    witness: tuple | None

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    @property
    def consistent(self) -> bool:
        """The identity holds exactly when there is no Berge cycle."""
        return self.equal == self.cycle_free


def berge_forest_identity(G: GeneralHypergraph, budget: int | None = None) -> ForestIdentity:
    p = len(berge_components(G))
    lhs = sum(len(e) - 1 for e in G.edges)
    cyc = berge_cycle(G, 2, budget)
    return ForestIdentity(lhs, G.n - p, p, cyc is None, cyc)


@dataclass(frozen=True)
class LoopFreeInequality:
    applicable: bool
    lhs: int
    rhs: int
    reason: str | None = None

    @property
    def holds(self) -> bool | None:
        return self.lhs < self.rhs if self.applicable else None


def lovasz_inequality(G: GeneralHypergraph, budget: int | None = None) -> LoopFreeInequality:
    """``sum(|e|-2) < n - p`` for nonempty loop-free hypergraphs whose Berge
    cycles all have length 2 and whose edges pairwise meet in at most 2 vertices."""
    p = len(berge_components(G))
    lhs = sum(len(e) - 2 for e in G.edges)
    rhs = G.n - p
    reason = None
    if G.m == 0:
        # 0 < n - p fails with no edges at all, so the gate needs one edge
        reason = "has no edges"
    elif any(len(e) == 1 for e in G.edges):
        reason = "has a loop"
    elif any(len(a & b) > 2 for i, a in enumerate(G.edges) for b in G.edges[i + 1:]):
        reason = "two edges share more than 2 vertices"
    elif has_berge_cycle(G, 3, budget):
        reason = "has a Berge cycle of length at least 3"
    return LoopFreeInequality(reason is None, lhs, rhs, reason)

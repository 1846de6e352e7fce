"""Edge-count bounds: constructive certificates and bound reports.

The exhaustive harness lives in :mod:`hypertrees.enumeration`; this module
holds the per-instance checks.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any

from hypertrees.core import Hypergraph, check_class_inequalities, class_decomposition
from hypertrees.errors import (
    HypothesisError,
    InternalInvariantError,
    NotChainConnectedError,
    NotLHypertreeError,
    NotSemicycleFreeError,
    ParamError,
    PreconditionError,
)
from hypertrees.recognition import (
    find_semicycle,
    find_tight_cycle,
    is_chain_connected,
    is_hypertree,
    max_chain_length,
)
from hypertrees.validate import phi_problems


@dataclass(frozen=True)
class BoundReport:
    bound_name: str
    n: int
    k: int
    m: int
    bound_value: Any
    holds: bool
    applicable: bool
    label: str | None = None
    hypothesis: str | None = None
    witness: Any = None
    diagnostics: dict = field(default_factory=dict)


@dataclass(frozen=True)
class PhiTable:
    """``maps[i]`` sends each edge to a (k-1)-subset; ``order`` is the deletion
    order and ``chains[j]`` the maximal chain whose last edge was ``order[j]``."""

    maps: tuple[dict, ...]
    order: tuple[tuple[int, ...], ...]
    chains: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.order)


def lower_bound_applicable(n: int, k: int) -> bool:
    return n >= (k - 1) ** 2 or k <= 5


def check_lower_bound(H: Hypergraph, budget: int | None = None) -> BoundReport:
    if not is_chain_connected(H, budget):
        raise NotChainConnectedError(f"{H} is not chain-connected")
    n, k, m = H.n, H.k, H.m
    target = n - (k - 1)
    applicable = lower_bound_applicable(n, k)
    holds = m >= target
    label = None
    if not holds:
        label = "violation" if applicable else "counterexample"
    diagnostics: dict = {}
    try:
        ineq = check_class_inequalities(class_decomposition(H), H)
        diagnostics = {
            "sigma": ineq.sigma, "l": ineq.l, "r": ineq.r,
            "sigma_ge_rn": ineq.sigma_ge_rn,
            "sigma_ge_second": ineq.sigma_ge_second,
            "in_window": ineq.in_window,
        }
    except PreconditionError as exc:
        diagnostics = {"class_inequalities": str(exc)}
    return BoundReport("lower", n, k, m, target, holds, applicable, label=label, diagnostics=diagnostics)


# -- greedy maximal chains -------------------------------------------------

def _extend_right(seq: list[int], wins: set, edges: set, k: int, n: int) -> bool:
    tail = seq[len(seq) - k + 1:]
    used = set(seq)
    for w in range(n):
        if w in used:
            continue
        win = frozenset(tail + [w])
        if win in edges and win not in wins:
            seq.append(w)
            wins.add(win)
            return True
    return False


def _extend_left(seq: list[int], wins: set, edges: set, k: int, n: int) -> bool:
    head = seq[:k - 1]
    used = set(seq)
    for w in range(n):
        if w in used:
            continue
        win = frozenset([w] + head)
        if win in edges and win not in wins:
            seq.insert(0, w)
            wins.add(win)
            return True
    return False


def greedy_maximal_chain(edges: set, start: tuple[int, ...], k: int, n: int) -> list[int]:
    """Grow ``start`` to the right while possible, then to the left.

    Ties go to the smallest vertex id.  Once the right end is dead, prepending
    cannot revive it, so the result is maximal at both ends.
    """
    seq = list(start)
    wins = {frozenset(start)}
    while _extend_right(seq, wins, edges, k, n):
        pass
    while _extend_left(seq, wins, edges, k, n):
        pass
    return seq


def _windows(seq, k):
    return [frozenset(seq[i:i + k]) for i in range(len(seq) - k + 1)]


def phi_assignment(H: Hypergraph, budget: int | None = None) -> PhiTable:
    """Injection from edges to (k-1)-sets by repeated deletion of the last edge
    of a maximal chain, mapped to the chain's last k-1 vertices."""
    if H.m == 0:
        raise ParamError("phi_assignment needs at least one edge")
    if find_semicycle(H, budget) is not None:
        raise NotSemicycleFreeError(f"{H} contains a semicycle")
    k, n = H.k, H.n
    remaining = set(H.edge_sets)
    phi: dict[tuple[int, ...], tuple[int, ...]] = {}
    order, chains = [], []
    while remaining:
        start = min(tuple(sorted(e)) for e in remaining)
        seq = greedy_maximal_chain(remaining, start, k, n)
        last = frozenset(seq[-k:])
        key = tuple(sorted(last))
        phi[key] = tuple(sorted(seq[-(k - 1):]))
        order.append(key)
        chains.append(tuple(seq))
        remaining.discard(last)
    table = PhiTable((phi,), tuple(order), tuple(chains))
    problems = phi_problems(H, table.maps)
    if problems:
        raise InternalInvariantError(f"phi assignment is not injective: {problems[:3]}")
    return table


def check_upper_bound(H: Hypergraph, budget: int | None = None) -> BoundReport:
    bound = comb(H.n, H.k - 1)
    holds = H.m <= bound
    if find_semicycle(H, budget) is None:
        table = phi_assignment(H, budget) if H.m else PhiTable(({},), (), ())
        return BoundReport("upper", H.n, H.k, H.m, bound, holds, True,
                           hypothesis="semicycle-free", witness=table)
    if find_tight_cycle(H, budget) is None:
        return BoundReport("upper", H.n, H.k, H.m, bound, holds, True, hypothesis="cycle-free")
    raise HypothesisError(f"{H} has both a semicycle and a cycle")


def _common_block(seq: list[int], k: int) -> range:
    """Positions shared by every window of a distinct-vertex chain."""
    length = len(seq) - k + 1
    return range(length - 1, k)


def phi_multi(H: Hypergraph, l: int, budget: int | None = None) -> PhiTable:
    """``k-l+1`` injections with pairwise disjoint images for an l-hypertree.

    For a maximal chain with last edge ``e`` and common vertex set ``U``, every
    ``u`` in ``U`` can be moved to the first position of ``e`` without changing
    any window; the chain is re-extended until none of these reorderings can
    grow it, after which ``e - {u}`` lies in no other remaining edge.
    """
    k, n = H.k, H.n
    if not 1 <= l <= k:
        raise ParamError(f"l must lie in [1, k={k}], got {l}")
    if H.m == 0:
        raise ParamError("phi_multi needs at least one edge")
    if not is_hypertree(H, budget) or max_chain_length(H, budget) > l:
        raise NotLHypertreeError(f"{H} is not a {l}-hypertree")
    need = k - l + 1
    remaining = set(H.edge_sets)
    maps: list[dict] = [{} for _ in range(need)]
    order, chains = [], []
    while remaining:
        start = min(tuple(sorted(e)) for e in remaining)
        seq = greedy_maximal_chain(remaining, start, k, n)
        wins = set(_windows(seq, k))
        grown = True
        while grown:
            grown = False
            block = _common_block(seq, k)
            drop = block[0]
            for pos in sorted(block, key=lambda p: seq[p]):
                trial = list(seq)
                trial[drop], trial[pos] = trial[pos], trial[drop]
                if _extend_right(trial, wins, remaining, k, n):
                    while _extend_right(trial, wins, remaining, k, n):
                        pass
                    seq = trial
                    grown = True
                    break
        U = sorted(seq[p] for p in _common_block(seq, k))
        if len(U) < need:
            raise InternalInvariantError(f"common vertex set {U} smaller than k-l+1={need}")
        last = frozenset(seq[-k:])
        key = tuple(sorted(last))
        for i, u in enumerate(U[:need]):
            maps[i][key] = tuple(sorted(last - {u}))
        order.append(key)
        chains.append(tuple(seq))
        remaining.discard(last)
    table = PhiTable(tuple(maps), tuple(order), tuple(chains))
    problems = phi_problems(H, table.maps)
    if problems:
        raise InternalInvariantError(f"multi-injection certificate failed: {problems[:3]}")
    return table


def check_l_hypertree_bound(H: Hypergraph, l: int, budget: int | None = None) -> BoundReport:
    table = phi_multi(H, l, budget)
    bound = Fraction(comb(H.n, H.k - 1), H.k - l + 1)
    return BoundReport(f"l-hypertree(l={l})", H.n, H.k, H.m, bound, H.m <= bound, True,
                       hypothesis=f"{l}-hypertree", witness=table)

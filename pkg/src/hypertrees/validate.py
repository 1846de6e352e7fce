"""Witness validators.

Deliberately written against the plain set view of a hypergraph
(``H.edge_sets``) and sharing no code with the searchers, so a buggy search
cannot certify its own output.  Each validator returns a list of problems;
an empty list means the witness is sound.
"""
from __future__ import annotations

from typing import Sequence

from hypertrees.core import Hypergraph


def _windows(seq: Sequence[int], k: int, cyclic: bool = False) -> list[frozenset[int]]:
    L = len(seq)
    count = L if cyclic else L - k + 1
    out = []
    for i in range(count):
        out.append(frozenset(seq[(i + t) % L] for t in range(k)))
    return out


def _window_problems(H: Hypergraph, wins: list[frozenset[int]]) -> list[str]:
    problems = []
    for i, w in enumerate(wins):
        if len(w) != H.k:
            problems.append(f"window {i} has repeated vertices")
        elif w not in H.edge_sets:
            problems.append(f"window {i} {sorted(w)} is not an edge")
    if len(set(wins)) != len(wins):
        problems.append("windows are not pairwise distinct")
    return problems


def chain_problems(H: Hypergraph, seq: Sequence[int], *, simple: bool = True) -> list[str]:
    seq = list(seq)
    if len(seq) < H.k:
        return [f"sequence shorter than k={H.k}"]
    problems = []
    if seq[0] == seq[-1]:
        problems.append("first and last vertex coincide")
    if simple and len(set(seq)) != len(seq):
        problems.append("sequence repeats a vertex")
    return problems + _window_problems(H, _windows(seq, H.k))


def semicycle_problems(H: Hypergraph, seq: Sequence[int], *, simple: bool = True) -> list[str]:
    seq = list(seq)
    if len(seq) < H.k + 1:
        return ["sequence too short"]
    problems = []
    if seq[0] != seq[-1]:
        problems.append("first and last vertex differ")
    if simple and len(set(seq[:-1])) != len(seq) - 1:
        problems.append("sequence repeats a vertex")
    wins = _windows(seq, H.k)
    if len(wins) < 3:
        problems.append("fewer than 3 edges")
    return problems + _window_problems(H, wins)


def cycle_problems(H: Hypergraph, seq: Sequence[int]) -> list[str]:
    seq = list(seq)
    if len(seq) < H.k + 1:
        return [f"fewer than k+1={H.k + 1} edges"]
    return _window_problems(H, _windows(seq, H.k, cyclic=True))


def phi_problems(H: Hypergraph, maps: Sequence[dict]) -> list[str]:
    """Each map must send every edge to a (k-1)-subset of it, injectively,
    and the images of different maps must be pairwise disjoint."""
    problems = []
    seen: dict[frozenset[int], int] = {}
    for i, phi in enumerate(maps):
        if set(map(frozenset, phi)) != set(H.edge_sets):
            problems.append(f"map {i} is not defined on exactly the edge set")
        images = set()
        for edge, image in phi.items():
            img = frozenset(image)
            if len(img) != H.k - 1 or not img <= frozenset(edge):
                problems.append(f"map {i}: image {sorted(img)} is not a (k-1)-subset of {sorted(edge)}")
            if img in images:
                problems.append(f"map {i} is not injective at {sorted(img)}")
            images.add(img)
            if img in seen and seen[img] != i:
                problems.append(f"maps {seen[img]} and {i} share the image {sorted(img)}")
            seen.setdefault(img, i)
    return problems


def deletion_replay_problems(H: Hypergraph, order: Sequence[Sequence[int]], chains: Sequence[Sequence[int]]) -> list[str]:
    """Replay a deletion order: at each step the recorded chain must be a chain
    of the remaining edges, end with the deleted edge, and admit no extension
    at either end."""
    k = H.k
    remaining = set(H.edge_sets)
    problems = []
    if sorted(map(tuple, order)) != sorted(H.edges):
        problems.append("deletion order is not a permutation of the edges")
    for step, (edge, seq) in enumerate(zip(order, chains)):
        seq = list(seq)
        wins = _windows(seq, k)
        if any(w not in remaining for w in wins) or len(set(wins)) != len(wins):
            problems.append(f"step {step}: sequence is not a chain of the remaining edges")
        if frozenset(seq[-k:]) != frozenset(edge):
            problems.append(f"step {step}: chain does not end with the deleted edge")
        used = set(wins)
        for w in range(H.n):
            right = frozenset(seq[len(seq) - k + 1:] + [w])
            left = frozenset([w] + seq[:k - 1])
            if len(right) == k and right in remaining and right not in used:
                problems.append(f"step {step}: chain extends to the right by {w}")
            if len(left) == k and left in remaining and left not in used:
                problems.append(f"step {step}: chain extends to the left by {w}")
        remaining.discard(frozenset(edge))
    return problems

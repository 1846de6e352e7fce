"""Pure-Python search kernels over integer vertex masks.

This is the reference implementation; ``_ckernels`` must visit the search
space in exactly the same order and return identical witnesses.

Conventions shared by every search:

* ``masks`` is the canonical (lexicographic) edge list of one hypergraph.
* Start edges are taken in canonical order.  An edge with a tight neighbour
  (another edge sharing k-1 vertices) is seeded with all k! vertex orderings
  in lexicographic order; an edge without one cannot be extended and is
  treated as a single node.
* Extensions are tried in ascending vertex id.
* ``budget < 0`` means unlimited; otherwise exceeding ``budget`` node
  expansions raises :class:`BudgetExceeded`.
"""
from __future__ import annotations

import sys
from contextlib import contextmanager
from itertools import permutations

from hypertrees.errors import BudgetExceeded

COVERS = 128
CC = 1
SF = 2
EMIN = 4
EMAX = 8
CYC_CHECKED = 16
HAS_CYC = 32
CLASS_FAIL = 64

OPT_COVER_ONLY = 1
OPT_CYCLE_ALL = 2
OPT_MINMAX = 4


class _Found(Exception):
    pass


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _mask(seq) -> int:
    acc = 0
    for v in seq:
        acc |= 1 << v
    return acc


def _extensions(masks, tail: int) -> int:
    cand = 0
    for e in masks:
        if e & tail == tail:
            cand |= e
    return cand & ~tail


def _tight_neighbours(masks, k: int) -> list[bool]:
    m = len(masks)
    nb = [False] * m
    for i in range(m):
        for j in range(i + 1, m):
            if (masks[i] & masks[j]).bit_count() == k - 1:
                nb[i] = nb[j] = True
    return nb


class _Counter:
    __slots__ = ("budget", "nodes")

    def __init__(self, budget: int):
        self.budget = budget
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if 0 <= self.budget < self.nodes:
            raise BudgetExceeded(self.budget)


@contextmanager
def _deep(limit: int):
    old = sys.getrecursionlimit()
    if limit > old:
        sys.setrecursionlimit(limit)
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


def semicycle(n: int, k: int, masks, budget: int = -1):
    """Non-self-intersecting semicycle ``x_1..x_m, x_1`` or ``None``."""
    masks = list(masks)
    edge_set = set(masks)
    nb = _tight_neighbours(masks, k)
    ctr = _Counter(budget)

    def dfs(seq, wins, vmask):
        ctr.tick()
        L = len(seq)
        tail = _mask(seq[L - k + 1:])
        if L >= k + 1:
            close = tail | (1 << seq[0])
            if close in edge_set and close not in wins:
                return seq + [seq[0]]
        for w in _bits(_extensions(masks, tail) & ~vmask):
            r = dfs(seq + [w], wins + [tail | (1 << w)], vmask | (1 << w))
            if r is not None:
                return r
        return None

    with _deep(4 * n + 200):
        for i, e in enumerate(masks):
            if not nb[i]:
                continue
            for perm in permutations(_bits(e)):
                r = dfs(list(perm), [e], e)
                if r is not None:
                    return r
    return None


def tight_cycle(n: int, k: int, masks, budget: int = -1):
    """Cyclic sequence whose every cyclic k-window is a distinct edge, or ``None``.

    The walk starts at its lowest-index edge, so later windows must have a
    strictly larger index.  Vertices may repeat.
    """
    masks = list(masks)
    m = len(masks)
    index = {e: i for i, e in enumerate(masks)}
    nb = _tight_neighbours(masks, k)
    ctr = _Counter(budget)

    def dfs(seq, used, s):
        ctr.tick()
        L = len(seq)
        if L >= k + 1:
            extra = []
            for j in range(L - k + 1, L):
                wm = 0
                for t in range(k):
                    wm |= 1 << seq[(j + t) % L]
                idx = index.get(wm, -1)
                if idx <= s or (used >> idx) & 1 or idx in extra:
                    break
                extra.append(idx)
            else:
                return seq
        if L >= m:
            return None
        tail = _mask(seq[L - k + 1:])
        for w in _bits(_extensions(masks, tail)):
            idx = index[tail | (1 << w)]
            if idx <= s or (used >> idx) & 1:
                continue
            r = dfs(seq + [w], used | (1 << idx), s)
            if r is not None:
                return r
        return None

    with _deep(4 * m + 200):
        for s, e in enumerate(masks):
            if not nb[s]:
                continue
            for perm in permutations(_bits(e)):
                r = dfs(list(perm), 1 << s, s)
                if r is not None:
                    return r
    return None


def chain_cover(n: int, k: int, masks, budget: int = -1, stop_when_full: bool = True):
    """Per-vertex masks of the vertices sharing a non-self-intersecting chain.

    ``cov[v]`` never contains ``v`` itself.  With ``stop_when_full`` the sweep
    stops as soon as every pair is covered.
    """
    masks = list(masks)
    nb = _tight_neighbours(masks, k)
    ctr = _Counter(budget)
    cov = [0] * n
    missing = [n * (n - 1) // 2]

    def mark(w, C):
        new = C & ~cov[w] & ~(1 << w)
        if new:
            for x in _bits(new):
                cov[x] |= 1 << w
                missing[0] -= 1
            cov[w] |= new
            if stop_when_full and missing[0] == 0:
                raise _Found

    def dfs(seq, C):
        ctr.tick()
        L = len(seq)
        tail = _mask(seq[L - k + 1:])
        for w in _bits(_extensions(masks, tail) & ~C):
            mark(w, C)
            dfs(seq + [w], C | (1 << w))

    try:
        with _deep(4 * n + 200):
            for i, e in enumerate(masks):
                for x in _bits(e):
                    mark(x, e)
                if nb[i]:
                    for perm in permutations(_bits(e)):
                        dfs(list(perm), e)
    except _Found:
        pass
    return cov


def find_chain(n: int, k: int, masks, u: int, v: int, budget: int = -1):
    """First non-self-intersecting chain whose sequence contains both ``u`` and ``v``."""
    masks = list(masks)
    nb = _tight_neighbours(masks, k)
    ctr = _Counter(budget)
    target = (1 << u) | (1 << v)

    def dfs(seq, C):
        ctr.tick()
        L = len(seq)
        tail = _mask(seq[L - k + 1:])
        for w in _bits(_extensions(masks, tail) & ~C):
            nC = C | (1 << w)
            if nC & target == target:
                return seq + [w]
            r = dfs(seq + [w], nC)
            if r is not None:
                return r
        return None

    with _deep(4 * n + 200):
        for i, e in enumerate(masks):
            ctr.tick()
            if e & target == target:
                return list(_bits(e))
            if nb[i]:
                for perm in permutations(_bits(e)):
                    r = dfs(list(perm), e)
                    if r is not None:
                        return r
    return None


def max_chain(n: int, k: int, masks, budget: int = -1):
    """Longest non-self-intersecting chain as ``(length, sequence)``; needs one edge."""
    masks = list(masks)
    nb = _tight_neighbours(masks, k)
    ctr = _Counter(budget)
    cap = n - k + 1
    best = [1, list(_bits(masks[0]))]

    def dfs(seq, C):
        ctr.tick()
        L = len(seq)
        if L - k + 1 > best[0]:
            best[0] = L - k + 1
            best[1] = list(seq)
            if best[0] == cap:
                raise _Found
        tail = _mask(seq[L - k + 1:])
        for w in _bits(_extensions(masks, tail) & ~C):
            dfs(seq + [w], C | (1 << w))

    try:
        with _deep(4 * n + 200):
            for i, e in enumerate(masks):
                if nb[i]:
                    for perm in permutations(_bits(e)):
                        dfs(list(perm), e)
    except _Found:
        pass
    return best[0], best[1]


def _chain_connected(n, k, masks, full):
    union = 0
    for e in masks:
        union |= e
    if union != full:
        return False
    cov = chain_cover(n, k, masks)
    return all((cov[v] | (1 << v)) == full for v in range(n))


def _class_cover_ok(n, k, masks, full):
    m = len(masks)
    parent = list(range(m))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(m):
        for j in range(i + 1, m):
            if (masks[i] & masks[j]).bit_count() == k - 1:
                parent[find(i)] = find(j)
    classes: dict[int, int] = {}
    for i in range(m):
        r = find(i)
        classes[r] = classes.get(r, 0) | masks[i]
    for x in range(n):
        acc = 0
        for c in classes.values():
            if c >> x & 1:
                acc |= c
        if acc != full:
            return False
    return True


def classify_flags(n: int, k: int, masks, universe, options: int, pos=None) -> int:
    """Flag byte for one edge set, as produced by :func:`scan_block`."""
    if pos is None:
        pos = {f: j for j, f in enumerate(universe)}
    full = (1 << n) - 1
    union = 0
    for e in masks:
        union |= e
    covers = union == full
    if options & OPT_COVER_ONLY and not covers:
        return 0
    flags = COVERS if covers else 0
    cc = covers and _chain_connected(n, k, masks, full)
    sf = semicycle(n, k, masks) is None
    if cc:
        flags |= CC
        if not _class_cover_ok(n, k, masks, full):
            flags |= CLASS_FAIL
    if sf:
        flags |= SF
    if options & OPT_CYCLE_ALL or sf:
        flags |= CYC_CHECKED
        if tight_cycle(n, k, masks) is not None:
            flags |= HAS_CYC
    if cc and sf and options & OPT_MINMAX:
        minimal = True
        for i in range(len(masks)):
            if _chain_connected(n, k, masks[:i] + masks[i + 1:], full):
                minimal = False
                break
        if minimal:
            flags |= EMIN
        present = set(masks)
        maximal = True
        for f in universe:
            if f in present:
                continue
            grown = sorted(masks + [f], key=pos.__getitem__)
            if semicycle(n, k, grown) is None:
                maximal = False
                break
        if maximal:
            flags |= EMAX
    return flags


def scan_block(n: int, k: int, universe, start: int, stop: int, options: int) -> bytes:
    """Flag bytes for the edge sets with subset ids ``start <= id < stop``.

    Bit ``j`` of a subset id selects ``universe[j]``; ``universe`` must be the
    canonical list of all k-subsets so that selected edges stay canonical.
    """
    universe = list(universe)
    pos = {f: j for j, f in enumerate(universe)}
    out = bytearray(stop - start)
    for sid in range(start, stop):
        masks = [universe[j] for j in _bits(sid)]
        out[sid - start] = classify_flags(n, k, masks, universe, options, pos)
    return bytes(out)

import random

import pytest

from hypertrees.berge import (
    berge_components,
    berge_cycle,
    berge_forest_identity,
    berge_path_problems,
    from_uniform,
    has_berge_cycle,
    lovasz_inequality,
    new_general,
)
from hypertrees.errors import DuplicateEdgeError, InputError, RangeError
from hypertrees.recognition import find_chain, is_chain_connected


def test_components():
    assert len(berge_components(new_general(6, [[0, 1, 2], [3, 4, 5]]))) == 2
    assert len(berge_components(new_general(5, [[0, 1, 2], [2, 3, 4]]))) == 1
    assert berge_components(new_general(3, [])) == [frozenset([0]), frozenset([1]), frozenset([2])]


def test_constructor_errors():
    with pytest.raises(DuplicateEdgeError):
        new_general(3, [[0, 1], [1, 0]])
    with pytest.raises(RangeError):
        new_general(3, [[3]])
    with pytest.raises(InputError):
        new_general(3, [[]])


def test_two_cycle():
    G = new_general(4, [[0, 1, 2], [1, 2, 3]])
    w = berge_cycle(G)
    assert w is not None and berge_path_problems(G, w, cycle=True) == []
    assert len(w) == 5


def test_no_cycle_and_loop():
    assert not has_berge_cycle(new_general(5, [[0, 1, 2], [2, 3, 4]]))
    assert not has_berge_cycle(new_general(1, [[0]]))


def test_identity_examples():
    r = berge_forest_identity(new_general(3, [[0, 1, 2]]))
    assert (r.lhs, r.rhs, r.cycle_free) == (2, 2, True)
    r = berge_forest_identity(new_general(5, [[0, 1, 2], [2, 3, 4]]))
    assert (r.lhs, r.rhs, r.cycle_free, r.consistent) == (4, 4, True, True)
    r = berge_forest_identity(new_general(4, [[0, 1, 2], [1, 2, 3]]))
    assert (r.lhs, r.rhs, r.cycle_free, r.consistent) == (4, 3, False, True)


def test_lovasz_examples():
    r = lovasz_inequality(new_general(4, [[0, 1, 2], [1, 2, 3]]))
    assert r.applicable and (r.lhs, r.rhs) == (2, 3) and r.holds
    assert not lovasz_inequality(new_general(3, [[0], [0, 1, 2]])).applicable


def test_lovasz_on_grown_forests():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(3, 12)
        edges = [[0, 1, 2]]
        covered = {0, 1, 2}
        # each new edge meets the covered set in one or two vertices
        for v in range(3, n):
            if v in covered:
                continue
            old = rng.sample(sorted(covered), 1 if v + 1 >= n else rng.choice([1, 2]))
            fresh = [v] if len(old) == 2 else [v, v + 1]
            edges.append(old + fresh)
            covered.update(fresh)
        G = new_general(max(covered) + 1, edges)
        r = lovasz_inequality(G)
        if r.applicable:
            assert r.holds and G.m < G.n - 1


def test_sweep_identity_and_inequality(sweep_53):
    for _, H in sweep_53:
        G = from_uniform(H)
        ident = berge_forest_identity(G)
        assert ident.consistent
        if ident.witness is not None:
            assert berge_path_problems(G, ident.witness, cycle=True) == []
        lov = lovasz_inequality(G)
        assert lov.holds in (None, True)


def test_chain_connected_implies_berge_connected(sweep_53):
    for _, H in sweep_53:
        if is_chain_connected(H):
            assert len(berge_components(from_uniform(H))) == 1


def test_chain_yields_berge_path():
    from hypertrees.generators import tight_path
    H = tight_path(6, 3)
    w = find_chain(H, 0, 5)
    G = from_uniform(H)
    index = {e: i for i, e in enumerate(G.edges)}
    # consecutive chain windows share vertices; walk along their first vertices
    wins = [frozenset(w.seq[i:i + 3]) for i in range(len(w.seq) - 2)]
    walk = [w.seq[0]]
    for i, win in enumerate(wins):
        walk += [index[win], w.seq[i + 1] if i + 1 < len(wins) else w.seq[-1]]
    assert berge_path_problems(G, walk) == []

from itertools import combinations

import networkx as nx
import pytest

from hypertrees import oracle
from hypertrees.core import new_hypergraph
from hypertrees.errors import (
    BudgetExceeded,
    EmptyHypergraphError,
    NotAHypertreeError,
    ParamError,
    RangeError,
)
from hypertrees.generators import (
    b_construction,
    complete,
    fano_plane,
    five_vertex_hypertree,
    flower,
    non_hypertree_cc,
    small_counterexample,
    tight_path,
    tight_star,
)
from hypertrees.recognition import (
    chain_witness_table,
    classify,
    find_chain,
    find_semicycle,
    find_tight_cycle,
    focus_vertices,
    is_chain_connected,
    is_edge_maximal,
    is_edge_minimal,
    is_hypertree,
    is_l_geometric,
    is_l_hypertree,
    max_chain,
    max_chain_length,
)
from hypertrees.validate import chain_problems, cycle_problems, semicycle_problems

from conftest import all_edge_sets


def single_edge(k=3):
    return new_hypergraph(k, k, [range(k)])


def cycle_oracle(H):
    """A closed tight walk: the first k-1 vertices recur at the end and every
    cyclic window is a distinct edge."""
    k = H.k
    for seq in oracle.tight_walks(H):
        L = len(seq) - (k - 1)
        if L >= k + 1 and seq[L:] == seq[:k - 1]:
            return seq[:L]
    return None


class TestFindChain:
    def test_path_end_to_end(self):
        w = find_chain(tight_path(5, 3), 0, 4)
        assert w.seq == (0, 1, 2, 3, 4) and w.length == 3

    def test_single_edge(self):
        assert find_chain(single_edge(), 0, 2).length == 1

    def test_flower_far_rim_vertices(self):
        # rim ids 0..8, rim distance 4 >= 2k-2
        assert find_chain(flower(10, 3), 0, 4) is None

    def test_errors(self):
        with pytest.raises(RangeError):
            find_chain(tight_path(5, 3), 0, 5)
        with pytest.raises(ParamError):
            find_chain(tight_path(5, 3), 1, 1)

    @pytest.mark.parametrize("n", range(5, 11))
    def test_flower_chain_law(self, n):
        F, rim = flower(n, 3), n - 1
        for i, j in combinations(range(rim), 2):
            d = j - i
            assert (find_chain(F, i, j) is not None) == (min(d, rim - d) < 4)

    def test_witness_table_is_sound(self):
        H = five_vertex_hypertree()
        for (u, v), w in chain_witness_table(H).items():
            assert w is not None and u in w.seq and v in w.seq
            assert chain_problems(H, w.seq) == []


class TestChainConnected:
    def test_star(self):
        assert is_chain_connected(tight_star(7, 3))

    def test_small_counterexample(self):
        assert is_chain_connected(small_counterexample(6))

    def test_disjoint_edges(self):
        assert not is_chain_connected(new_hypergraph(3, 6, [[0, 1, 2], [3, 4, 5]]))

    def test_isolated_vertex(self):
        assert not is_chain_connected(new_hypergraph(3, 4, [[0, 1, 2]]))


class TestSemicycle:
    def test_minimum_semicycle(self):
        w = find_semicycle(new_hypergraph(3, 4, [[0, 1, 2], [1, 2, 3], [2, 3, 0]]))
        assert w.seq == (0, 1, 2, 3, 0) and w.length == 3

    def test_h5_free(self):
        assert find_semicycle(five_vertex_hypertree()) is None

    def test_doubling_of_single_edge_free(self):
        assert find_semicycle(b_construction(single_edge()), budget=10**7) is None


class TestTightCycle:
    def test_complete_on_four(self):
        w = find_tight_cycle(complete(4, 3))
        assert w.seq == (0, 1, 2, 3) and cycle_problems(complete(4, 3), w.seq) == []

    def test_h5_has_none(self):
        H = five_vertex_hypertree()
        assert find_tight_cycle(H) is None and cycle_oracle(H) is None

    def test_rim_cycle(self):
        H = non_hypertree_cc(5)
        w = find_tight_cycle(H)
        assert w is not None and w.length == 5
        assert cycle_problems(H, w.seq) == []


class TestHypertree:
    def test_examples(self):
        assert is_hypertree(five_vertex_hypertree())
        assert not is_hypertree(flower(9, 3))
        assert is_hypertree(tight_path(6, 3))

    def test_edge_minimal(self):
        assert is_edge_minimal(tight_star(7, 3))
        assert is_edge_minimal(flower(6, 3))
        assert not is_edge_minimal(flower(5, 3))
        assert is_edge_minimal(flower(7, 3))

    def test_edge_maximal(self):
        assert is_edge_maximal(single_edge())
        assert not is_edge_maximal(tight_star(7, 3))
        # three leaves form an edge sharing at most one vertex with any star edge
        assert find_semicycle(tight_star(7, 3).with_edges([[2, 3, 4]])) is None
        with pytest.raises(NotAHypertreeError):
            is_edge_maximal(complete(4, 3))

    def test_max_chain_length(self):
        assert max_chain_length(tight_path(7, 3)) == 5
        assert max_chain_length(tight_star(9, 4)) == 2
        assert max_chain_length(single_edge()) == 1
        with pytest.raises(EmptyHypergraphError):
            max_chain_length(new_hypergraph(3, 3, []))

    def test_l_hypertree(self):
        assert is_l_hypertree(tight_star(9, 4), 2)
        assert not is_l_hypertree(tight_path(7, 3), 4)

    def test_focus_vertices(self):
        assert focus_vertices(tight_star(7, 3)) == {0, 1}
        assert len(focus_vertices(flower(6, 3))) == 1
        assert focus_vertices(tight_path(6, 3)) == frozenset()

    def test_geometric(self):
        fano = fano_plane()
        assert is_l_geometric(fano, 2) and fano.m == 7
        assert not is_l_geometric(tight_star(7, 3), 2)
        assert is_l_geometric(single_edge(), 3)
        with pytest.raises(ParamError):
            is_l_geometric(fano, 4)

    def test_budget_guard(self):
        with pytest.raises(BudgetExceeded):
            is_chain_connected(b_construction(single_edge()), budget=10)


class TestClassify:
    def test_h5(self):
        r = classify(five_vertex_hypertree())
        assert r.hypertree and not r.line_graph_connected and r.line_graph_components == 2

    def test_star(self):
        r = classify(tight_star(7, 3))
        assert r.hypertree and r.edge_minimal and r.max_chain_length == 2
        assert len(r.focus_vertices) == 2

    def test_disjoint(self):
        r = classify(new_hypergraph(3, 6, [[0, 1, 2], [3, 4, 5]]))
        assert not r.chain_connected and not r.hypertree


class TestSweepFiveThree:
    """Every 3-uniform hypergraph on 5 vertices against the walk oracles."""

    def test_semicycle_search_matches_oracle(self, sweep_53):
        for _, H in sweep_53:
            found = find_semicycle(H)
            brute = oracle.any_semicycle(H)
            assert (found is None) == (brute is None), H
            if found is not None:
                assert semicycle_problems(H, found.seq) == []

    def test_no_self_intersecting_chain_when_semicycle_free(self, sweep_53):
        for _, H in sweep_53:
            if find_semicycle(H) is None:
                assert oracle.self_intersecting_chain(H) is None

    def test_cycle_search_matches_oracle_and_implies_semicycle(self, sweep_53):
        for _, H in sweep_53:
            cyc = find_tight_cycle(H)
            assert (cyc is None) == (cycle_oracle(H) is None)
            if cyc is not None:
                assert cycle_problems(H, cyc.seq) == []
                assert find_semicycle(H) is not None

    def test_max_chain_witnesses(self, sweep_53):
        for _, H in sweep_53:
            if H.m:
                w = max_chain(H)
                assert chain_problems(H, w.seq) == []

    def test_connectivity_agrees_with_general_oracle_when_semicycle_free(self, sweep_53):
        for _, H in sweep_53:
            if find_semicycle(H) is None:
                assert is_chain_connected(H) == oracle.general_chain_connected(H)


@pytest.mark.parametrize("n", range(2, 7))
def test_graphs_degenerate_to_trees(n):
    for _, H in all_edge_sets(n, 2):
        G = nx.Graph()
        G.add_nodes_from(range(n))
        G.add_edges_from(H.edges)
        assert is_hypertree(H) == nx.is_tree(G)

from fractions import Fraction
from math import comb

import pytest

from hypertrees.bounds import (
    check_l_hypertree_bound,
    check_lower_bound,
    check_upper_bound,
    phi_assignment,
    phi_multi,
)
from hypertrees.core import new_hypergraph
from hypertrees.errors import (
    HypothesisError,
    NotChainConnectedError,
    NotLHypertreeError,
    NotSemicycleFreeError,
)
from hypertrees.generators import (
    b_construction,
    complete,
    five_vertex_hypertree,
    non_hypertree_cc,
    random_semicycle_free,
    small_counterexample,
    tight_path,
    tight_star,
)
from hypertrees.recognition import find_semicycle, is_chain_connected, is_hypertree, max_chain_length
from hypertrees.validate import deletion_replay_problems, phi_problems


def test_lower_bound_star_equality():
    r = check_lower_bound(tight_star(7, 3))
    assert r.holds and r.applicable and r.m == r.bound_value == 5


def test_lower_bound_counterexample_label():
    r = check_lower_bound(small_counterexample(6))
    assert (r.m, r.bound_value, r.holds, r.applicable, r.label) == (3, 4, False, False, "counterexample")
    assert r.diagnostics["sigma_ge_rn"] and r.diagnostics["sigma_ge_second"]


def test_lower_bound_requires_connectivity():
    with pytest.raises(NotChainConnectedError):
        check_lower_bound(new_hypergraph(3, 6, [[0, 1, 2], [3, 4, 5]]))


def test_lower_bound_on_sweep(sweep_53):
    for _, H in sweep_53:
        if is_chain_connected(H):
            r = check_lower_bound(H)
            assert r.applicable and r.holds


def test_phi_path_trace():
    t = phi_assignment(tight_path(5, 3))
    assert t.order == ((2, 3, 4), (1, 2, 3), (0, 1, 2))
    assert t.maps[0] == {(0, 1, 2): (1, 2), (1, 2, 3): (2, 3), (2, 3, 4): (3, 4)}


def test_phi_single_edge():
    t = phi_assignment(tight_path(3, 3))
    assert t.maps[0] == {(0, 1, 2): (1, 2)}


def test_phi_requires_semicycle_free():
    with pytest.raises(NotSemicycleFreeError):
        phi_assignment(complete(4, 3))


@pytest.mark.parametrize("seed", range(100))
def test_phi_on_random_instances(seed):
    n = 5 + seed % 4
    H = random_semicycle_free(n, 3, seed)
    if H.m == 0:
        return
    t = phi_assignment(H)
    assert phi_problems(H, t.maps) == []
    assert deletion_replay_problems(H, t.order, t.chains) == []


def test_phi_on_sweep(sweep_53):
    for _, H in sweep_53:
        if H.m and find_semicycle(H) is None:
            t = phi_assignment(H)
            assert phi_problems(H, t.maps) == []
            assert deletion_replay_problems(H, t.order, t.chains) == []


def test_upper_bound_routes():
    r = check_upper_bound(b_construction(tight_path(3, 3)))
    assert r.holds and r.hypothesis == "semicycle-free" and (r.m, r.bound_value) == (29, 55)
    with pytest.raises(HypothesisError):
        check_upper_bound(complete(4, 3))


def test_upper_bound_cycle_free_route():
    # a semicycle without any tight cycle
    H = new_hypergraph(3, 4, [[0, 1, 2], [1, 2, 3], [0, 2, 3]])
    assert find_semicycle(H) is not None
    r = check_upper_bound(H)
    assert r.hypothesis == "cycle-free" and r.holds and r.witness is None


def test_non_hypertree_has_both():
    with pytest.raises(HypothesisError):
        check_upper_bound(non_hypertree_cc(5))


def test_phi_multi_star_eight_four():
    H = tight_star(8, 4)
    assert max_chain_length(H) == 2
    r = check_l_hypertree_bound(H, 2)
    assert r.holds and r.bound_value == Fraction(56, 3) and len(r.witness.maps) == 3


@pytest.mark.parametrize("k", [3, 4, 5])
def test_phi_multi_stars(k):
    for n in range(k, 13):
        H = tight_star(n, k)
        t = phi_multi(H, 2)
        assert len(t.maps) == k - 1
        assert phi_problems(H, t.maps) == []
        assert H.m == n - (k - 1) <= Fraction(comb(n, k - 1), k - 1)


def test_phi_multi_single_edge():
    H = tight_path(4, 4)
    t = phi_multi(H, 1)
    assert len(t.maps) == 4
    images = [m[(0, 1, 2, 3)] for m in t.maps]
    assert len(set(images)) == 4


def test_phi_multi_rejects_long_chains():
    with pytest.raises(NotLHypertreeError):
        phi_multi(tight_path(6, 3), 2)
    with pytest.raises(NotLHypertreeError):
        phi_multi(complete(4, 3), 3)


def test_phi_multi_every_hypertree_of_small_sweeps():
    from conftest import all_edge_sets
    for n, k in ((5, 3), (5, 4), (6, 4)):
        for _, H in all_edge_sets(n, k):
            if H.m and is_hypertree(H):
                for l in range(max_chain_length(H), k + 1):
                    t = phi_multi(H, l)
                    assert len(t.maps) == k - l + 1
                    assert phi_problems(H, t.maps) == []


def test_h5_bounds():
    H = five_vertex_hypertree()
    assert check_lower_bound(H).holds and check_upper_bound(H).holds

from fractions import Fraction

import pytest

from ridlab.families import build_T4k, windmill, windmill_minus
from ridlab.graphs import (
    Graph,
    cycle,
    disjoint_union,
    double_star,
    enumerate_connected,
    enumerate_trees,
    path,
    star,
)
from ridlab.solvers import (
    domination_number,
    eta_bound,
    eta_terms,
    restrained_domination_number,
    rid_number_exact,
    rid_number_tree_dp,
    rrd_number,
)
from ridlab.solvers.search import solve
from ridlab.solvers.treedp import NSTATES, ROOT_STATES, fits_under, state_label, zero_state
from ridlab.verify import (
    is_dominating_set,
    is_restrained_dominating_set,
    is_restrained_italian,
    is_rrd_function,
)

from conftest import brute_rid, brute_sets


@pytest.mark.parametrize(
    "g, want",
    [
        (double_star(2, 2), 4),
        (cycle(4), 4),
        (cycle(5), 5),
        (path(4), 4),
        (path(5), 5),
        (path(6), 6),
        (path(7), 6),
        (path(8), 7),
        (star(6), 6),
    ],
)
def test_pinned_values(g, want):
    assert rid_number_exact(g).value == want
    if g.m == g.n - 1:
        assert rid_number_tree_dp(g).value == want


def test_bnb_matches_bruteforce_with_lex_first_witness():
    for n in range(1, 7):
        for g in enumerate_connected(n):
            value, witness = brute_rid(g)
            res = rid_number_exact(g)
            assert (res.value, res.witness) == (value, witness), g


def test_set_parameters_match_bruteforce():
    for n in range(1, 7):
        for g in enumerate_connected(n):
            assert domination_number(g).value == brute_sets(g, restrained=False)
            assert restrained_domination_number(g).value == brute_sets(g, restrained=True)


def test_tree_dp_matches_bnb():
    for n in range(1, 12):
        for t in enumerate_trees(n):
            dp = rid_number_tree_dp(t)
            assert dp.value == rid_number_exact(t).value
            assert is_restrained_italian(t, dp.witness) and sum(dp.witness) == dp.value


def test_tree_dp_other_roots():
    t = build_T4k(2).graph
    for root in range(t.n):
        assert rid_number_tree_dp(t, root=root).value == 6


def test_tree_dp_rejects_non_trees():
    with pytest.raises(ValueError):
        rid_number_tree_dp(cycle(4))
    with pytest.raises(ValueError):
        rid_number_tree_dp(disjoint_union(path(2), path(2)))


def test_dp_state_encoding():
    assert [state_label(s) for s in range(NSTATES)] == [1, 2, 0, 0, 0, 0, 0, 0]
    assert zero_state(0, False) == 2 and zero_state(2, True) == 7
    assert ROOT_STATES == (0, 1, 2)
    assert fits_under(zero_state(2, False), 2) and not fits_under(zero_state(2, False), 1)
    assert not fits_under(zero_state(0, True), 1) and fits_under(zero_state(0, True), 0)


def test_witnesses_verify_and_chain_holds():
    for n in range(1, 8):
        for g in enumerate_connected(n):
            rid = rid_number_exact(g)
            rrd = rrd_number(g)
            gd = domination_number(g)
            gr = restrained_domination_number(g)
            assert is_restrained_italian(g, rid.witness) and sum(rid.witness) == rid.value
            assert is_rrd_function(g, rrd.witness) and sum(rrd.witness) == rrd.value
            assert is_dominating_set(g, gd.witness) and len(gd.witness) == gd.value
            assert is_restrained_dominating_set(g, gr.witness) and len(gr.witness) == gr.value
            assert gd.value <= gr.value <= rid.value <= 2 * gr.value
            assert rid.value <= rrd.value
            positive = [v for v, x in enumerate(rid.witness) if x]
            assert is_restrained_dominating_set(g, positive)


def test_disconnected_sum_over_components():
    g = disjoint_union(path(4), Graph.from_edges(1, []), cycle(5))
    res = rid_number_exact(g)
    assert res.value == 4 + 1 + 5
    assert is_restrained_italian(g, res.witness)
    assert rid_number_exact(Graph.from_edges(1, [])).witness == (1,)


def test_determinism():
    g = build_T4k(2).graph
    first = rid_number_exact(g)
    solve.cache_clear()
    assert rid_number_exact(g) == first
    assert rid_number_tree_dp(g) == rid_number_tree_dp(g)


def test_known_small_set_values():
    assert restrained_domination_number(path(4)).value == 2
    assert domination_number(star(5)).value == 1


def test_eta_examples():
    assert eta_bound(double_star(2, 2)) == 4
    assert eta_terms(double_star(2, 2))[1] == Fraction(4)
    w = windmill(3).graph
    assert eta_bound(w) == 2 == rrd_number(w).value == rid_number_exact(w).value
    wm = windmill_minus(4).graph
    n, m = wm.n, wm.m
    assert eta_bound(wm) == 3 == n - Fraction(2 * m - 5, 3) == rid_number_exact(wm).value
    assert isinstance(eta_bound(path(5)), Fraction)


def test_eta_domain_errors():
    with pytest.raises(ValueError):
        eta_bound(path(2))
    with pytest.raises(ValueError):
        eta_bound(disjoint_union(path(3), path(3)))


def test_eta_lower_bound_small_sweep():
    for n in range(3, 8):
        for g in enumerate_connected(n):
            assert rid_number_exact(g).value >= eta_bound(g)


def test_prunes_on_larger_graph():
    # A 20-vertex caterpillar stays fast and agrees with the DP.
    edges = [(i, i + 1) for i in range(9)] + [(i, 10 + i) for i in range(10)]
    t = Graph.from_edges(20, edges)
    assert rid_number_exact(t).value == rid_number_tree_dp(t).value

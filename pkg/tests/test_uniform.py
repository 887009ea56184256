import pytest
from hypothesis import given, settings

from forcing_lab.forcing import Af_value, gf_value
from forcing_lab.graph import complete_bipartite, complete_graph, cycle_graph, cycle_with_chords, theta_graph
from forcing_lab.matching import CapExceeded, NotMatchableError
from forcing_lab.uniform import (
    StrongUniformityOracle,
    brute_force_mc_conformal_subgraphs,
    is_strongly_uniform,
    is_strongly_uniform_direct,
    matching_covered_conformal_subgraphs,
)

from test_graph import matchable_graphs


def test_subgraphs_of_c6():
    C6 = cycle_graph(6)
    subs = set(matching_covered_conformal_subgraphs(C6))
    assert subs == {frozenset({e}) for e in C6.edges} | {C6.edges}


def test_subgraphs_of_k4():
    K4 = complete_graph(4)
    subs = set(matching_covered_conformal_subgraphs(K4))
    sizes = sorted(len(s) for s in subs)
    assert sizes == [1] * 6 + [4] * 3 + [6]


def test_subgraphs_of_k2():
    K2 = cycle_graph(4).induced_by_edges([(1, 2)])[0]
    assert set(matching_covered_conformal_subgraphs(K2)) == {frozenset({(1, 2)})}


def test_subgraph_cap():
    with pytest.raises(CapExceeded):
        list(matching_covered_conformal_subgraphs(complete_bipartite(3, 3), cap=3))


def test_uniformity_examples():
    assert is_strongly_uniform(cycle_graph(6))
    assert is_strongly_uniform(complete_graph(4))
    res = StrongUniformityOracle().check(complete_bipartite(3, 3))
    assert not res.uniform
    assert res.counterexample == complete_bipartite(3, 3).edges
    assert (res.gf, res.Af) == (4, 3)


def test_theta_is_minimal_counterexample_of_its_lengthening():
    G = theta_graph(3, 3, 5)
    res = StrongUniformityOracle().check(G)
    assert not res.uniform
    H = G.induced_by_edges(res.counterexample)[0]
    assert gf_value(H) != Af_value(H)


def test_unmatchable_rejected():
    with pytest.raises(NotMatchableError):
        StrongUniformityOracle().check(cycle_graph(5))


def test_chorded_cycle_uniform():
    assert is_strongly_uniform(cycle_with_chords(6, [(1, 4)]))


@settings(max_examples=80, deadline=None)
@given(matchable_graphs(max_n=6, max_extra=8))
def test_subgraph_enumeration_matches_brute_force(G):
    assert set(matching_covered_conformal_subgraphs(G)) == brute_force_mc_conformal_subgraphs(G)


@settings(max_examples=80, deadline=None)
@given(matchable_graphs(max_n=6, max_extra=8))
def test_oracle_matches_definition(G):
    res = StrongUniformityOracle().check(G)
    direct, _ = is_strongly_uniform_direct(G)
    assert res.uniform == direct
    if not res.uniform:
        H = G.induced_by_edges(res.counterexample)[0]
        assert gf_value(H) != Af_value(H)

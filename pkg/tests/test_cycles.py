from itertools import combinations

import pytest
from hypothesis import given, settings

from forcing_lab.cycles import (
    CapExceeded,
    Cycle,
    alternating_cycles,
    conformal_cycles,
    conformal_cycles_by_alternation,
    enumerate_cycles,
    is_bn_graph,
    is_conformal_subgraph,
    odd_conformal_bicycle,
)
from forcing_lab.graph import Graph, complete_bipartite, complete_graph, cycle_graph, theta_graph
from forcing_lab.matching import is_matchable

from conftest import two_triangles_bridge
from test_graph import graphs


def test_cycle_normal_form():
    assert Cycle.from_sequence([3, 2, 1, 4]) == Cycle.from_sequence([1, 4, 3, 2])
    assert Cycle.from_sequence([3, 2, 1, 4]).vertices == (1, 2, 3, 4)
    with pytest.raises(ValueError):
        Cycle.from_sequence([1, 2])


@pytest.mark.parametrize("G,count", [
    (cycle_graph(6), 1),
    (complete_graph(4), 7),
    (complete_bipartite(3, 3), 15),
])
def test_cycle_counts(G, count):
    cs = list(enumerate_cycles(G))
    assert len(cs) == count == len(set(cs))


def test_k33_cycle_lengths():
    lengths = sorted(len(c) for c in enumerate_cycles(complete_bipartite(3, 3)))
    assert lengths == [4] * 9 + [6] * 6


def test_cycle_cap():
    with pytest.raises(CapExceeded):
        list(enumerate_cycles(complete_graph(7), cap=5))


def test_conformal_subgraph():
    C6 = cycle_graph(6)
    assert is_conformal_subgraph(C6, C6.edges)
    assert is_conformal_subgraph(C6, [(1, 2)])
    assert not is_conformal_subgraph(complete_graph(4), [(1, 2), (2, 3), (1, 3)])


def test_conformal_cycles():
    assert [c.vertices for c in conformal_cycles(cycle_graph(6))] == [(1, 2, 3, 4, 5, 6)]
    k4 = conformal_cycles(complete_graph(4))
    assert len(k4) == 3 and all(len(c) == 4 for c in k4)
    th = conformal_cycles(theta_graph(3, 3, 3))
    assert len(th) == 3 and all(len(c) == 6 for c in th)


def test_alternating_cycles():
    C6 = cycle_graph(6)
    for M in ({(1, 2), (3, 4), (5, 6)}, {(2, 3), (4, 5), (1, 6)}):
        assert [c.vertices for c in alternating_cycles(C6, M)] == [(1, 2, 3, 4, 5, 6)]
    k4 = alternating_cycles(complete_graph(4), {(1, 2), (3, 4)})
    assert {c.vertices for c in k4} == {(1, 2, 3, 4), (1, 2, 4, 3)}


def test_alternating_cycles_theta():
    T = theta_graph(3, 3, 3)
    # path 1 is 1-3-4-2; M takes its hub edges 1-3 and 4-2
    M = {(1, 3), (2, 4), (5, 6), (7, 8)}
    cs = alternating_cycles(T, M)
    assert len(cs) == 2 and all({(1, 3), (3, 4), (2, 4)} <= c.edges for c in cs)


def test_bn():
    assert is_bn_graph(complete_bipartite(3, 3))[0]
    assert is_bn_graph(complete_graph(4))[0]
    ok, w = is_bn_graph(two_triangles_bridge())
    assert not ok
    assert {w.first.vertices, w.second.vertices} == {(1, 2, 3), (4, 5, 6)}
    assert w.remainder_matching == frozenset()


def _brute_conformal(G):
    out = set()
    for C in enumerate_cycles(G):
        if is_matchable(G, G.all_vertices_mask & ~C.vertex_mask()):
            out.add(C)
    return out


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_conformal_routes_agree(G):
    if not is_matchable(G):
        return
    a = set(conformal_cycles(G))
    assert a == set(conformal_cycles_by_alternation(G)) == _brute_conformal(G)


def _brute_bicycle(G):
    odd = [C for C in enumerate_cycles(G) if C.is_odd]
    for A, B in combinations(odd, 2):
        if A.vertex_mask() & B.vertex_mask() == 0:
            if is_matchable(G, G.all_vertices_mask & ~(A.vertex_mask() | B.vertex_mask())):
                return True
    return False


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_bicycle_search_matches_pairs(G):
    if not is_matchable(G):
        return
    w = odd_conformal_bicycle(G)
    assert (w is not None) == _brute_bicycle(G)
    if w is not None:
        assert w.first.is_odd and w.second.is_odd
        assert not (w.first.vertex_mask() & w.second.vertex_mask())
        rest = set(G.vertices) - set(w.first.vertices) - set(w.second.vertices)
        assert {v for e in w.remainder_matching for v in e} == rest
        assert all(e in G.edges for e in w.remainder_matching)

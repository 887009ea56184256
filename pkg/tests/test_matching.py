from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from forcing_lab.graph import Graph, complete_bipartite, complete_graph, cycle_graph, disjoint_union
from forcing_lab.matching import (
    CapExceeded,
    allowed_edges,
    count_perfect_matchings,
    elementary_components,
    enumerate_perfect_matchings,
    is_matchable,
    is_matching_covered,
    is_perfect_matching,
    matching_from_literal,
    maximum_matching,
)

from conftest import two_triangles_bridge
from test_graph import graphs


@pytest.mark.parametrize("G,size", [
    (cycle_graph(6), 3),
    (cycle_graph(5), 2),
    (complete_graph(3), 1),
])
def test_maximum_matching_size(G, size):
    M = maximum_matching(G)
    assert len(M) == size
    assert all(G.has_edge(u, v) for u, v in M)
    assert len({v for e in M for v in e}) == 2 * size


def test_matchable():
    assert is_matchable(cycle_graph(6))
    assert not is_matchable(cycle_graph(5))
    K4 = complete_graph(4)
    # removing a 4-cycle leaves the empty graph, which counts as matchable
    assert is_matchable(K4, vmask=0)


@pytest.mark.parametrize("G,count", [
    (cycle_graph(6), 2),
    (complete_graph(4), 3),
    (complete_bipartite(3, 3), 6),
])
def test_matching_counts(G, count):
    ms = list(enumerate_perfect_matchings(G))
    assert len(ms) == count == len(set(ms))
    assert all(is_perfect_matching(G, M) for M in ms)


def test_matching_cap():
    with pytest.raises(CapExceeded):
        count_perfect_matchings(complete_graph(8), cap=10)


def test_allowed_edges():
    assert allowed_edges(cycle_graph(6)) == cycle_graph(6).edges
    assert allowed_edges(complete_graph(4)) == complete_graph(4).edges
    assert allowed_edges(two_triangles_bridge()) == {(1, 4), (2, 3), (5, 6)}


def test_matching_covered():
    assert is_matching_covered(cycle_graph(6))
    assert is_matching_covered(complete_bipartite(3, 3))
    # C6 with a pendant path hung on vertex 1: the pendant edge is forced
    pendant = Graph(8, list(cycle_graph(6).edges) + [(1, 7), (7, 8)])
    assert is_matchable(pendant) and not is_matching_covered(pendant)


def test_elementary_components():
    dec = elementary_components(cycle_graph(6))
    assert len(dec.components) == 1 and dec.components[0] == cycle_graph(6).edges
    dec = elementary_components(disjoint_union(cycle_graph(4), Graph(2, [(1, 2)])))
    assert len(dec.components) == 2
    dec = elementary_components(two_triangles_bridge())
    assert sorted(dec.components) == sorted([frozenset({e}) for e in [(1, 4), (2, 3), (5, 6)]])
    assert dec.forbidden == two_triangles_bridge().edges - {(1, 4), (2, 3), (5, 6)}


def test_matching_literal():
    assert matching_from_literal("1-2,3-4") == frozenset({(1, 2), (3, 4)})
    assert matching_from_literal("4-3, 2-1") == frozenset({(1, 2), (3, 4)})
    with pytest.raises(ValueError):
        matching_from_literal("1-2,3")


def _brute_matchings(G):
    k = G.n // 2
    if G.n % 2:
        return set()
    return {frozenset(S) for S in combinations(sorted(G.edges), k) if len({v for e in S for v in e}) == G.n}


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8))
def test_enumeration_matches_brute_force(G):
    assert set(enumerate_perfect_matchings(G)) == _brute_matchings(G)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8))
def test_matchable_agrees_with_networkx(G):
    H = nx.Graph(list(G.edges))
    H.add_nodes_from(G.vertices)
    assert is_matchable(G) == (2 * len(nx.max_weight_matching(H, maxcardinality=True)) == G.n)

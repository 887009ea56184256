import pytest

from forcing_lab.graph import canonical_form, complete_bipartite, cycle_graph, cycle_with_chords
from forcing_lab.pools import build_pool, connected_graphs, matching_covered_graphs, parse_pool_spec


def forms(graphs):
    return {canonical_form(G) for G in graphs}


def test_connected_graph_counts():
    # connected graphs on 1..6 vertices, up to isomorphism
    assert [len(connected_graphs(n)) for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]


def test_small_bipartite_mc_pool():
    pool = build_pool("exhaustive:n=6,filter=bipartite+mc")
    f = forms(pool)
    for G in (cycle_graph(4), cycle_graph(6), complete_bipartite(3, 3), cycle_with_chords(6, [(1, 4)])):
        assert canonical_form(G) in f
    assert len(f) == len(pool)


def test_matchable_pool_up_to_four():
    pool = build_pool("exhaustive:n=4,filter=matchable")
    # K2; then P4, C4, paw, diamond, K4
    assert sorted(G.n for G in pool) == [2, 4, 4, 4, 4, 4]


def test_random_pool_is_reproducible():
    a = build_pool("random:n=10,p=0.4,count=100,seed=7")
    b = build_pool("random:n=10,p=0.4,count=100,seed=7")
    assert [G.edges for G in a] == [G.edges for G in b] and len(a) == 100


def test_random_pool_filters():
    pool = build_pool("random:n=10,p=0.35,count=30,seed=3,filter=bn")
    assert all(G.n % 2 == 0 and G.n <= 10 for G in pool)


def test_generation_counts():
    assert len(matching_covered_graphs(8, bipartite_only=True)) == 32


@pytest.mark.parametrize("text", [
    "nope:n=4",
    "random:n=4",
    "exhaustive:n=4,filter=wobbly",
    "exhaustive:n=4,colour=red",
])
def test_bad_pool_specs(text):
    with pytest.raises(ValueError):
        parse_pool_spec(text)


def test_exhaustive_bound():
    with pytest.raises(ValueError):
        build_pool("exhaustive:n=12,filter=mc")
    with pytest.raises(ValueError):
        build_pool("exhaustive:n=10")

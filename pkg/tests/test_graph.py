import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from forcing_lab.graph import (
    Graph,
    GraphFormatError,
    bipartition,
    canonical_form,
    complete_bipartite,
    complete_graph,
    components,
    cycle_graph,
    cycle_with_chords,
    cyclomatic_number,
    disjoint_union,
    is_connected_mask,
    is_isomorphism,
    isomorphic,
    parse_graph,
    path_graph,
    serialize_graph,
    theta_graph,
)


def test_parse_c4():
    G = parse_graph("p 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n")
    assert G.n == 4 and G.edges == cycle_graph(4).edges


def test_parse_k2():
    G = parse_graph("p 2 1\ne 1 2\n")
    assert G.n == 2 and G.edges == frozenset({(1, 2)})


def test_parse_comments_and_blank_lines():
    G = parse_graph("# a comment\n\n# another\np 2 1\ne 2 1\n")
    assert G.edges == frozenset({(1, 2)})


@pytest.mark.parametrize("text", [
    "p 3 3\ne 1 1\ne 1 2\ne 2 3\n",   # loop
    "p 3 2\ne 1 2\ne 2 1\n",          # parallel edge
    "p 3 1\ne 1 4\n",                 # out of range
    "p 3 2\ne 1 2\n",                 # edge count mismatch
    "e 1 2\n",                        # no header
    "p 2 1\nq 1 2\n",                 # unknown line
])
def test_parse_rejects(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_parse_error_names_line():
    with pytest.raises(GraphFormatError, match="line 2"):
        parse_graph("p 3 1\ne 1 1\n")


def test_serialize_round_trip(k33):
    assert parse_graph(serialize_graph(k33, ["hello"])).edges == k33.edges


def test_bipartition():
    assert bipartition(cycle_graph(6)) == {1: 0, 2: 1, 3: 0, 4: 1, 5: 0, 6: 1}
    assert bipartition(complete_graph(4)) is None
    assert bipartition(Graph(2, [(1, 2)])) == {1: 0, 2: 1}


def test_cyclomatic():
    assert cyclomatic_number(cycle_graph(6)) == 1
    assert cyclomatic_number(complete_graph(4)) == 3
    assert cyclomatic_number(complete_bipartite(3, 3)) == 4
    assert cyclomatic_number(path_graph(5)) == 0


def test_isomorphic_relabeled_c4():
    H = cycle_graph(4).relabel({1: 3, 2: 1, 3: 4, 4: 2})
    f = isomorphic(cycle_graph(4), H)
    assert f is not None and is_isomorphism(cycle_graph(4), H, f)


def test_c4_not_p4():
    assert isomorphic(cycle_graph(4), path_graph(4)) is None


def test_c6_three_long_chords_is_k33():
    G = cycle_with_chords(6, [(1, 4), (2, 5), (3, 6)])
    assert isomorphic(G, complete_bipartite(3, 3)) is not None


def test_theta_shape():
    T = theta_graph(3, 3, 3)
    assert T.n == 8 and T.m == 9
    assert sorted(T.degrees()) == [2] * 6 + [3, 3]


def test_components_and_union():
    G = disjoint_union(cycle_graph(4), Graph(2, [(1, 2)]))
    assert sorted(map(sorted, components(G))) == [[1, 2, 3, 4], [5, 6]]
    assert not G.is_connected()


def test_connected_mask():
    G = path_graph(4)
    assert is_connected_mask(G.adj, 0b11110)
    assert not is_connected_mask(G.adj, 0b10110)
    assert is_connected_mask(G.adj, 0)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@settings(max_examples=150, deadline=None)
@given(graphs(), st.randoms(use_true_random=False))
def test_canonical_form_is_relabeling_invariant(G, rnd):
    perm = list(G.vertices)
    rnd.shuffle(perm)
    H = G.relabel(dict(zip(G.vertices, perm)))
    assert canonical_form(G) == canonical_form(H)
    f = isomorphic(G, H)
    assert f is not None and is_isomorphism(G, H, f)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_serialize_parse_identity(G):
    H = parse_graph(serialize_graph(G))
    assert (H.n, H.edges) == (G.n, G.edges)


@st.composite
def matchable_graphs(draw, max_n=8, max_extra=None):
    """Graphs with a planted perfect matching 1-2, 3-4, ... plus random extra edges."""
    n = 2 * draw(st.integers(1, max_n // 2))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    planted = [(i, i + 1) for i in range(1, n, 2)]
    extra = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=2 * n if max_extra is None else max_extra))
    return Graph(n, set(planted) | set(extra))

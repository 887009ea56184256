"""Forcing numbers against definition-level brute force."""
from itertools import combinations

import pytest
from hypothesis import given, settings

from forcing_lab.forcing import (
    InfeasibleError,
    anti_forcing_number,
    compatible_alternating_number,
    forcing_report,
    global_forcing_number,
    is_anti_forcing_set,
    is_compatible_set,
    is_global_forcing_set,
    max_anti_forcing_number,
    min_hitting_set,
)
from forcing_lab.graph import complete_bipartite, complete_graph, cycle_graph, theta_graph
from forcing_lab.matching import NotMatchableError, enumerate_perfect_matchings, is_matchable

from test_graph import graphs


def brute_gf(G):
    pms = list(enumerate_perfect_matchings(G))
    edges = sorted(G.edges)
    for k in range(len(edges) + 1):
        for S in combinations(edges, k):
            S = set(S)
            if len({frozenset(M & S) for M in pms}) == len(pms):
                return k


def brute_af(G, M):
    M = frozenset(M)
    rest = sorted(G.edges - M)
    for k in range(len(rest) + 1):
        for S in combinations(rest, k):
            S = set(S)
            if all(M == P for P in enumerate_perfect_matchings(G) if not (P & S)):
                return k


def brute_Af(G):
    return max(brute_af(G, M) for M in enumerate_perfect_matchings(G))


def test_hitting_set_examples():
    assert min_hitting_set("abc", [{"a", "b"}, {"b", "c"}]) == {"b"}
    assert len(min_hitting_set(range(6), [{0, 1}, {2, 3}, {4, 5}])) == 3
    with pytest.raises(InfeasibleError):
        min_hitting_set("ab", [set()])


def test_hitting_set_k4_four_cycles():
    from forcing_lab.cycles import conformal_cycles

    K4 = complete_graph(4)
    S = min_hitting_set(K4.edges, [c.edges for c in conformal_cycles(K4)])
    assert S == {(1, 2), (1, 3)}


def test_global_forcing_set_checks():
    C6 = cycle_graph(6)
    assert is_global_forcing_set(C6, {(3, 4)})
    assert not is_global_forcing_set(C6, set())
    assert not is_global_forcing_set(complete_graph(4), {(1, 2), (3, 4)})


@pytest.mark.parametrize("G,gf", [
    (cycle_graph(6), 1),
    (complete_graph(4), 2),
    (complete_bipartite(3, 3), 4),
    (theta_graph(3, 3, 3), 2),
])
def test_gf_examples(G, gf):
    value, witness = global_forcing_number(G)
    assert value == gf == len(witness) == brute_gf(G)
    assert is_global_forcing_set(G, witness)


def test_gf_needs_matching():
    with pytest.raises(NotMatchableError):
        global_forcing_number(cycle_graph(5))


def test_anti_forcing_set_checks():
    C6 = cycle_graph(6)
    M = {(1, 2), (3, 4), (5, 6)}
    assert is_anti_forcing_set(C6, M, {(2, 3)})
    assert not is_anti_forcing_set(C6, M, set())
    assert is_anti_forcing_set(complete_graph(4), {(1, 2), (3, 4)}, {(2, 3), (2, 4)})
    with pytest.raises(ValueError):
        is_anti_forcing_set(C6, M, {(1, 2)})


def test_af_examples():
    assert anti_forcing_number(cycle_graph(6), {(1, 2), (3, 4), (5, 6)})[0] == 1
    T = theta_graph(3, 3, 3)
    M = {(1, 3), (2, 4), (5, 6), (7, 8)}
    value, witness = anti_forcing_number(T, M)
    assert value == 1 and witness == {(3, 4)}


def test_af_witness_is_lexicographically_least():
    value, witness = anti_forcing_number(complete_graph(4), {(1, 2), (3, 4)})
    assert value == 2 and witness == {(1, 3), (1, 4)}


@pytest.mark.parametrize("G,Af", [
    (cycle_graph(6), 1),
    (complete_graph(4), 2),
    (complete_bipartite(3, 3), 3),
    (theta_graph(3, 3, 3), 1),
])
def test_Af_examples(G, Af):
    value, M, witness = max_anti_forcing_number(G)
    assert value == Af == brute_Af(G)
    assert anti_forcing_number(G, M)[0] == value
    assert is_anti_forcing_set(G, M, witness)


def test_compatible_number_examples():
    assert compatible_alternating_number(cycle_graph(6), {(1, 2), (3, 4), (5, 6)})[0] == 1
    K4 = complete_graph(4)
    M = {(1, 3), (2, 4)}
    value, cycles = compatible_alternating_number(K4, M)
    assert value == 2 and is_compatible_set(K4, M, cycles)
    assert cycles[0].edges & cycles[1].edges == {(1, 3), (2, 4)}
    T = theta_graph(3, 3, 3)
    assert compatible_alternating_number(T, {(1, 3), (2, 4), (5, 6), (7, 8)})[0] == 1


def test_report_with_compatible_numbers():
    rep = forcing_report(complete_graph(4), with_c_prime=True)
    assert (rep.gf, rep.Af, rep.pm_count) == (2, 2, 3)
    assert all(rep.c_prime[M] <= rep.af_per_matching[M][0] for M in rep.af_per_matching)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_numbers_match_definitions(G):
    if not is_matchable(G):
        return
    rep = forcing_report(G, with_c_prime=True)
    assert rep.gf == brute_gf(G)
    for M, (value, witness) in rep.af_per_matching.items():
        assert value == brute_af(G, M)
        assert len(witness) == value and is_anti_forcing_set(G, M, witness)
        assert rep.c_prime[M] <= value
    assert rep.Af == max(v for v, _ in rep.af_per_matching.values())
    assert is_global_forcing_set(G, rep.gf_witness)

"""Perfect matchings: matchability, enumeration, allowed edges, elementary components."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import networkx as nx

from .graph import Edge, Graph, bits, norm_edge


class NotMatchableError(ValueError):
    pass


class CapExceeded(RuntimeError):
    """An enumeration or search passed its configured cap; the answer is unknown."""


DEFAULT_MATCHING_CAP = 10**6


class MatchabilityOracle:
    """Memoised "does G[mask] have a perfect matching" over vertex subsets of one graph."""

    def __init__(self, G: Graph):
        self.adj = G.adj
        self.memo: dict[int, bool] = {0: True}

    def __call__(self, mask: int) -> bool:
        memo = self.memo
        hit = memo.get(mask)
        if hit is not None:
            return hit
        if mask.bit_count() & 1:
            memo[mask] = False
            return False
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        result = False
        for u in bits(self.adj[v] & rest):
            if self(rest & ~(1 << u)):
                result = True
                break
        memo[mask] = result
        return result


_ORACLES: dict[Graph, MatchabilityOracle] = {}


def matchability_oracle(G: Graph) -> MatchabilityOracle:
    orc = _ORACLES.get(G)
    if orc is None:
        if len(_ORACLES) > 4096:
            _ORACLES.clear()
        orc = _ORACLES[G] = MatchabilityOracle(G)
    return orc


def is_matchable(G: Graph, vmask: int | None = None) -> bool:
    """True iff G (or the subgraph induced by ``vmask``) has a perfect matching.

    The empty vertex set is matchable.
    """
    if vmask is None:
        vmask = G.all_vertices_mask
    return matchability_oracle(G)(vmask)


def maximum_matching(G: Graph) -> frozenset:
    """A maximum-cardinality matching (Edmonds' blossom algorithm via networkx)."""
    H = nx.Graph()
    H.add_nodes_from(G.vertices)
    H.add_edges_from(G.edge_list)
    return frozenset(norm_edge(u, v) for u, v in nx.max_weight_matching(H, maxcardinality=True))


def perfect_matching_masks(G: Graph, vmask: int | None = None, cap: int | None = None) -> Iterator[int]:
    """Perfect matchings as edge masks, branching on the lowest uncovered vertex.

    Neighbours are tried in increasing order, so the stream order is fixed.
    """
    if vmask is None:
        vmask = G.all_vertices_mask
    adj = G.adj
    idx = G.edge_index
    oracle = matchability_oracle(G)
    count = 0

    def rec(mask: int, acc: int) -> Iterator[int]:
        nonlocal count
        if not mask:
            count += 1
            if cap is not None and count > cap:
                raise CapExceeded(f"more than {cap} perfect matchings")
            yield acc
            return
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        for u in bits(adj[v] & rest):
            nxt = rest & ~(1 << u)
            if oracle(nxt):
                yield from rec(nxt, acc | 1 << idx[(v, u)])

    if oracle(vmask):
        yield from rec(vmask, 0)


def enumerate_perfect_matchings(G: Graph, cap: int | None = None) -> Iterator[frozenset]:
    for mask in perfect_matching_masks(G, cap=cap):
        yield G.edges_of(mask)


def count_perfect_matchings(G: Graph, cap: int | None = None) -> int:
    return sum(1 for _ in perfect_matching_masks(G, cap=cap))


def is_perfect_matching(G: Graph, M) -> bool:
    covered = 0
    for u, v in M:
        if not G.has_edge(u, v):
            return False
        bit = (1 << u) | (1 << v)
        if covered & bit:
            return False
        covered |= bit
    return covered == G.all_vertices_mask


def require_perfect(G: Graph, M) -> frozenset:
    M = frozenset(norm_edge(*e) for e in M)
    if not is_perfect_matching(G, M):
        raise ValueError("not a perfect matching of the graph")
    return M


def allowed_edge_mask(G: Graph) -> int:
    if not is_matchable(G):
        raise NotMatchableError("graph has no perfect matching")
    full = G.all_vertices_mask
    oracle = matchability_oracle(G)
    mask = 0
    for i, (u, v) in enumerate(G.edge_list):
        if oracle(full & ~((1 << u) | (1 << v))):
            mask |= 1 << i
    return mask


def allowed_edges(G: Graph) -> frozenset:
    """Edges lying in at least one perfect matching."""
    return G.edges_of(allowed_edge_mask(G))


def is_matching_covered(G: Graph) -> bool:
    if not G.is_connected() or not is_matchable(G):
        return False
    return allowed_edge_mask(G) == (1 << G.m) - 1


@dataclass(frozen=True)
class ElementaryDecomposition:
    components: tuple[frozenset, ...]  # edge sets, one per component
    vertex_sets: tuple[tuple[int, ...], ...]
    forbidden: frozenset


def elementary_components(G: Graph) -> ElementaryDecomposition:
    allowed = allowed_edges(G)
    parent = {v: v for v in G.vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in allowed:
        parent[find(u)] = find(v)
    groups: dict[int, list[int]] = {}
    for v in G.vertices:
        groups.setdefault(find(v), []).append(v)
    verts = sorted(groups.values())
    comps = tuple(frozenset(e for e in allowed if find(e[0]) == find(vs[0])) for vs in verts)
    return ElementaryDecomposition(comps, tuple(tuple(vs) for vs in verts), G.edges - allowed)


def matching_from_literal(text: str) -> frozenset:
    """Parse ``"1-2,3-4"`` into an edge set."""
    out = set()
    for part in text.replace(" ", "").split(","):
        if not part:
            continue
        a, _, b = part.partition("-")
        out.add(norm_edge(int(a), int(b)))
    return frozenset(out)


def format_edges(edges) -> str:
    return ",".join(f"{u}-{v}" for u, v in sorted(norm_edge(*e) for e in edges))

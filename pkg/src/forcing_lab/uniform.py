"""Matching covered conformal subgraphs and the strong-uniformity oracle.

A matching covered graph K with a matching covered nice subgraph H (K - V(H)
matchable) can be rebuilt from H by adding one or two odd ears at a time, every
intermediate graph again matching covered and nice.  Read backwards: every
matching covered conformal subgraph of K is reached from K by repeatedly
deleting one or two maximal chains (paths whose interior vertices have degree
2) as long as the remainder stays matching covered and nice.  For a matchable
graph that is not matching covered the search starts from each elementary
component, since every matching covered conformal subgraph lies inside one.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .forcing import Af_value, gf_value
from .graph import Edge, Graph, _canonical_labeling, bits
from .matching import CapExceeded, NotMatchableError, elementary_components, is_matchable, is_matching_covered
from .surgery import chains

DEFAULT_SUBGRAPH_CAP = 10**6


def _chain_masks(G: Graph, emask: int) -> list[tuple[int, int]]:
    """Maximal chains of the subgraph ``emask`` as (edge mask, interior vertex mask)."""
    sub, back = G.induced_by_edges(G.edges_of(emask))
    cs, cycles = chains(sub)
    idx = G.edge_index
    out = []
    for c in cs:
        path = [back[v] for v in c]
        em = 0
        for a, b in zip(path, path[1:]):
            em |= 1 << idx[(a, b) if a < b else (b, a)]
        im = 0
        for v in path[1:-1]:
            im |= 1 << v
        out.append((em, im))
    return out


def _children(G: Graph, emask: int) -> list[int]:
    """Edge masks of the matching covered nice subgraphs one ear step below ``emask``."""
    vmask = G.vertex_mask_of_edges(emask)
    if emask.bit_count() <= 1:
        return []
    sub, _ = G.induced_by_edges(G.edges_of(emask))
    if all(d == 2 for d in sub.degrees()):
        # an even cycle: its nice matching covered subgraphs are single edges
        return [1 << i for i in bits(emask)]
    cs = _chain_masks(G, emask)
    out = []
    seen = set()

    def consider(em: int, im: int) -> bool:
        rest = emask & ~em
        if not rest or rest in seen:
            return rest in seen
        rv = vmask & ~im
        if G.vertex_mask_of_edges(rest) != rv:
            return False
        # nice inside the current subgraph: its leftover interior vertices pair up
        # along the removed chains exactly when each chain has even interior
        if not _nice(G, emask, vmask, rv):
            return False
        H, _ = G.induced_by_edges(G.edges_of(rest))
        if not is_matching_covered(H):
            return False
        seen.add(rest)
        out.append(rest)
        return True

    singles_ok = []
    for em, im in cs:
        singles_ok.append(consider(em, im))
    for (i, a), (j, b) in combinations(enumerate(cs), 2):
        if singles_ok[i] or singles_ok[j]:
            continue
        consider(a[0] | b[0], a[1] | b[1])
    return out


def _nice(G: Graph, emask: int, vmask: int, rv: int) -> bool:
    sub_edges = G.edges_of(emask)
    left = vmask & ~rv
    if not left:
        return True
    H = Graph(G.n, sub_edges)
    return is_matchable(H, left)


def _component_masks(G: Graph) -> list[int]:
    if not is_matchable(G):
        raise NotMatchableError("graph has no perfect matching")
    dec = elementary_components(G)
    return [G.edge_mask(c) for c in dec.components]


def matching_covered_conformal_subgraphs(G: Graph, cap: int = DEFAULT_SUBGRAPH_CAP) -> Iterator[frozenset]:
    """Every matching covered subgraph H with G - V(H) matchable, as edge sets.

    K2's and G itself (when matching covered) are included; each edge set is
    emitted once.  Raises CapExceeded after ``cap`` subgraphs.
    """
    seen: set[int] = set()
    stack = list(reversed(_component_masks(G)))
    while stack:
        em = stack.pop()
        if em in seen:
            continue
        seen.add(em)
        if len(seen) > cap:
            raise CapExceeded(f"more than {cap} matching covered conformal subgraphs")
        yield G.edges_of(em)
        stack.extend(reversed(_children(G, em)))


def brute_force_mc_conformal_subgraphs(G: Graph) -> set[frozenset]:
    """Reference enumeration over all edge subsets (small graphs only)."""
    out = set()
    el = G.edge_list
    full = G.all_vertices_mask
    for mask in range(1, 1 << len(el)):
        vm = G.vertex_mask_of_edges(mask)
        if not is_matchable(G, full & ~vm):
            continue
        H, _ = G.induced_by_edges(G.edges_of(mask))
        if is_matching_covered(H):
            out.add(G.edges_of(mask))
    return out


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UniformityResult:
    uniform: bool
    counterexample: frozenset | None  # edge set of a subgraph with gf != Af
    gf: int | None = None
    Af: int | None = None


class StrongUniformityOracle:
    """Memoised over isomorphism classes; a failing graph reports a minimal failing subgraph.

    The counterexample H returned for a non-uniform graph has gf(H) != Af(H)
    while every proper matching covered conformal subgraph of H is uniform.
    ``cap`` bounds the number of memoised classes; going past it raises
    CapExceeded.
    """

    def __init__(self, cap: int = DEFAULT_SUBGRAPH_CAP):
        self.cap = cap
        # canonical certificate -> (uniform, counterexample edges in canonical positions, gf, Af)
        self.memo: dict = {}
        self.evaluations = 0

    def _key(self, H: Graph):
        cert, order = _canonical_labeling(H)
        return (H.n, cert), order

    def _mc(self, H: Graph) -> tuple[bool, tuple | None, int | None, int | None]:
        """Uniformity of a matching covered H; counterexample in canonical positions."""
        key, order = self._key(H)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        pos = {v: i for i, v in enumerate(order)}
        full = (1 << H.m) - 1
        for child in _children(H, full):
            sub, back = H.induced_by_edges(H.edges_of(child))
            ok, cex, g, a = self._mc(sub)
            if not ok:
                _, sorder = self._key(sub)
                mapped = tuple(sorted(
                    tuple(sorted((pos[back[sorder[i]]], pos[back[sorder[j]]]))) for i, j in cex
                ))
                return self._store(key, (False, mapped, g, a))
        self.evaluations += 1
        g = gf_value(H)
        a = Af_value(H)
        if g == a:
            res = (True, None, g, a)
        else:
            res = (False, tuple(sorted(tuple(sorted((pos[u], pos[v]))) for u, v in H.edges)), g, a)
        return self._store(key, res)

    def _store(self, key, res):
        if len(self.memo) >= self.cap:
            raise CapExceeded(f"more than {self.cap} subgraph classes")
        self.memo[key] = res
        return res

    def check(self, G: Graph) -> UniformityResult:
        for em in _component_masks(G):
            sub, back = G.induced_by_edges(G.edges_of(em))
            ok, cex, g, a = self._mc(sub)
            if not ok:
                _, order = self._key(sub)
                edges = frozenset(
                    tuple(sorted((back[order[i]], back[order[j]]))) for i, j in cex
                )
                return UniformityResult(False, edges, g, a)
        return UniformityResult(True, None)


def is_strongly_uniform(G: Graph, cap: int = DEFAULT_SUBGRAPH_CAP,
                        oracle: StrongUniformityOracle | None = None) -> tuple[bool, frozenset | None]:
    """True iff every matching covered conformal subgraph H of G has gf(H) = Af(H).

    On failure the second value is the edge set of a minimal failing subgraph.
    Raises CapExceeded rather than guessing.
    """
    res = (oracle or StrongUniformityOracle(cap)).check(G)
    return res.uniform, res.counterexample


def is_strongly_uniform_direct(G: Graph) -> tuple[bool, frozenset | None]:
    """Definition-level oracle: every conformal matchable subgraph, via all edge subsets.

    Exponential in |E|; only for cross-checking on small graphs.  Returns the
    first failing subgraph in increasing (size, edge-mask) order.
    """
    if not is_matchable(G):
        raise NotMatchableError("graph has no perfect matching")
    full = G.all_vertices_mask
    el = G.edge_list
    masks = sorted(range(1, 1 << len(el)), key=lambda m: (m.bit_count(), m))
    for mask in masks:
        vm = G.vertex_mask_of_edges(mask)
        if not is_matchable(G, full & ~vm):
            continue
        H = Graph(G.n, G.edges_of(mask))
        if not is_matchable(H, vm):
            continue
        sub, _ = H.induced_by_edges(H.edges)
        if gf_value(sub) != Af_value(sub):
            return False, G.edges_of(mask)
    return True, None

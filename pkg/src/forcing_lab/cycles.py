"""Cycles, conformality, M-alternation and the odd conformal bicycle (BN) test."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .graph import Graph, bits, norm_edge
from .matching import (
    CapExceeded,
    NotMatchableError,
    is_matchable,
    matchability_oracle,
    perfect_matching_masks,
    require_perfect,
)

DEFAULT_CYCLE_CAP = 10**6


@dataclass(frozen=True, order=True)
class Cycle:
    """A simple cycle, stored from its least vertex towards the smaller neighbour."""

    vertices: tuple[int, ...]

    @classmethod
    def from_sequence(cls, seq: Iterable[int]) -> "Cycle":
        seq = list(seq)
        if len(seq) < 3 or len(set(seq)) != len(seq):
            raise ValueError("a cycle needs at least 3 distinct vertices")
        i = seq.index(min(seq))
        seq = seq[i:] + seq[:i]
        if seq[-1] < seq[1]:
            seq = [seq[0]] + seq[:0:-1]
        return cls(tuple(seq))

    def __len__(self) -> int:
        return len(self.vertices)

    @cached_property
    def edges(self) -> frozenset:
        vs = self.vertices
        return frozenset(norm_edge(vs[i - 1], vs[i]) for i in range(len(vs)))

    @property
    def is_odd(self) -> bool:
        return len(self.vertices) % 2 == 1

    def vertex_mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m

    def __str__(self) -> str:
        return "-".join(map(str, self.vertices + self.vertices[:1]))


def cycle_masks(G: Graph, cap: int | None = DEFAULT_CYCLE_CAP) -> list[tuple[int, int, tuple[int, ...]]]:
    """All simple cycles as ``(vertex mask, edge mask, vertex tuple)``.

    Anchored at the least vertex, extended through larger vertices only, with
    reflections removed by requiring second vertex < last vertex.
    """
    cached = _CYCLE_CACHE.get(G)
    if cached is not None:
        return cached
    adj = G.adj
    idx = G.edge_index
    out: list[tuple[int, int, tuple[int, ...]]] = []
    for s in G.vertices:
        higher = G.all_vertices_mask & ~((1 << (s + 1)) - 1)
        path = [s]

        def extend(v: int, vmask: int, emask: int) -> None:
            nbrs = adj[v]
            if len(path) >= 3 and nbrs >> s & 1 and path[1] < v:
                out.append((vmask, emask | 1 << idx[norm_edge(v, s)], tuple(path)))
                if cap is not None and len(out) > cap:
                    raise CapExceeded(f"more than {cap} cycles")
            for w in bits(nbrs & higher & ~vmask):
                path.append(w)
                extend(w, vmask | 1 << w, emask | 1 << idx[norm_edge(v, w)])
                path.pop()

        extend(s, 1 << s, 0)
    if len(_CYCLE_CACHE) > 4096:
        _CYCLE_CACHE.clear()
    _CYCLE_CACHE[G] = out
    return out


_CYCLE_CACHE: dict[Graph, list] = {}


def enumerate_cycles(G: Graph, cap: int | None = DEFAULT_CYCLE_CAP) -> Iterator[Cycle]:
    for _, _, vs in cycle_masks(G, cap):
        yield Cycle(vs)


def is_conformal_subgraph(G: Graph, edges: Iterable, vertices: Iterable[int] = ()) -> bool:
    """True iff G minus the vertices of the subgraph (edges plus extra vertices) is matchable."""
    vmask = 0
    for u, v in edges:
        if not G.has_edge(u, v):
            raise ValueError(f"{u}-{v} is not an edge of the host graph")
        vmask |= (1 << u) | (1 << v)
    for v in vertices:
        if not 1 <= v <= G.n:
            raise ValueError(f"vertex {v} not in host graph")
        vmask |= 1 << v
    return is_matchable(G, G.all_vertices_mask & ~vmask)


def conformal_cycle_masks(G: Graph, cap: int | None = DEFAULT_CYCLE_CAP) -> list[tuple[int, int, tuple[int, ...]]]:
    if not is_matchable(G):
        raise NotMatchableError("graph has no perfect matching")
    oracle = matchability_oracle(G)
    full = G.all_vertices_mask
    return [c for c in cycle_masks(G, cap) if not (len(c[2]) & 1) and oracle(full & ~c[0])]


def conformal_cycles(G: Graph, cap: int | None = DEFAULT_CYCLE_CAP) -> list[Cycle]:
    """Cycles C with G - V(C) matchable (the empty remainder counts)."""
    return [Cycle(vs) for _, _, vs in conformal_cycle_masks(G, cap)]


def _alternating_masks(G: Graph, mmask: int, cycles) -> list[tuple[int, int, tuple[int, ...]]]:
    # a cycle is M-alternating iff exactly half its edges lie in M and M covers
    # its vertices from inside the cycle
    evm = G.edge_vertex_masks
    out = []
    for vm, em, vs in cycles:
        if len(vs) & 1:
            continue
        inside = em & mmask
        if inside.bit_count() * 2 != len(vs):
            continue
        cov = 0
        for i in bits(inside):
            cov |= evm[i]
        if cov == vm:
            out.append((vm, em, vs))
    return out


def alternating_cycle_masks(G: Graph, mmask: int, cap: int | None = DEFAULT_CYCLE_CAP):
    return _alternating_masks(G, mmask, cycle_masks(G, cap))


def alternating_cycles(G: Graph, M, cap: int | None = DEFAULT_CYCLE_CAP) -> list[Cycle]:
    """Cycles whose edges alternate between M and E(G) - M."""
    M = require_perfect(G, M)
    return [Cycle(vs) for _, _, vs in alternating_cycle_masks(G, G.edge_mask(M), cap)]


def conformal_cycles_by_alternation(G: Graph, cap: int | None = DEFAULT_CYCLE_CAP) -> list[Cycle]:
    """Conformal cycles recomputed as the union of M-alternating cycles over all M.

    Independent of the remainder-matchability route; used as a cross-check.
    """
    if not is_matchable(G):
        raise NotMatchableError("graph has no perfect matching")
    cycles = cycle_masks(G, cap)
    found: set[tuple[int, ...]] = set()
    for mmask in perfect_matching_masks(G):
        for _, _, vs in _alternating_masks(G, mmask, cycles):
            found.add(vs)
    return sorted(Cycle(vs) for vs in found)


@dataclass(frozen=True)
class BicycleWitness:
    first: Cycle
    second: Cycle
    remainder_matching: frozenset


def odd_cycle_vertex_sets(G: Graph) -> list[int]:
    """Vertex masks S (|S| odd, >= 3) such that G[S] has a Hamilton cycle.

    Subset dynamic programme over paths that start at the least vertex of S.
    """
    adj = G.adj
    n = G.n
    reach: dict[int, int] = {}
    out = []
    for s in range(1, n + 1):
        sb = 1 << s
        higher = G.all_vertices_mask & ~((sb << 1) - 1)
        reach = {sb: sb}
        # masks grow one vertex at a time; process by size
        frontier = [sb]
        size = 1
        while frontier:
            nxt_masks = {}
            for mask in frontier:
                ends = reach[mask]
                for v in bits(ends):
                    for w in bits(adj[v] & higher & ~mask):
                        nm = mask | 1 << w
                        nxt_masks[nm] = nxt_masks.get(nm, 0) | 1 << w
            size += 1
            for nm, ends in nxt_masks.items():
                reach[nm] = reach.get(nm, 0) | ends
                if size >= 3 and size & 1 and ends & adj[s]:
                    out.append(nm)
            frontier = list(nxt_masks)
    return out


def _least_cycle_on(G: Graph, vmask: int) -> Cycle:
    """Lexicographically least Hamilton cycle of G[vmask] in canonical form."""
    vs = list(bits(vmask))
    s = vs[0]
    adj = G.adj
    k = len(vs)
    best = None

    def rec(path: list[int], used: int) -> None:
        nonlocal best
        if best is not None:
            return
        if len(path) == k:
            if adj[path[-1]] >> s & 1 and path[1] < path[-1]:
                best = Cycle(tuple(path))
            return
        for w in bits(adj[path[-1]] & vmask & ~used):
            path.append(w)
            rec(path, used | 1 << w)
            path.pop()

    rec([s], 1 << s)
    return best


def odd_conformal_bicycle(G: Graph, cap: int | None = DEFAULT_CYCLE_CAP) -> BicycleWitness | None:
    """The least odd conformal bicycle, or None.

    Candidate pairs of vertex sets are ordered by (|S1|, S1 as a sorted tuple,
    |S2|, S2); the reported cycles are the lexicographically least Hamilton
    cycles on those sets.
    """
    if not is_matchable(G):
        raise NotMatchableError("graph has no perfect matching")
    if G.n > 16:
        return _odd_bicycle_by_enumeration(G, cap)
    key = lambda m: (m.bit_count(), tuple(bits(m)))
    odd = sorted(set(odd_cycle_vertex_sets(G)), key=key)
    oracle = matchability_oracle(G)
    full = G.all_vertices_mask
    n = G.n
    for i, a in enumerate(odd):
        la = a.bit_count()
        if 2 * la > n:
            break
        for b in odd[i + 1:]:
            if la + b.bit_count() > n:
                break
            if a & b:
                continue
            rest = full & ~(a | b)
            if oracle(rest):
                M = next(perfect_matching_masks(G, rest))
                return BicycleWitness(_least_cycle_on(G, a), _least_cycle_on(G, b), G.edges_of(M))
    return None


def _odd_bicycle_by_enumeration(G: Graph, cap: int | None = DEFAULT_CYCLE_CAP) -> BicycleWitness | None:
    """Same question answered from the full cycle list; used for large graphs and cross-checks."""
    if not is_matchable(G):
        raise NotMatchableError("graph has no perfect matching")
    odd = sorted(
        ((len(vs), Cycle.from_sequence(vs).vertices, vm) for vm, _, vs in cycle_masks(G, cap) if len(vs) & 1),
    )
    if len(odd) < 2:
        return None
    oracle = matchability_oracle(G)
    full = G.all_vertices_mask
    n = G.n
    for i, (l1, vs1, vm1) in enumerate(odd):
        if 2 * l1 > n:
            break
        for l2, vs2, vm2 in odd[i + 1:]:
            if l1 + l2 > n:
                break
            if vm1 & vm2:
                continue
            rest = full & ~(vm1 | vm2)
            if oracle(rest):
                M = next(perfect_matching_masks(G, rest))
                return BicycleWitness(Cycle(vs1), Cycle(vs2), G.edges_of(M))
    return None


def is_bn_graph(G: Graph) -> tuple[bool, BicycleWitness | None]:
    """Birkhoff-von Neumann test: no pair of disjoint odd cycles with matchable remainder."""
    w = odd_conformal_bicycle(G)
    return w is None, w

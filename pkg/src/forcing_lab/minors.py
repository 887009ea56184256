"""Conformal minors: find a bisubdivision of a pattern sitting in a host as a conformal subgraph.

A bisubdivision turns a pattern chain of k edges (interior vertices of degree
2) into a host path whose length is at least k and has the parity of k.  The
search maps the pattern's branch vertices (degree != 2) onto host vertices and
routes its chains as internally disjoint host paths, testing conformality of
the finished union only.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Edge, Graph, bipartition, bits, cyclomatic_number, norm_edge
from .matching import CapExceeded, is_matchable
from .surgery import chains, recognize_bisubdivision

DEFAULT_NODE_BUDGET = 10**7


class BudgetExceeded(CapExceeded):
    """The search node budget ran out before the search space was exhausted."""


@dataclass(frozen=True)
class MinorEmbedding:
    branch_map: dict  # pattern vertex -> host vertex
    path_map: dict  # pattern edge -> host vertex path (odd length)

    @property
    def union_edges(self) -> frozenset:
        return frozenset(
            norm_edge(a, b) for p in self.path_map.values() for a, b in zip(p, p[1:])
        )

    @property
    def union_vertices(self) -> frozenset:
        return frozenset(v for p in self.path_map.values() for v in p) | frozenset(self.branch_map.values())


def validate_embedding(G: Graph, J: Graph, emb: MinorEmbedding) -> bool:
    """Re-check a witness from scratch: odd disjoint paths, images of J, conformal union."""
    if set(emb.path_map) != set(J.edges):
        return False
    bm = emb.branch_map
    if sorted(bm) != list(J.vertices) or len(set(bm.values())) != J.n:
        return False
    images = set(bm.values())
    interior_seen: set[int] = set()
    used_edges: set[Edge] = set()
    for (a, b), path in emb.path_map.items():
        if len(path) < 2 or (len(path) - 1) % 2 == 0:
            return False
        if {path[0], path[-1]} != {bm[a], bm[b]}:
            return False
        for u, v in zip(path, path[1:]):
            e = norm_edge(u, v)
            if not G.has_edge(u, v) or e in used_edges:
                return False
            used_edges.add(e)
        inner = path[1:-1]
        if len(set(inner)) != len(inner) or set(inner) & images or set(inner) & interior_seen:
            return False
        interior_seen |= set(inner)
    vmask = 0
    for v in images | interior_seen:
        vmask |= 1 << v
    return is_matchable(G, G.all_vertices_mask & ~vmask)


@dataclass
class _Skeleton:
    branch: list[int]  # pattern branch vertices in search order
    chains: list[tuple[int, ...]]  # pattern vertex sequences between branch vertices
    cycles: list[tuple[int, ...]]  # pattern components that are bare cycles


def _skeleton(J: Graph) -> _Skeleton:
    cs, cycles = chains(J)
    deg = [0] + J.degrees()
    branch = [v for v in J.vertices if deg[v] != 2]
    # degree-descending, ties by label; then reorder so each vertex follows a neighbour when possible
    branch.sort(key=lambda v: (-deg[v], v))
    nbrs: dict[int, set[int]] = {v: set() for v in branch}
    for c in cs:
        nbrs[c[0]].add(c[-1])
        nbrs[c[-1]].add(c[0])
    order: list[int] = []
    remaining = list(branch)
    while remaining:
        pick = next((v for v in remaining if nbrs[v] & set(order)), remaining[0])
        order.append(pick)
        remaining.remove(pick)
    return _Skeleton(order, cs, cycles)


def _quick_reject(G: Graph, J: Graph) -> bool:
    if J.n > G.n or J.m > G.m:
        return True
    dg = sorted(G.degrees(), reverse=True)
    dj = sorted((d for d in J.degrees() if d >= 3), reverse=True)
    if any(dj[i] > dg[i] for i in range(len(dj))):
        return True
    if bipartition(G) is not None and bipartition(J) is None:
        return True
    # bisubdivision keeps |E| - |V|; a subgraph cannot exceed the host's per component
    if J.m - J.n > G.m - G.n + _component_count(G) - _component_count(J):
        return True
    return False


def _component_count(G: Graph) -> int:
    from .graph import components

    return len(components(G))


def find_conformal_minor(G: Graph, J: Graph, budget: int = DEFAULT_NODE_BUDGET) -> MinorEmbedding | None:
    """A conformal bisubdivision of J inside G, or None when none exists.

    Raises BudgetExceeded when more than ``budget`` search nodes are needed;
    "not found" is only reported after exhausting the search.
    """
    if _quick_reject(G, J):
        return None
    sk = _skeleton(J)
    colour = bipartition(G)
    adj = G.adj
    full = G.all_vertices_mask
    nodes = [0]

    def tick() -> None:
        nodes[0] += 1
        if nodes[0] > budget:
            raise BudgetExceeded(f"minor search exceeded {budget} nodes")

    # pattern chains grouped by the later endpoint in search order
    pos = {v: i for i, v in enumerate(sk.branch)}
    by_vertex: dict[int, list[tuple[int, ...]]] = {v: [] for v in sk.branch}
    for c in sk.chains:
        a, b = c[0], c[-1]
        if pos[a] > pos[b]:
            c = c[::-1]
        # oriented so c[-1] is the later one
        by_vertex[c[-1]].append(c)
    jdeg = [0] + J.degrees()
    fmap: dict[int, int] = {}
    routes: dict[tuple[int, ...], tuple[int, ...]] = {}

    def paths(x: int, y: int, k: int, used: int):
        """Simple x-y paths of length >= k with k's parity, interior avoiding ``used``."""
        parity = k & 1
        if colour is not None and ((colour[x] != colour[y]) != bool(parity)):
            return
        maxlen = (full & ~used).bit_count() + 1
        for length in range(k, maxlen + 1, 2):
            # iterative deepening over the exact length
            stack = [(x, (x,), used | 1 << x)]
            while stack:
                cur, path, mask = stack.pop()
                steps = len(path) - 1
                if steps == length - 1:
                    if adj[cur] >> y & 1:
                        tick()
                        yield path + (y,)
                    continue
                for w in bits(adj[cur] & ~mask & ~(1 << y)):
                    stack.append((w, path + (w,), mask | 1 << w))

    def route(chs: list[tuple[int, ...]], i: int, used: int, used_edges: set):
        """Route chains chs[i:] (endpoints already mapped); yields final used mask."""
        if i == len(chs):
            yield used
            return
        c = chs[i]
        x, y = fmap[c[0]], fmap[c[-1]]
        k = len(c) - 1
        if x == y:
            candidates = (
                (x,) + p
                for w in bits(adj[x] & ~used)
                for p in paths(w, x, k - 1, used | 1 << w)
                if len(p) > 2
            )
        else:
            candidates = paths(x, y, k, used | 1 << y)
        for p in candidates:
            pe = {norm_edge(a, b) for a, b in zip(p, p[1:])}
            if pe & used_edges:
                continue
            inner = 0
            for v in p[1:-1]:
                inner |= 1 << v
            routes[c] = p
            yield from route(chs, i + 1, used | inner, used_edges | pe)
            del routes[c]

    cycle_routes: dict[tuple[int, ...], tuple[int, ...]] = {}

    def place_cycles(i: int, used: int):
        if i == len(sk.cycles):
            yield used
            return
        cyc = sk.cycles[i]
        k = len(cyc)
        for s in bits(full & ~used):
            for t in bits(adj[s] & ~used):
                if t < s:
                    continue
                # cycle = edge s-t plus a path t..s of length >= k-1 with parity of k-1
                for p in paths(t, s, k - 1, used | 1 << s | 1 << t):
                    if len(p) == 2:
                        continue
                    inner = 0
                    for v in p:
                        inner |= 1 << v
                    cycle_routes[cyc] = (s,) + p[:-1]
                    yield from place_cycles(i + 1, used | inner)
                    del cycle_routes[cyc]

    def finish(used: int) -> bool:
        tick()
        if (full & ~used).bit_count() & 1:
            return False
        return is_matchable(G, full & ~used)

    def extend(i: int, used: int, used_edges: set) -> bool:
        if i == len(sk.branch):
            for u2 in place_cycles(0, used):
                if finish(u2):
                    return True
            return False
        a = sk.branch[i]
        for x in bits(full & ~used):
            if adj[x].bit_count() < jdeg[a]:
                continue
            tick()
            fmap[a] = x
            nu = used | 1 << x
            for u2 in route(by_vertex[a], 0, nu, used_edges):
                # collect the edges added by these routes
                added = set()
                for c in by_vertex[a]:
                    p = routes[c]
                    added |= {norm_edge(p_, q_) for p_, q_ in zip(p, p[1:])}
                if extend(i + 1, u2, used_edges | added):
                    return True
            del fmap[a]
        return False

    if not extend(0, 0, set()):
        return None
    path_map: dict[Edge, tuple[int, ...]] = {}
    for c, p in routes.items():
        _split_into_edges(c, p, path_map)
    for cyc, hp in cycle_routes.items():
        closed = cyc + cyc[:1]
        _split_into_edges(closed, hp + hp[:1], path_map)
    branch_map = dict(fmap)
    for c, p in routes.items():
        _place_interior(c, p, branch_map)
    for cyc, hp in cycle_routes.items():
        closed = cyc + cyc[:1]
        branch_map[cyc[0]] = hp[0]
        _place_interior(closed, hp + hp[:1], branch_map)
    return MinorEmbedding(branch_map, path_map)


def _split_into_edges(jpath: Sequence[int], hpath: Sequence[int], out: dict) -> None:
    """Give the first pattern edge of a chain all the extra length, the rest length 1."""
    k = len(jpath) - 1
    extra = len(hpath) - len(jpath)
    pos = 0
    for i in range(k):
        step = 1 + (extra if i == 0 else 0)
        seg = tuple(hpath[pos:pos + step + 1])
        e = norm_edge(jpath[i], jpath[i + 1])
        out[e] = seg if jpath[i] == e[0] else seg[::-1]
        pos += step


def _place_interior(jpath: Sequence[int], hpath: Sequence[int], branch_map: dict) -> None:
    extra = len(hpath) - len(jpath)
    # pattern vertex jpath[i] (i >= 1) sits at host position i + extra
    for i in range(1, len(jpath) - 1):
        branch_map[jpath[i]] = hpath[i + extra]


# ---------------------------------------------------------------------------

def brute_force_conformal_minor(G: Graph, J: Graph) -> bool:
    """Reference oracle: try every edge subset H of G with G - V(H) matchable."""
    full = G.all_vertices_mask
    target = J.m - J.n
    for mask in range(1, 1 << G.m):
        if mask.bit_count() < J.m:
            continue
        vm = G.vertex_mask_of_edges(mask)
        if mask.bit_count() - vm.bit_count() != target:
            continue
        if not is_matchable(G, full & ~vm):
            continue
        H, _ = G.induced_by_edges(G.edges_of(mask))
        if recognize_bisubdivision(H, J) is not None:
            return True
    return False


@dataclass
class ScreenResult:
    found: list = field(default_factory=list)  # (name, MinorEmbedding)
    unknown: list = field(default_factory=list)  # names whose search ran out of budget

    @property
    def names(self) -> list[str]:
        return [n for n, _ in self.found]


def screen_catalog(G: Graph, entries: Iterable, budget: int = DEFAULT_NODE_BUDGET,
                   stop_at_first: bool = False) -> ScreenResult:
    """Search every catalog pattern in G; budget exhaustion is recorded per entry."""
    res = ScreenResult()
    for entry in entries:
        name, J = (entry.name, entry.graph) if hasattr(entry, "graph") else entry
        try:
            emb = find_conformal_minor(G, J, budget)
        except BudgetExceeded:
            res.unknown.append(name)
            continue
        if emb is not None:
            res.found.append((name, emb))
            if stop_at_first:
                break
    return res

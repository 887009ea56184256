"""Isomorph-free exhaustive graph generation and seeded random pools.

Two generators:

* ``connected_graphs(n)`` grows every connected graph from one with a vertex
  fewer (a connected graph always has a non-cut vertex), deduplicating by
  canonical form.
* ``matching_covered_graphs(max_n)`` grows matching covered graphs from K2 by
  adding one or two odd ears at a time.  Every matching covered graph has such
  an ear decomposition with matching covered, conformal intermediate graphs,
  so filters closed under conformal subgraphs (bipartite, BN) can prune
  during growth.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable

from .cycles import is_bn_graph
from .graph import Graph, canonical_form, is_bipartite
from .matching import is_matchable, is_matching_covered

EXHAUSTIVE_BOUND = 10


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """All connected graphs on exactly n vertices up to isomorphism."""
    if n == 1:
        return (Graph(1),)
    seen: dict = {}
    for G in connected_graphs(n - 1):
        base = list(G.edges)
        for r in range(1, n):
            for nbrs in combinations(range(1, n), r):
                H = Graph(n, base + [(v, n) for v in nbrs])
                key = canonical_form(H)
                if key not in seen:
                    seen[key] = H
    return tuple(seen[k] for k in sorted(seen))


def _with_ears(G: Graph, ears: Iterable[tuple[int, int, int]]) -> Graph:
    edges = list(G.edges)
    nxt = G.n + 1
    for u, v, length in ears:
        prev = u
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, v))
    return Graph(nxt - 1, edges)


def matching_covered_graphs(
    max_n: int,
    bipartite_only: bool = False,
    bn_only: bool = False,
) -> tuple[Graph, ...]:
    """Matching covered graphs with at most ``max_n`` vertices, up to isomorphism.

    K2 is included.  Order: by (n, m, canonical form).
    """
    if max_n > EXHAUSTIVE_BOUND + 4:
        raise ValueError(f"exhaustive generation bound exceeded ({max_n})")
    return _mc_cached(max_n, bipartite_only, bn_only)


@lru_cache(maxsize=None)
def _mc_cached(max_n: int, bipartite_only: bool, bn_only: bool) -> tuple[Graph, ...]:
    def verdict(H: Graph) -> str:
        # "filter" failures are inherited by every graph containing H as a
        # conformal subgraph, so only "mc" failures are worth a second ear
        if bipartite_only and not is_bipartite(H):
            return "filter"
        if not is_matching_covered(H):
            return "mc"
        if bn_only and not is_bn_graph(H)[0]:
            return "filter"
        return "ok"

    k2 = Graph(2, [(1, 2)])
    found: dict = {canonical_form(k2): k2}
    rejected: dict = {}
    queue = [k2]
    while queue:
        G = queue.pop()
        room = max_n - G.n
        failed = []
        for u, v in combinations(G.vertices, 2):
            for length in range(1, room + 2, 2):
                if length == 1 and G.has_edge(u, v):
                    continue
                ear = (u, v, length)
                H = _with_ears(G, [ear])
                key = canonical_form(H)
                if key in found:
                    continue
                why = rejected.get(key)
                if why is None:
                    why = verdict(H)
                    if why == "ok":
                        found[key] = H
                        queue.append(H)
                        continue
                    rejected[key] = why
                if why == "mc":
                    failed.append(ear)
        if bipartite_only:
            # bipartite matching covered graphs grow one ear at a time
            continue
        # a double ear is only needed when neither ear works alone
        for i, a in enumerate(failed):
            for b in failed[i + 1:]:
                if (a[2] - 1) + (b[2] - 1) > room:
                    continue
                if a[2] == 1 and b[2] == 1 and {a[0], a[1]} == {b[0], b[1]}:
                    continue
                H = _with_ears(G, [a, b])
                key = canonical_form(H)
                if key in found or key in rejected:
                    continue
                why = verdict(H)
                if why == "ok":
                    found[key] = H
                    queue.append(H)
                else:
                    rejected[key] = why
    return tuple(found[k] for k in sorted(found))


# ---------------------------------------------------------------------------

FILTERS: dict[str, Callable[[Graph], bool]] = {
    "bipartite": is_bipartite,
    "nonbipartite": lambda G: not is_bipartite(G),
    "mc": is_matching_covered,
    "matchable": is_matchable,
    "connected": Graph.is_connected,
    "bn": lambda G: is_matchable(G) and is_bn_graph(G)[0],
}


@dataclass
class PoolSpec:
    kind: str  # "exhaustive" or "random"
    n: int
    filters: tuple[str, ...] = ()
    min_n: int = 1
    p: float = 0.5
    count: int = 0
    seed: int | None = None

    def describe(self) -> str:
        f = "+".join(self.filters) or "none"
        if self.kind == "exhaustive":
            return f"exhaustive:n={self.n},min_n={self.min_n},filter={f}"
        return f"random:n={self.n},p={self.p},count={self.count},seed={self.seed},filter={f}"


@dataclass
class GraphPool:
    spec: PoolSpec
    members: list[Graph] = field(default_factory=list)

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def parse_pool_spec(text: str) -> PoolSpec:
    """``exhaustive:n=8,filter=bipartite+mc`` or ``random:n=10,p=0.4,count=100,seed=7``."""
    kind, _, rest = text.partition(":")
    if kind not in ("exhaustive", "random"):
        raise ValueError(f"unknown pool kind {kind!r}")
    opts = {}
    for part in rest.split(","):
        if not part:
            continue
        k, _, v = part.partition("=")
        opts[k.strip()] = v.strip()
    filters = tuple(f for f in opts.pop("filter", "").split("+") if f)
    for f in filters:
        if f not in FILTERS:
            raise ValueError(f"unknown filter {f!r}")
    spec = PoolSpec(kind=kind, n=int(opts.pop("n")), filters=filters)
    if "min_n" in opts:
        spec.min_n = int(opts.pop("min_n"))
    if kind == "random":
        spec.p = float(opts.pop("p", 0.5))
        spec.count = int(opts.pop("count", 100))
        if "seed" not in opts:
            raise ValueError("random pools need a seed")
        spec.seed = int(opts.pop("seed"))
    if opts:
        raise ValueError(f"unknown pool options {sorted(opts)}")
    return spec


def _passes(G: Graph, filters: tuple[str, ...]) -> bool:
    return all(FILTERS[f](G) for f in filters)


def build_pool(spec: PoolSpec | str, bound: int = EXHAUSTIVE_BOUND) -> GraphPool:
    """Deterministic pool for a spec; random pools are reproducible from the seed."""
    if isinstance(spec, str):
        spec = parse_pool_spec(spec)
    members: list[Graph] = []
    if spec.kind == "exhaustive":
        if spec.n > bound:
            raise ValueError(f"exhaustive pools are limited to n <= {bound}")
        if "mc" in spec.filters:
            source = matching_covered_graphs(
                spec.n,
                bipartite_only="bipartite" in spec.filters,
                bn_only="bn" in spec.filters,
            )
        elif spec.n <= 8:
            source = [G for k in range(1, spec.n + 1) for G in connected_graphs(k)]
        else:
            raise ValueError("exhaustive pools beyond 8 vertices need the 'mc' filter")
        members = [G for G in source if G.n >= spec.min_n and _passes(G, spec.filters)]
    else:
        rng = random.Random(spec.seed)
        # even orders only when a perfect matching is required
        step = 2 if {"matchable", "mc", "bn"} & set(spec.filters) else 1
        lo = max(spec.min_n, step)
        lo += (lo % step)
        sizes = list(range(lo, spec.n + 1, step)) or [spec.n]
        attempts = 0
        while len(members) < spec.count:
            attempts += 1
            if attempts > 1000 * max(spec.count, 1):
                raise RuntimeError("random pool filters reject nearly everything")
            n = rng.choice(sizes)
            edges = [(u, v) for u, v in combinations(range(1, n + 1), 2) if rng.random() < spec.p]
            G = Graph(n, edges)
            if _passes(G, spec.filters):
                members.append(G)
    return GraphPool(spec, members)

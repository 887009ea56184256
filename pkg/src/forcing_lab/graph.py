"""Simple undirected graphs on vertices 1..n, plus parsing, coloring and isomorphism.

Edges are stored canonically as ``(u, v)`` with ``u < v``.  Adjacency is kept as
bit masks (bit ``v`` set in ``adj[u]`` when ``uv`` is an edge) so that the
exponential searches elsewhere in the package can work on integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Raised for malformed graph files; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        canon = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {u}-{v} has an endpoint outside 1..{n}")
            e = norm_edge(u, v)
            if e in canon:
                raise ValueError(f"duplicate edge {e[0]}-{e[1]}")
            canon.add(e)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(canon))

    def __repr__(self) -> str:
        body = " ".join(f"{u}-{v}" for u, v in self.edge_list)
        return f"Graph(n={self.n}, edges=[{body}])"

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edge_list)}

    @cached_property
    def adj(self) -> tuple[int, ...]:
        rows = [0] * (self.n + 1)
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(rows)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def all_vertices_mask(self) -> int:
        return ((1 << (self.n + 1)) - 1) & ~1

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in self.vertices]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    # edge-set <-> bit mask over edge_list indices
    def edge_mask(self, edges: Iterable[Edge]) -> int:
        idx = self.edge_index
        mask = 0
        for u, v in edges:
            e = norm_edge(u, v)
            if e not in idx:
                raise ValueError(f"{e[0]}-{e[1]} is not an edge of the graph")
            mask |= 1 << idx[e]
        return mask

    def edges_of(self, mask: int) -> frozenset:
        el = self.edge_list
        return frozenset(el[i] for i in bits(mask))

    @cached_property
    def edge_vertex_masks(self) -> tuple[int, ...]:
        return tuple((1 << u) | (1 << v) for u, v in self.edge_list)

    def vertex_mask_of_edges(self, emask: int) -> int:
        vm = 0
        evm = self.edge_vertex_masks
        for i in bits(emask):
            vm |= evm[i]
        return vm

    # derived graphs
    def add_edges(self, extra: Iterable[Edge]) -> "Graph":
        return Graph(self.n, list(self.edges) + list(extra))

    def remove_edges(self, gone: Iterable[Edge]) -> "Graph":
        drop = {norm_edge(*e) for e in gone}
        return Graph(self.n, [e for e in self.edges if e not in drop])

    def relabel(self, mapping: dict[int, int]) -> "Graph":
        """Apply a bijection of 1..n to the vertex labels."""
        return Graph(self.n, [(mapping[u], mapping[v]) for u, v in self.edges])

    def induced_by_edges(self, edges: Iterable[Edge]) -> tuple["Graph", dict[int, int]]:
        """The subgraph formed by ``edges``, relabelled to 1..k in increasing order.

        Returns the graph and the map from new labels back to old ones.
        """
        edges = [norm_edge(*e) for e in edges]
        verts = sorted({v for e in edges for v in e})
        fwd = {v: i + 1 for i, v in enumerate(verts)}
        sub = Graph(max(len(verts), 1), [(fwd[u], fwd[v]) for u, v in edges])
        return sub, {i: v for v, i in fwd.items()}

    def is_connected(self) -> bool:
        return len(components(self)) == 1


def components(G: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    seen = 0
    out = []
    for s in G.vertices:
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= G.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(bits(comp)))
    return out


def is_connected_mask(adj: tuple[int, ...], vmask: int) -> bool:
    """Whether the vertices in ``vmask`` induce a connected graph under ``adj``."""
    if not vmask:
        return True
    start = vmask & -vmask
    comp = start
    frontier = start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & vmask & ~comp
        comp |= frontier
    return comp == vmask


# ---------------------------------------------------------------------------
# file format

def parse_graph(text: str) -> Graph:
    """Parse the line-oriented ``p n m`` / ``e u v`` format."""
    header = None
    edges: list[Edge] = []
    seen: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise GraphFormatError("second header line", lineno)
            if len(parts) != 3:
                raise GraphFormatError("header must be 'p <n> <m>'", lineno)
            try:
                header = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise GraphFormatError("header counts must be integers", lineno) from None
            if header[0] < 1 or header[1] < 0:
                raise GraphFormatError("header counts out of range", lineno)
        elif parts[0] == "e":
            if header is None:
                raise GraphFormatError("edge line before header", lineno)
            if len(parts) != 3:
                raise GraphFormatError("edge line must be 'e <u> <v>'", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError("edge endpoints must be integers", lineno) from None
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}", lineno)
            if not (1 <= u <= header[0] and 1 <= v <= header[0]):
                raise GraphFormatError(f"endpoint out of range 1..{header[0]}", lineno)
            e = norm_edge(u, v)
            if e in seen:
                raise GraphFormatError(f"duplicate edge {e[0]}-{e[1]} (first on line {seen[e]})", lineno)
            seen[e] = lineno
            edges.append(e)
        else:
            raise GraphFormatError(f"unrecognised line {line!r}", lineno)
    if header is None:
        raise GraphFormatError("missing 'p <n> <m>' header")
    if len(edges) != header[1]:
        raise GraphFormatError(f"header announces {header[1]} edges, found {len(edges)}")
    return Graph(header[0], edges)


def serialize_graph(G: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" if c else "#" for c in comments]
    lines.append(f"p {G.n} {G.m}")
    lines.extend(f"e {u} {v}" for u, v in G.edge_list)
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


# ---------------------------------------------------------------------------
# coloring and counts

def bipartition(G: Graph) -> dict[int, int] | None:
    """Proper 2-coloring (0 = black, 1 = white) or None if G has an odd cycle.

    Each component's least vertex is black.
    """
    color: dict[int, int] = {}
    for comp in components(G):
        root = comp[0]
        color[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for w in bits(G.adj[v]):
                if w not in color:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def is_bipartite(G: Graph) -> bool:
    return bipartition(G) is not None


def cyclomatic_number(G: Graph) -> int:
    if not G.is_connected():
        raise ValueError("cyclomatic number is defined here for connected graphs only")
    return G.m - G.n + 1


# ---------------------------------------------------------------------------
# canonical form and isomorphism

def _refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    """Equitable refinement of an ordered partition given as vertex masks."""
    changed = True
    while changed:
        changed = False
        new_cells: list[int] = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                new_cells.append(cell)
                continue
            groups: dict[tuple, int] = {}
            for v in bits(cell):
                key = tuple((adj[v] & c).bit_count() for c in cells)
                groups[key] = groups.get(key, 0) | (1 << v)
            if len(groups) > 1:
                changed = True
                for key in sorted(groups):
                    new_cells.append(groups[key])
            else:
                new_cells.append(cell)
        cells = new_cells
    return cells


def _certificate(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        r = 0
        for w in bits(adj[v]):
            r |= 1 << pos[w]
        rows.append(r)
    return tuple(rows)


def canonical_form(G: Graph) -> tuple[int, tuple[int, ...]]:
    """A complete isomorphism invariant: equal for G, H iff G and H are isomorphic.

    Individualisation-refinement over equitable partitions, keeping the least
    certificate among all leaves.  The only automorphism pruning is skipping
    twins of an already individualised vertex.
    """
    return (G.n, _canonical_labeling(G)[0])


def _canonical_labeling(G: Graph) -> tuple[tuple[int, ...], list[int]]:
    adj = G.adj
    start = [G.all_vertices_mask]
    best: list = [None, None]

    def search(cells: list[int]) -> None:
        cells = _refine(adj, cells)
        for i, c in enumerate(cells):
            if c & (c - 1):
                break
        else:
            order = [c.bit_length() - 1 for c in cells]
            cert = _certificate(adj, order)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, order
            return
        cell = cells[i]
        tried: list[int] = []
        for v in bits(cell):
            # swapping twin vertices is an automorphism fixing every other vertex
            if any((adj[v] & ~(1 << u)) == (adj[u] & ~(1 << v)) for u in tried):
                continue
            tried.append(v)
            bit = 1 << v
            search(cells[:i] + [bit, cell & ~bit] + cells[i + 1:])

    search(start)
    return best[0], best[1]


def isomorphic(G: Graph, H: Graph) -> dict[int, int] | None:
    """An isomorphism G -> H as a vertex map, or None."""
    if G.n != H.n or G.m != H.m or sorted(G.degrees()) != sorted(H.degrees()):
        return None
    cg, og = _canonical_labeling(G)
    ch, oh = _canonical_labeling(H)
    if cg != ch:
        return None
    return {og[i]: oh[i] for i in range(G.n)}


def is_isomorphism(G: Graph, H: Graph, mapping: dict[int, int]) -> bool:
    if sorted(mapping) != list(G.vertices) or sorted(mapping.values()) != list(H.vertices):
        return False
    return {norm_edge(mapping[u], mapping[v]) for u, v in G.edges} == set(H.edges)


# ---------------------------------------------------------------------------
# small named graphs used throughout tests and the catalog

def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(1, n + 1), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)])


def cycle_with_chords(n: int, chords: Iterable[Edge]) -> Graph:
    return cycle_graph(n).add_edges(chords)


def theta_graph(*lengths: int) -> Graph:
    """Two hubs (1 and 2) joined by internally disjoint paths of the given lengths."""
    edges: list[Edge] = []
    nxt = 3
    for length in lengths:
        prev = 1
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 2))
    return Graph(nxt - 1, edges)


def disjoint_union(G: Graph, H: Graph) -> Graph:
    return Graph(G.n + H.n, list(G.edges) + [(u + G.n, v + G.n) for u, v in H.edges])

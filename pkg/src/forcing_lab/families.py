"""Catalog of named graphs, Hamilton-cycle chord analysis and the structural classifiers."""
from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations, product
from typing import Iterator

from .cycles import Cycle
from .forcing import Af_value, gf_value
from .graph import Edge, Graph, bipartition, norm_edge
from .matching import CapExceeded, is_matching_covered
from .surgery import bisubdivide, quad_subdivide, recognize_bisubdivision

DEFAULT_HAMILTON_CAP = 10**6
CATALOG_ENV = "FORCING_LAB_CATALOG"


class CatalogError(ValueError):
    def __init__(self, message: str, line: int | None = None, entry: str | None = None):
        self.line = line
        self.entry = entry
        prefix = ""
        if line is not None:
            prefix += f"line {line}: "
        if entry is not None:
            prefix += f"[{entry}] "
        super().__init__(prefix + message)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    expected_gf: int
    expected_af: int
    replaceable_sets: tuple[frozenset, ...] = ()
    strong_replaceable_sets: tuple[frozenset, ...] = ()
    base: str | None = None

    @property
    def group(self) -> str:
        return catalog_group(self.name)


# names of the fundamental graphs per structural family
G0_NAMES = tuple(f"H{i}" for i in range(1, 8))
G1_NAMES = tuple(
    f"H_{{{i},{j}}}"
    for i, j in [(1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (2, 1), (3, 1), (3, 2), (3, 3),
                 (4, 1), (4, 2), (4, 3), (5, 1), (5, 2), (6, 1)]
)
G2_NAMES = ("H_{1,4,5}", "H_{3,1,1}")
G3_ONLY_NAMES = ("H_{3,4}", "H_{4,5}")


def catalog_group(name: str) -> str:
    if re.fullmatch(r"A\d+", name):
        return "A"
    if re.fullmatch(r"D\d+", name):
        return "D"
    if name in G0_NAMES:
        return "G0"
    if name in G1_NAMES:
        return "G1"
    if name in G2_NAMES:
        return "G2"
    if name in G3_ONLY_NAMES:
        return "G3"
    return "other"


_EDGE = re.compile(r"^(\d+)-(\d+)$")


def _parse_edges(tokens: list[str], line: int, entry: str) -> list[Edge]:
    out = []
    for tok in tokens:
        m = _EDGE.match(tok)
        if not m:
            raise CatalogError(f"bad edge token {tok!r}", line, entry)
        out.append(norm_edge(int(m.group(1)), int(m.group(2))))
    return out


def parse_catalog(text: str) -> list[CatalogEntry]:
    """Parse catalog text without checking invariants."""
    entries: list[CatalogEntry] = []
    cur: dict | None = None

    def close(line: int) -> None:
        if cur is None:
            return
        name = cur["name"]
        for key in ("vertices", "edges", "gf", "af"):
            if key not in cur:
                raise CatalogError(f"missing '{key}'", line, name)
        try:
            G = Graph(cur["vertices"], cur["edges"])
        except ValueError as exc:
            raise CatalogError(str(exc), cur["line"], name) from None
        for s in cur["rep"] + cur["strong"]:
            if not s <= G.edges:
                raise CatalogError("edge set names a non-edge", cur["line"], name)
        entries.append(CatalogEntry(
            name, G, cur["gf"], cur["af"], tuple(cur["rep"]), tuple(cur["strong"]), cur.get("base"),
        ))

    lines = text.splitlines()
    for no, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = re.fullmatch(r"\[graph\s+(\S+)\]", line)
        if m:
            close(no)
            if any(e.name == m.group(1) for e in entries):
                raise CatalogError("duplicate entry name", no, m.group(1))
            cur = {"name": m.group(1), "line": no, "rep": [], "strong": []}
            continue
        if cur is None:
            raise CatalogError("content before the first [graph ...] header", no)
        key, *rest = line.split()
        name = cur["name"]
        if key == "vertices":
            if len(rest) != 1 or not rest[0].isdigit():
                raise CatalogError("vertices takes one integer", no, name)
            cur["vertices"] = int(rest[0])
        elif key == "edges":
            cur["edges"] = _parse_edges(rest, no, name)
        elif key in ("gf", "af"):
            if len(rest) != 1 or not rest[0].isdigit():
                raise CatalogError(f"{key} takes one integer", no, name)
            cur[key] = int(rest[0])
        elif key == "replaceable_set":
            cur["rep"].append(frozenset(_parse_edges(rest, no, name)))
        elif key == "strong_replaceable_set":
            cur["strong"].append(frozenset(_parse_edges(rest, no, name)))
        elif key == "base":
            if len(rest) != 1:
                raise CatalogError("base takes one name", no, name)
            cur["base"] = rest[0]
        else:
            raise CatalogError(f"unknown key {key!r}", no, name)
    close(len(lines))
    return entries


def load_catalog(text: str, check: bool = True) -> list[CatalogEntry]:
    """Parse and, by default, recompute gf and Af of every entry.

    A mismatch with the recorded values raises CatalogError naming the entry;
    this catches transcription mistakes.
    """
    entries = parse_catalog(text)
    if check:
        for e in entries:
            g = gf_value(e.graph)
            a = Af_value(e.graph)
            if (g, a) != (e.expected_gf, e.expected_af):
                raise CatalogError(
                    f"recorded gf={e.expected_gf} af={e.expected_af}, computed gf={g} Af={a}", entry=e.name
                )
    return entries


def default_catalog_text() -> str:
    path = os.environ.get(CATALOG_ENV)
    if path:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    return resources.files("forcing_lab").joinpath("data/catalog.txt").read_text(encoding="utf-8")


_DEFAULT: list[CatalogEntry] | None = None


def default_catalog(check: bool = False) -> list[CatalogEntry]:
    """The bundled catalog (or the file named by FORCING_LAB_CATALOG)."""
    global _DEFAULT
    if check:
        return load_catalog(default_catalog_text(), check=True)
    if _DEFAULT is None:
        _DEFAULT = parse_catalog(default_catalog_text())
    return _DEFAULT


def catalog_by_name(entries: list[CatalogEntry]) -> dict[str, CatalogEntry]:
    return {e.name: e for e in entries}


def irreplaceable_edges(entry: CatalogEntry) -> list[Edge]:
    """Edges of the base cycle 1-2-...-n that lie in no replaceable set."""
    G = entry.graph
    ring = [norm_edge(v, v % G.n + 1) for v in G.vertices]
    if not entry.replaceable_sets or not all(G.has_edge(*e) for e in ring):
        return []
    covered = frozenset().union(*entry.replaceable_sets)
    return sorted(e for e in ring if e not in covered)


def non_strong_edges(entry: CatalogEntry) -> list[Edge]:
    """Replaceable edges outside every strong replaceable set (empty if none are declared)."""
    if not entry.strong_replaceable_sets:
        return []
    strong = frozenset().union(*entry.strong_replaceable_sets)
    return sorted(frozenset().union(*entry.replaceable_sets) - strong)


def serialize_catalog(entries: list[CatalogEntry]) -> str:
    out = []
    for e in entries:
        out.append(f"[graph {e.name}]")
        out.append(f"vertices {e.graph.n}")
        out.append("edges " + " ".join(f"{u}-{v}" for u, v in e.graph.edge_list))
        out.append(f"gf {e.expected_gf}")
        out.append(f"af {e.expected_af}")
        for s in e.replaceable_sets:
            out.append("replaceable_set " + " ".join(f"{u}-{v}" for u, v in sorted(s)))
        for s in e.strong_replaceable_sets:
            out.append("strong_replaceable_set " + " ".join(f"{u}-{v}" for u, v in sorted(s)))
        if e.base:
            out.append(f"base {e.base}")
        out.append("")
    return "\n".join(out)


# ---------------------------------------------------------------------------
# Hamilton cycles and chords

def hamilton_cycles(G: Graph, cap: int | None = DEFAULT_HAMILTON_CAP) -> Iterator[Cycle]:
    """Every Hamilton cycle once, starting at vertex 1 with second vertex < last."""
    n = G.n
    if n < 3:
        return
    adj = G.adj
    full = G.all_vertices_mask
    count = 0
    path = [1]

    def rec(used: int) -> Iterator[Cycle]:
        nonlocal count
        v = path[-1]
        if len(path) == n:
            if adj[v] >> 1 & 1 and path[1] < path[-1]:
                count += 1
                if cap is not None and count > cap:
                    raise CapExceeded(f"more than {cap} Hamilton cycles")
                yield Cycle(tuple(path))
            return
        cand = adj[v] & full & ~used
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            path.append(w)
            yield from rec(used | low)
            path.pop()

    yield from rec(1 << 1 | 1)


def find_hamilton_cycle(G: Graph) -> Cycle | None:
    return next(hamilton_cycles(G), None)


@dataclass(frozen=True)
class ChordProfile:
    hamilton_cycle: Cycle
    chords: dict  # chord -> "bicolorable" | "black" | "white"
    pair_relations: dict  # (chord, chord) -> relation
    n_b: int
    n_w: int

    def of_role(self, role: str) -> list[Edge]:
        return sorted(c for c, r in self.chords.items() if r == role)


def _pair_relation(order: dict[int, int], length: int, cycle_edges: frozenset,
                   colour: dict[int, int], c1: Edge, c2: Edge) -> str:
    if set(c1) & set(c2):
        return "adjacent"
    labelings = [
        (x1, x2, y1, y2)
        for x1, x2 in (c1, c1[::-1])
        for y1, y2 in (c2, c2[::-1])
        if colour[x1] == colour[y1]
    ]
    a, b = sorted((order[c1[0]], order[c1[1]]))
    interleaved = (a < order[c2[0]] < b) != (a < order[c2[1]] < b)
    if interleaved:
        for x1, x2, y1, y2 in labelings:
            if norm_edge(x1, y2) in cycle_edges and norm_edge(x2, y1) in cycle_edges:
                return "strongly_crossed"
        return "crossed"
    for x1, x2, y1, y2 in labelings:
        # walking forward from x1, the others appear as x2, y1, y2 (or its mirror)
        seq = sorted((x2, y1, y2), key=lambda v: (order[v] - order[x1]) % length)
        if seq in ([x2, y1, y2], [y2, y1, x2]):
            return "parallel"
    return "other"


def chord_profile(G: Graph, C: Cycle) -> ChordProfile:
    """Classify chords of a Hamilton cycle by endpoint colours and pairwise position."""
    vs = C.vertices
    if len(vs) != G.n or not C.edges <= G.edges:
        raise ValueError("not a Hamilton cycle of the graph")
    if G.n % 2:
        raise ValueError("the Hamilton cycle must be even")
    order = {v: i for i, v in enumerate(vs)}
    colour = {v: i % 2 for i, v in enumerate(vs)}
    roles = {}
    for e in sorted(G.edges - C.edges):
        u, v = e
        if colour[u] != colour[v]:
            roles[e] = "bicolorable"
        else:
            roles[e] = "black" if colour[u] == 0 else "white"
    rel = {}
    for c1, c2 in combinations(sorted(roles), 2):
        rel[(c1, c2)] = _pair_relation(order, len(vs), C.edges, colour, c1, c2)
    nb = sum(1 for r in roles.values() if r == "black")
    nw = sum(1 for r in roles.values() if r == "white")
    return ChordProfile(C, roles, rel, nb, nw)


# ---------------------------------------------------------------------------
# classifiers

@dataclass
class FamilyLabel:
    family: str  # B0..B3, G0..G3 or none
    profile: ChordProfile | None = None
    base: str | None = None
    subdivision: dict | None = None  # base edge -> host path
    plan: dict | None = None  # quadrilateral parameters used on the base
    stage: str | None = None  # for "none": how far classification got

    def __str__(self) -> str:
        bits_ = [self.family]
        if self.base:
            bits_.append(f"base={self.base}")
        if self.profile is not None:
            bits_.append("cycle=" + "-".join(map(str, self.profile.hamilton_cycle.vertices)))
        if self.stage:
            bits_.append(f"stage={self.stage}")
        return " ".join(bits_)


def _bipartite_family(G: Graph, C: Cycle) -> tuple[str | None, ChordProfile]:
    prof = chord_profile(G, C)
    k = len(prof.chords)
    if k == 0:
        return "B0", prof
    if k == 1:
        return "B1", prof
    rels = list(prof.pair_relations.values())
    if k == 2 and rels == ["strongly_crossed"]:
        return "B2", prof
    if all(r == "parallel" for r in rels):
        return "B3", prof
    return None, prof


def classify_bipartite(G: Graph, cap: int | None = DEFAULT_HAMILTON_CAP) -> FamilyLabel:
    """B0..B3 membership, trying every Hamilton cycle before answering none."""
    if bipartition(G) is None:
        raise ValueError("classify_bipartite needs a bipartite graph")
    if G.n < 4 or not is_matching_covered(G):
        raise ValueError("classify_bipartite needs a matching covered graph on at least 4 vertices")
    best: tuple[str, ChordProfile] | None = None
    seen_any = False
    for C in hamilton_cycles(G, cap):
        seen_any = True
        fam, prof = _bipartite_family(G, C)
        if fam is not None and (best is None or fam < best[0]):
            best = (fam, prof)
            if fam == "B0" or fam == "B1":
                break
    if best is None:
        return FamilyLabel("none", stage="hamilton" if not seen_any else "chords")
    return FamilyLabel(best[0], best[1])


def _recognize(G: Graph, entry: CatalogEntry) -> tuple[dict, frozenset] | None:
    sets = entry.replaceable_sets or (frozenset(),)
    for R in sets:
        w = recognize_bisubdivision(G, entry.graph, constraint=R)
        if w is not None:
            return w, R
    return None


def _quad_plans(entry: CatalogEntry, room: int) -> Iterator[tuple[frozenset, dict]]:
    for S in entry.strong_replaceable_sets:
        edges = sorted(S)
        for ks in product(range(0, room // 4 + 1), repeat=len(edges)):
            if any(ks) and 4 * sum(ks) <= room:
                yield S, {e: k for e, k in zip(edges, ks) if k}


def _walk(order: list[int], paths: dict) -> list[int]:
    """Concatenate the paths of consecutive pairs of a closed vertex order."""
    segs = [paths.get(norm_edge(a, b), (a, b)) for a, b in zip(order, order[1:] + order[:1])]
    # orient by continuity; the images need not keep the base numbering
    if segs[0][-1] not in (segs[1][0], segs[1][-1]):
        segs[0] = segs[0][::-1]
    out: list[int] = []
    prev = segs[0][0]
    for p in segs:
        p = p if p[0] == prev else p[::-1]
        out.extend(p[:-1])
        prev = p[-1]
    return out


def _host_profile(G: Graph, base: Graph, witness: dict, quad=None) -> ChordProfile | None:
    """Chord profile of G along the image of the base's cycle 1-2-...-n."""
    order = list(base.vertices)
    if not all(base.has_edge(a, b) for a, b in zip(order, order[1:] + order[:1])):
        return None
    if quad is not None:
        order = _walk(order, quad.replacement_paths)
    seq = _walk(order, witness)
    if len(seq) != G.n or len(set(seq)) != G.n:
        return None
    return chord_profile(G, Cycle.from_sequence(seq))


def classify_bn(G: Graph, catalog: list[CatalogEntry] | None = None) -> FamilyLabel:
    """G0..G3 membership certified by recognition against the fundamental graphs.

    A "none" answer only says no certificate was found; it is not a claim
    that G contains an excluded minor.
    """
    if bipartition(G) is not None:
        raise ValueError("classify_bn is for nonbipartite graphs; use classify_bipartite")
    if not is_matching_covered(G):
        raise ValueError("classify_bn needs a matching covered graph")
    from .cycles import is_bn_graph

    if not is_bn_graph(G)[0]:
        raise ValueError("classify_bn needs a BN graph")
    catalog = catalog if catalog is not None else default_catalog()
    groups = {"G0": [], "G1": [], "G2": [], "G3": []}
    for e in catalog:
        if e.group in groups:
            groups[e.group].append(e)
    for fam in ("G0", "G1", "G2"):
        for entry in groups[fam]:
            if entry.graph.n > G.n:
                continue
            hit = _recognize(G, entry)
            if hit is not None:
                return FamilyLabel(fam, _host_profile(G, entry.graph, hit[0]), entry.name, hit[0])
    # G3: bisubdivisions of the two dedicated graphs, and quadrilateral
    # subdivisions on a strong set of the G1 graphs (except H1,2)
    for entry in groups["G3"]:
        if entry.graph.n <= G.n:
            hit = _recognize(G, entry)
            if hit is not None:
                return FamilyLabel("G3", _host_profile(G, entry.graph, hit[0]), entry.name, hit[0])
    for entry in groups["G1"]:
        if entry.name == "H_{1,2}" or entry.graph.n > G.n:
            continue
        room = G.n - entry.graph.n
        for S, plan in _quad_plans(entry, room):
            res = quad_subdivide(entry.graph, plan)
            Q = res.graph
            if Q.n > G.n or Q.m - Q.n != G.m - G.n:
                continue
            for R in entry.replaceable_sets or (frozenset(),):
                allowed = set(R) - set(plan)
                for e, path in res.replacement_paths.items():
                    if e in plan:
                        allowed |= {norm_edge(a, b) for a, b in zip(path, path[1:])}
                w = recognize_bisubdivision(G, Q, constraint=allowed)
                if w is not None:
                    return FamilyLabel("G3", _host_profile(G, entry.graph, w, res), entry.name, w, plan)
    return FamilyLabel("none", stage="recognition")

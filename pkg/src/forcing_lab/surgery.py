"""Bisubdivision, quadrilateral subdivision, recognition and bipartite ear decomposition."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Mapping

from .graph import Edge, Graph, bipartition, bits, cyclomatic_number, norm_edge
from .matching import is_matchable, is_matching_covered, require_perfect


class PlanError(ValueError):
    pass


@dataclass(frozen=True)
class SurgeryResult:
    graph: Graph
    # original edge -> vertex path in the result, oriented from the smaller endpoint
    replacement_paths: Mapping[Edge, tuple[int, ...]]
    # new vertex -> original edge it was created on
    origin_map: Mapping[int, Edge]
    # chords added by quadrilateral subdivision, keyed by original edge
    added_chords: Mapping[Edge, tuple[Edge, ...]] = field(default_factory=dict)


def _check_plan(G: Graph, plan: Mapping) -> dict[Edge, int]:
    out = {}
    for e, value in plan.items():
        e = norm_edge(*e)
        if e not in G.edges:
            raise PlanError(f"plan names {e[0]}-{e[1]}, which is not an edge")
        out[e] = int(value)
    return dict(sorted(out.items()))


def bisubdivide(G: Graph, plan: Mapping[Edge, int]) -> SurgeryResult:
    """Replace each planned edge by a path of the given odd length.

    New vertices are numbered n+1, n+2, ... following the planned edges in
    lexicographic order, each path from its smaller endpoint.
    """
    plan = _check_plan(G, plan)
    for e, length in plan.items():
        if length < 1 or length % 2 == 0:
            raise PlanError(f"replacement length for {e[0]}-{e[1]} must be odd and positive, got {length}")
    edges = [e for e in G.edges if plan.get(e, 1) == 1]
    paths: dict[Edge, tuple[int, ...]] = {}
    origin: dict[int, Edge] = {}
    nxt = G.n + 1
    for (u, v), length in plan.items():
        if length == 1:
            paths[(u, v)] = (u, v)
            continue
        path = [u]
        for _ in range(length - 1):
            origin[nxt] = (u, v)
            path.append(nxt)
            nxt += 1
        path.append(v)
        edges.extend(zip(path, path[1:]))
        paths[(u, v)] = tuple(path)
    return SurgeryResult(Graph(nxt - 1, edges), paths, origin)


def matching_bijection(G: Graph, result: SurgeryResult, M) -> frozenset:
    """Image of a perfect matching under the bijection between the two matching sets.

    On a replacement path the odd-indexed edges are used when the original
    edge is in M, the even-indexed ones otherwise.
    """
    M = require_perfect(G, M)
    out = set()
    for e in M:
        if e not in result.replacement_paths:
            out.add(e)
    for e, path in result.replacement_paths.items():
        start = 0 if e in M else 1
        for i in range(start, len(path) - 1, 2):
            out.add(norm_edge(path[i], path[i + 1]))
    return frozenset(out)


def quad_subdivide(G: Graph, plan: Mapping[Edge, int]) -> SurgeryResult:
    """Replace edge uw by a (4k+1)-path u v1 .. v4k w plus chords v1v4, v5v8, ...

    k = 0 leaves the edge alone.
    """
    plan = _check_plan(G, plan)
    for e, k in plan.items():
        if k < 0:
            raise PlanError(f"quadrilateral parameter for {e[0]}-{e[1]} must be >= 0")
    lengths = {e: 4 * k + 1 for e, k in plan.items()}
    base = bisubdivide(G, lengths)
    chords: dict[Edge, tuple[Edge, ...]] = {}
    extra = []
    for e, k in plan.items():
        path = base.replacement_paths[e]
        cs = tuple(norm_edge(path[4 * j + 1], path[4 * j + 4]) for j in range(k))
        chords[e] = cs
        extra.extend(cs)
    return SurgeryResult(base.graph.add_edges(extra), base.replacement_paths, base.origin_map, chords)


def quad_gadget(G: Graph, e: Edge) -> SurgeryResult:
    """Replace uv by u w1 w2 w3 w4 v and add the chord w1w4."""
    return quad_subdivide(G, {norm_edge(*e): 1})


def gadget_matching(G: Graph, result: SurgeryResult, M) -> frozenset:
    """Extend a perfect matching avoiding the gadget edge by {w1w4, w2w3}."""
    M = require_perfect(G, M)
    (e, path), = [(e, p) for e, p in result.replacement_paths.items() if len(p) == 6]
    if e in M:
        raise ValueError("the gadget edge must not lie in the matching")
    w1, w2, w3, w4 = path[1:5]
    return M | {norm_edge(w1, w4), norm_edge(w2, w3)}


def then_bisubdivide(first: SurgeryResult, plan: Mapping[Edge, int]) -> SurgeryResult:
    """Bisubdivide the output of a previous surgery, composing replacement paths."""
    second = bisubdivide(first.graph, plan)
    paths = {}
    for e, path in first.replacement_paths.items():
        expanded = [path[0]]
        for a, b in zip(path, path[1:]):
            seg = second.replacement_paths.get(norm_edge(a, b))
            if seg is None:
                expanded.append(b)
            else:
                seg = seg if seg[0] == a else seg[::-1]
                expanded.extend(seg[1:])
        paths[e] = tuple(expanded)
    origin = dict(first.origin_map)
    for v, e in second.origin_map.items():
        origin[v] = first.origin_map.get(e[0]) or first.origin_map.get(e[1]) or e
    return SurgeryResult(second.graph, paths, origin, dict(first.added_chords))


# ---------------------------------------------------------------------------
# recognition

def chains(G: Graph) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Decompose G into maximal paths between branch vertices (degree != 2).

    Returns (chains, cycles): chains are vertex tuples whose interior vertices
    have degree 2; cycles are components in which every vertex has degree 2,
    given as closed vertex sequences without the repeated endpoint.
    """
    deg = [0] + G.degrees()
    seen_edges: set[Edge] = set()
    out = []
    for b in G.vertices:
        if deg[b] == 2:
            continue
        for w in G.neighbors(b):
            if norm_edge(b, w) in seen_edges:
                continue
            path = [b, w]
            seen_edges.add(norm_edge(b, w))
            while deg[path[-1]] == 2:
                cur = path[-1]
                nxt = [x for x in G.neighbors(cur) if norm_edge(cur, x) not in seen_edges]
                if not nxt:
                    break
                seen_edges.add(norm_edge(cur, nxt[0]))
                path.append(nxt[0])
            out.append(tuple(path))
    cycles = []
    for v in G.vertices:
        if deg[v] != 2:
            continue
        e = norm_edge(v, G.neighbors(v)[0])
        if e in seen_edges:
            continue
        cyc = [v]
        prev = None
        cur = v
        while True:
            nbrs = [x for x in G.neighbors(cur) if x != prev]
            nxt = nbrs[0] if prev is not None or len(nbrs) == 1 else min(nbrs)
            seen_edges.add(norm_edge(cur, nxt))
            if nxt == v:
                break
            cyc.append(nxt)
            prev, cur = cur, nxt
        cycles.append(tuple(cyc))
    return out, cycles


def _split_path(jpath: tuple[int, ...], hpath: tuple[int, ...], allowed: set[Edge] | None):
    """Map consecutive J-edges of ``jpath`` onto odd sub-paths of ``hpath``.

    The extra length goes to the first J-edge allowed to be subdivided.
    Returns {J-edge: H-path} or None.
    """
    k = len(jpath) - 1
    extra = len(hpath) - len(jpath)
    if extra < 0 or extra % 2:
        return None
    jedges = [norm_edge(jpath[i], jpath[i + 1]) for i in range(k)]
    grow = 0
    if extra:
        cands = [i for i, e in enumerate(jedges) if allowed is None or e in allowed]
        if not cands:
            return None
        grow = cands[0]
    out = {}
    pos = 0
    for i, e in enumerate(jedges):
        step = 1 + (extra if i == grow else 0)
        seg = hpath[pos:pos + step + 1]
        # orient each image from the image of the smaller J endpoint
        out[e] = seg if jpath[i] == e[0] else seg[::-1]
        pos += step
    return out


def recognize_bisubdivision(H: Graph, J: Graph, constraint: Iterable[Edge] | None = None):
    """Decide whether H is a bisubdivision of J.

    Returns a map J-edge -> H vertex path (odd length) realising H, with every
    J-edge of length > 1 inside ``constraint`` when given, or None.
    """
    allowed = None if constraint is None else {norm_edge(*e) for e in constraint}
    if H.n < J.n or H.m - H.n != J.m - J.n:
        return None
    dh = [0] + H.degrees()
    dj = [0] + J.degrees()
    bj = [v for v in J.vertices if dj[v] != 2]
    bh = [v for v in H.vertices if dh[v] != 2]
    if sorted(dj[v] for v in bj) != sorted(dh[v] for v in bh):
        return None
    cj, cyc_j = chains(J)
    ch, cyc_h = chains(H)
    if len(cj) != len(ch) or len(cyc_j) != len(cyc_h):
        return None

    # cycle components: match greedily by length after sorting (lengths only matter)
    cycle_map = {}
    if cyc_j:
        used = [False] * len(cyc_h)
        for jc in sorted(cyc_j, key=len, reverse=True):
            for idx, hc in sorted(enumerate(cyc_h), key=lambda t: len(t[1])):
                if used[idx] or len(hc) < len(jc) or (len(hc) - len(jc)) % 2:
                    continue
                jpath = jc + jc[:1]
                hpath = hc + hc[:1]
                if allowed is not None and len(hc) > len(jc):
                    # rotate J so an allowed edge comes first
                    rot = [i for i in range(len(jc)) if norm_edge(jpath[i], jpath[i + 1]) in allowed]
                    if not rot:
                        continue
                    jc2 = jc[rot[0]:] + jc[:rot[0]]
                    jpath = jc2 + jc2[:1]
                seg = _split_path(jpath, hpath, allowed)
                if seg is None:
                    continue
                used[idx] = True
                cycle_map.update(seg)
                break
            else:
                return None

    by_pair_j: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    for c in cj:
        by_pair_j.setdefault(norm_edge(c[0], c[-1]) if c[0] != c[-1] else (c[0], c[0]), []).append(c)
    by_pair_h: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    for c in ch:
        by_pair_h.setdefault(norm_edge(c[0], c[-1]) if c[0] != c[-1] else (c[0], c[0]), []).append(c)

    def orient(c, a):
        return c if c[0] == a else c[::-1]

    def match_chains(jcs, hcs, a, fa):
        """Assign J-chains (oriented from a) to H-chains (oriented from f(a))."""
        if len(jcs) != len(hcs):
            return None
        for perm in permutations(range(len(hcs))):
            acc = {}
            for jc, hi in zip(jcs, perm):
                hc = hcs[hi]
                jo = orient(jc, a)
                ho = orient(hc, fa)
                seg = _split_path(jo, ho, allowed)
                if seg is None and jo[0] == jo[-1]:
                    seg = _split_path(jo, ho[::-1], allowed)
                if seg is None:
                    break
                acc.update(seg)
            else:
                return acc
        return None

    order = sorted(bj, key=lambda v: (-dj[v], v))
    fmap: dict[int, int] = {}
    used_h: set[int] = set()
    result: dict[Edge, tuple[int, ...]] = {}

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        a = order[i]
        for fa in bh:
            if fa in used_h or dh[fa] != dj[a]:
                continue
            fmap[a] = fa
            used_h.add(fa)
            added = []
            ok = True
            for b in order[:i + 1]:
                key_j = (a, a) if b == a else norm_edge(a, b)
                fb = fmap[b]
                key_h = (fa, fa) if b == a else norm_edge(fa, fb)
                jcs = by_pair_j.get(key_j, [])
                hcs = by_pair_h.get(key_h, [])
                if len(jcs) != len(hcs):
                    ok = False
                    break
                if jcs:
                    seg = match_chains(jcs, hcs, a, fa)
                    if seg is None:
                        ok = False
                        break
                    result.update(seg)
                    added.extend(seg)
            if ok and extend(i + 1):
                return True
            for e in added:
                result.pop(e, None)
            del fmap[a]
            used_h.discard(fa)
        return False

    if not extend(0):
        return None
    result.update(cycle_map)
    if set(result) != set(J.edges):
        return None
    return result


def is_bisubdivision_witness(H: Graph, J: Graph, witness, constraint=None) -> bool:
    """Independent check that a recognition witness really realises H from J."""
    if set(witness) != set(J.edges):
        return False
    vmap: dict[int, int] = {}
    used_edges: set[Edge] = set()
    interior: set[int] = set()
    for (a, b), path in witness.items():
        if (len(path) - 1) % 2 == 0:
            return False
        if constraint is not None and len(path) > 2 and norm_edge(a, b) not in set(map(lambda e: norm_edge(*e), constraint)):
            return False
        for x, y in ((a, path[0]), (b, path[-1])):
            if vmap.setdefault(x, y) != y:
                return False
        for u, v in zip(path, path[1:]):
            e = norm_edge(u, v)
            if e not in H.edges or e in used_edges:
                return False
            used_edges.add(e)
        for v in path[1:-1]:
            if v in interior:
                return False
            interior.add(v)
    if len(set(vmap.values())) != len(vmap) or interior & set(vmap.values()):
        return False
    if len(vmap) != J.n:
        return False
    return used_edges == set(H.edges) and len(interior) + J.n == H.n


# ---------------------------------------------------------------------------
# bipartite ear decomposition

@dataclass(frozen=True)
class EarDecomposition:
    base_edge: Edge
    ears: tuple[tuple[int, ...], ...]

    def prefixes(self) -> list[frozenset]:
        edges = {self.base_edge}
        out = [frozenset(edges)]
        for ear in self.ears:
            edges |= {norm_edge(a, b) for a, b in zip(ear, ear[1:])}
            out.append(frozenset(edges))
        return out


def bipartite_ear_decomposition(G: Graph) -> EarDecomposition:
    """Build G from its least edge by odd ears, each prefix matching covered and conformal."""
    if bipartition(G) is None:
        raise ValueError("graph is not bipartite")
    if not is_matching_covered(G):
        raise ValueError("graph is not matching covered")
    base = G.edge_list[0]
    vin = (1 << base[0]) | (1 << base[1])
    used = {base}
    ears: list[tuple[int, ...]] = []
    full = G.all_vertices_mask

    def candidate_ears():
        # single edges inside the current graph first, then longer paths by length
        for u, v in G.edge_list:
            if (u, v) not in used and vin >> u & 1 and vin >> v & 1:
                yield (u, v)
        found = []
        for x in bits(vin):
            stack = [(x, (x,))]
            while stack:
                cur, path = stack.pop()
                for w in G.neighbors(cur):
                    if w in path or norm_edge(cur, w) in used:
                        continue
                    if vin >> w & 1:
                        if len(path) > 1 and w > x:
                            found.append(path + (w,))
                    else:
                        stack.append((w, path + (w,)))
        found.sort(key=lambda p: (len(p), p))
        yield from found

    while len(used) < G.m:
        for ear in candidate_ears():
            if (len(ear) - 1) % 2 == 0:
                continue
            new_v = vin
            for v in ear:
                new_v |= 1 << v
            if not is_matchable(G, full & ~new_v):
                continue
            trial = used | {norm_edge(a, b) for a, b in zip(ear, ear[1:])}
            sub, _ = G.induced_by_edges(trial)
            if not is_matching_covered(sub):
                continue
            ears.append(ear)
            used = trial
            vin = new_v
            break
        else:
            raise RuntimeError("no admissible ear found")  # excluded by the ear theorem
    assert len(ears) == cyclomatic_number(G)
    return EarDecomposition(base, tuple(ears))


def is_valid_ear_decomposition(G: Graph, dec: EarDecomposition) -> bool:
    seen_v = set(dec.base_edge)
    edges = {dec.base_edge}
    for ear in dec.ears:
        if (len(ear) - 1) % 2 == 0 or ear[0] not in seen_v or ear[-1] not in seen_v:
            return False
        if any(v in seen_v for v in ear[1:-1]):
            return False
        new = {norm_edge(a, b) for a, b in zip(ear, ear[1:])}
        if new & edges or not new <= G.edges:
            return False
        edges |= new
        seen_v |= set(ear)
        sub, back = G.induced_by_edges(edges)
        if not is_matching_covered(sub):
            return False
        vmask = 0
        for v in seen_v:
            vmask |= 1 << v
        if not is_matchable(G, G.all_vertices_mask & ~vmask):
            return False
    return edges == set(G.edges)

"""Replaceable and strong replaceable sets of a Hamilton cycle plus chords, computed with the uniformity oracle.

The Hamilton cycle is 1-2-...-n-1.  A set R of cycle edges is replaceable when
bisubdividing every edge of R (length 3, and length 5 for single edges) keeps
the graph strongly uniform; strong sets do the same for quadrilateral
subdivision with k=1.
"""
import sys
from itertools import combinations

from forcing_lab.graph import Graph, norm_edge
from forcing_lab.surgery import bisubdivide, quad_subdivide
from forcing_lab.uniform import StrongUniformityOracle

ORACLE = StrongUniformityOracle()


def su(G):
    return ORACLE.check(G).uniform


def cycle_edges(G):
    return [norm_edge(i, i % G.n + 1) for i in range(1, G.n + 1)]


def maximal_sets(items, ok):
    """Maximal subsets S of items with ok(S), by growing from the pairwise-compatible cliques."""
    items = sorted(items)
    good_pairs = {frozenset(p) for p in combinations(items, 2) if ok(set(p))}
    out = []

    def extend(cur, rest):
        grown = False
        for i, x in enumerate(rest):
            if all(frozenset((x, y)) in good_pairs for y in cur):
                grown = True
                extend(cur + [x], rest[i + 1:])
        if not grown:
            s = frozenset(cur)
            if not any(s <= t for t in out):
                out.append(s)

    extend([], items)
    # keep only maximal sets that really work jointly
    res = []
    for s in sorted(out, key=lambda s: (-len(s), sorted(s))):
        if any(s <= t for t in res):
            continue
        if ok(s):
            res.append(s)
        else:
            raise RuntimeError(f"pairwise compatible set fails jointly: {sorted(s)}")
    return res


def analyse(G, strong=True):
    ce = cycle_edges(G)
    single = [e for e in ce if su(bisubdivide(G, {e: 3}).graph) and su(bisubdivide(G, {e: 5}).graph)]
    irreplaceable = [e for e in ce if e not in single]
    rep = maximal_sets(single, lambda S: su(bisubdivide(G, {e: 3 for e in S}).graph))
    strong_sets = []
    if strong:
        qs = [e for e in single if su(quad_subdivide(G, {e: 1}).graph)]
        if qs:
            strong_sets = maximal_sets(qs, lambda S: su(quad_subdivide(G, {e: 1 for e in S}).graph))
    return irreplaceable, rep, strong_sets


def fmt(edges):
    return "{" + ",".join(f"{u}{v}" if v < 10 else f"{u}-{v}" for u, v in sorted(edges)) + "}"


if __name__ == "__main__":
    n = int(sys.argv[1])
    chords = [tuple(map(int, c.split("-"))) for c in sys.argv[2:]]
    G = Graph(n, [norm_edge(i, i % n + 1) for i in range(1, n + 1)] + chords)
    irr, rep, strong = analyse(G)
    print("SU", su(G))
    print("irreplaceable", fmt(irr))
    for r in rep:
        print("replaceable", fmt(r))
    for s in strong:
        print("strong", fmt(s))

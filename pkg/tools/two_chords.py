"""Uniform graphs "bisubdivided base + two bicolorable chords" with no shortening, and what deleting each chord leaves."""
import sys
from itertools import combinations

sys.path.insert(0, "tools")
from forcing_lab.cycles import is_bn_graph  # noqa: E402
from forcing_lab.families import chord_profile  # noqa: E402
from forcing_lab.cycles import Cycle  # noqa: E402
from forcing_lab.graph import Graph, canonical_form, cycle_with_chords as cw, norm_edge  # noqa: E402
from forcing_lab.matching import is_matching_covered  # noqa: E402
from forcing_lab.surgery import bisubdivide, recognize_bisubdivision  # noqa: E402
from forcing_lab.uniform import StrongUniformityOracle  # noqa: E402
from fundamentals import BASES, cyc, plans, relabel_along_cycle, walk_cycle  # noqa: E402
from obstructions import shortenings  # noqa: E402

G1 = {
    "H1,1": cw(8, [(1, 7), (2, 5), (6, 8)]),
    "H1,2": cw(8, [(1, 5), (4, 6), (2, 7)]),
    "H1,3": cw(8, [(1, 5), (2, 6), (3, 8)]),
    "H1,4": cw(6, [(1, 3), (2, 4), (1, 4)]),
    "H1,5": cw(6, [(1, 3), (2, 4), (2, 5)]),
    "H3,1": cw(6, [(1, 4), (1, 5), (2, 6), (4, 6)]),
}


def which(X):
    return [k for k, J in G1.items() if J.n <= X.n and recognize_bisubdivision(X, J) is not None]


def run(name, extra, relation):
    orc = StrongUniformityOracle()
    n0, chords = BASES[name]
    base = Graph(n0, cyc(n0) + chords)
    found = {}
    for plan in plans(n0, extra):
        res = bisubdivide(base, plan)
        G, _ = relabel_along_cycle(res.graph, walk_cycle(res.graph, n0, res))
        N = G.n
        bic = [(u, v) for u in range(1, N + 1) for v in range(u + 1, N + 1)
               if (u + v) % 2 == 1 and not G.has_edge(u, v)]
        for a, b in combinations(bic, 2):
            X = Graph(N, list(G.edges) + [a, b])
            prof = chord_profile(X, Cycle(tuple(range(1, N + 1))))
            if prof.pair_relations.get((min(a, b), max(a, b))) not in relation:
                continue
            key = canonical_form(X)
            if key in found:
                continue
            ok = is_matching_covered(X) and is_bn_graph(X)[0] and orc.check(X).uniform
            found[key] = (X, a, b) if ok else None
    cands = [v for v in found.values() if v]
    keys = {canonical_form(X) for X, _, _ in cands}
    for X, a, b in cands:
        if any(canonical_form(Y) in keys for Y in shortenings(X)):
            continue
        ra = which(Graph(X.n, X.edges - {a}))
        rb = which(Graph(X.n, X.edges - {b}))
        ch = sorted(e for e in X.edges if e not in set(cyc(X.n)))
        print(name, X.n, ch, "e1", a, "e2", b, "minus e1:", ra, "minus e2:", rb, flush=True)


if __name__ == "__main__":
    rel = sys.argv[3].split(",")
    run(sys.argv[1], int(sys.argv[2]), rel)

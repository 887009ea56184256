"""Enumerate uniform graphs "bisubdivided base + one bicolorable chord" and keep those admitting no shortening."""
import sys
import time
from itertools import combinations_with_replacement

from forcing_lab.cycles import is_bn_graph
from forcing_lab.graph import Graph, canonical_form, norm_edge
from forcing_lab.matching import is_matching_covered
from forcing_lab.surgery import bisubdivide, chains
from forcing_lab.uniform import StrongUniformityOracle

sys.path.insert(0, "tools")
from obstructions import shortenings  # noqa: E402

BASES = {
    "H1": (4, [(1, 3), (2, 4)]),
    "H2": (8, [(1, 5), (3, 7), (2, 6)]),
    "H3": (6, [(1, 3), (1, 5), (2, 6)]),
    "H4": (8, [(1, 3), (1, 5), (2, 6), (2, 8)]),
    "H5": (10, [(1, 7), (1, 5), (2, 8), (4, 10)]),
    "H6": (12, [(3, 9), (5, 11), (2, 8), (6, 12)]),
    "H7": (8, [(1, 5), (2, 6), (3, 7), (4, 8)]),
}


def cyc(n):
    return [norm_edge(i, i % n + 1) for i in range(1, n + 1)]


def relabel_along_cycle(G, order):
    lab = {v: i + 1 for i, v in enumerate(order)}
    return Graph(G.n, [(lab[u], lab[v]) for u, v in G.edges]), lab


def plans(n, extra):
    edges = cyc(n)
    out = [{}]
    # lengths 3 on up to extra/2 edges, or longer paths
    for k in range(1, extra // 2 + 1):
        for combo in combinations_with_replacement(edges, k):
            plan = {}
            for e in combo:
                plan[e] = plan.get(e, 1) + 2
            out.append(plan)
    return out


def walk_cycle(G, n0, res):
    # follow the original cycle 1..n0 through the replacement paths
    order = []
    for i in range(1, n0 + 1):
        e = norm_edge(i, i % n0 + 1)
        p = res.replacement_paths.get(e, (e[0], e[1]))
        if p[0] != i:
            p = p[::-1]
        order.extend(p[:-1])
    return order


def candidates(name, extra, orc):
    n0, chords = BASES[name]
    base = Graph(n0, cyc(n0) + chords)
    found = {}
    for plan in plans(n0, extra):
        res = bisubdivide(base, plan)
        order = walk_cycle(res.graph, n0, res)
        G, _ = relabel_along_cycle(res.graph, order)
        N = G.n
        for u in range(1, N + 1):
            for v in range(u + 1, N + 1):
                if (u + v) % 2 == 0 or G.has_edge(u, v):
                    continue
                X = Graph(N, list(G.edges) + [(u, v)])
                key = canonical_form(X)
                if key in found:
                    continue
                if not is_matching_covered(X) or not is_bn_graph(X)[0]:
                    found[key] = None
                    continue
                found[key] = X if orc.check(X).uniform else None
    return [X for X in found.values() if X is not None]


if __name__ == "__main__":
    orc = StrongUniformityOracle()
    extra_by = {"H1": 6, "H2": 6, "H3": 6, "H4": 4, "H5": 4, "H6": 4, "H7": 4}
    names = sys.argv[1:] or list(BASES)
    for name in names:
        t = time.time()
        cands = candidates(name, extra_by[name], orc)
        keys = {canonical_form(X) for X in cands}
        fund = []
        for X in cands:
            if not any(canonical_form(Y) in keys for Y in shortenings(X)):
                fund.append(X)
        print(name, "candidates", len(cands), "fundamental", len(fund), round(time.time() - t, 1), flush=True)
        for X in sorted(fund, key=lambda X: (X.n, sorted(X.edges))):
            chords_ = sorted(e for e in X.edges if e not in set(cyc(X.n)))
            print("  ", X.n, chords_, flush=True)

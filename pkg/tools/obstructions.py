"""Find the minimal non-uniform graphs (under conformal minors) in a generated pool."""
import sys
import time

from forcing_lab.graph import Graph, bipartition, canonical_form, norm_edge
from forcing_lab.pools import matching_covered_graphs
from forcing_lab.surgery import chains
from forcing_lab.uniform import StrongUniformityOracle


def shortenings(G):
    cs, _ = chains(G)
    for c in cs:
        if len(c) - 1 >= 3:
            # drop two interior vertices c[1], c[2]: join c[0] to c[3]
            drop = {c[1], c[2]}
            keep = [v for v in G.vertices if v not in drop]
            lab = {v: i + 1 for i, v in enumerate(keep)}
            edges = [(lab[u], lab[v]) for u, v in G.edges if u not in drop and v not in drop]
            if norm_edge(lab[c[0]], lab[c[3]]) in {norm_edge(*e) for e in edges}:
                continue
            edges.append((lab[c[0]], lab[c[3]]))
            yield Graph(len(keep), edges)


def minimal_obstructions(pool, oracle):
    out = []
    for G in pool:
        ok, cex, g, a = oracle._mc(G)
        if ok or len(cex) != G.m:
            continue
        if all(oracle.check(H).uniform for H in shortenings(G)):
            out.append((G, g, a))
    return out


if __name__ == "__main__":
    n = int(sys.argv[1])
    kind = sys.argv[2]
    t = time.time()
    pool = matching_covered_graphs(n, kind == "bip", kind == "bn")
    if kind == "bn":
        pool = [G for G in pool if bipartition(G) is None]
    print("pool", len(pool), round(time.time() - t, 1), flush=True)
    orc = StrongUniformityOracle()
    obs = minimal_obstructions(pool, orc)
    print("time", round(time.time() - t, 1), "evaluations", orc.evaluations)
    for G, g, a in obs:
        print(G.n, G.m, g, a, sorted(G.degrees()), G)

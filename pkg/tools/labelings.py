"""Relabel a graph along each of its Hamilton cycles and keep labelings that fit stated constraints."""
import sys

sys.path.insert(0, "tools")
from forcing_lab.families import hamilton_cycles  # noqa: E402
from forcing_lab.graph import Graph, norm_edge  # noqa: E402
from replaceable import analyse, cycle_edges  # noqa: E402


def labelings(X):
    seen = set()
    for C in hamilton_cycles(X):
        vs = list(C.vertices)
        n = len(vs)
        for d in (vs, vs[::-1]):
            for r in range(n):
                order = d[r:] + d[:r]
                lab = {v: i + 1 for i, v in enumerate(order)}
                es = frozenset(norm_edge(lab[u], lab[v]) for u, v in X.edges)
                if es not in seen:
                    seen.add(es)
                    yield Graph(n, es)


def chords_of(G):
    ce = set(cycle_edges(G))
    return sorted(e for e in G.edges if e not in ce)


def matching(X, chords=(), irreplaceable=None, limit=None):
    out = []
    for G in labelings(X):
        ch = set(chords_of(G))
        if not set(map(lambda e: norm_edge(*e), chords)) <= ch:
            continue
        if irreplaceable is not None:
            irr, rep, strong = analyse(G, strong=False)
            if set(irr) != {norm_edge(*e) for e in irreplaceable}:
                continue
        out.append(G)
        if limit and len(out) >= limit:
            break
    return sorted(out, key=lambda G: chords_of(G))

"""Grow strongly uniform matching covered BN graphs by ears and collect minimal obstructions.

Strong uniformity and the BN property are both inherited by conformal
subgraphs, so every minimal non-uniform BN graph is a uniform BN graph plus
one ear (or two ears when neither alone keeps the graph matching covered).

usage: python3 tools/su_growth.py MAX_N [nonbip]
"""
import sys
import time
from itertools import combinations

from forcing_lab.cycles import is_bn_graph
from forcing_lab.graph import Graph, bipartition, canonical_form
from forcing_lab.matching import is_matching_covered
from forcing_lab.pools import _with_ears
from forcing_lab.uniform import StrongUniformityOracle

sys.path.insert(0, "tools")
from obstructions import shortenings  # noqa: E402


def grow(max_n, report):
    orc = StrongUniformityOracle()
    k2 = Graph(2, [(1, 2)])
    found = {canonical_form(k2): k2}
    rejected = {}
    obstructions = {}
    queue = [k2]

    def verdict(H):
        if not is_matching_covered(H):
            return "mc"
        if not is_bn_graph(H)[0]:
            return "filter"
        ok, cex, g, a = orc._mc(H)
        if ok:
            return "ok"
        if len(cex) == H.m and all(orc.check(S).uniform for S in shortenings(H)):
            obstructions[canonical_form(H)] = (H, g, a)
            report(H, g, a)
        return "filter"

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
    return found, obstructions


if __name__ == "__main__":
    max_n = int(sys.argv[1])
    nonbip = len(sys.argv) > 2
    t = time.time()

    def report(H, g, a):
        if nonbip and bipartition(H) is not None:
            return
        print(H.n, H.m, g, a, sorted(H.degrees()), " ".join(f"{u}-{v}" for u, v in sorted(H.edges)),
              f"t={time.time() - t:.0f}", flush=True)

    found, obs = grow(max_n, report)
    print("uniform graphs", len(found), "obstructions", len(obs), "time", round(time.time() - t, 1), flush=True)

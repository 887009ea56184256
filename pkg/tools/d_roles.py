"""Pick representative obstructions for each chord configuration role.

Every candidate is an even cycle 1..n plus chords that is matching covered,
BN, and has gf=3, Af=2.  Per role the chosen graph is the least by
(contains an A-entry minor, n, m, canonical form); the five least are listed.

Roles:
  three-black   the cycle carries three black chords in a named pattern and one white chord
  H2+e / H3+e   a cycle-edge bisubdivision of H2 or H3 plus one bicolorable chord,
                grouped by how that chord sits relative to the monochromatic chords

usage: python3 tools/d_roles.py [MAX_N] [black]
"""
import sys
from itertools import combinations

from forcing_lab.cycles import Cycle, is_bn_graph
from forcing_lab.families import chord_profile, default_catalog
from forcing_lab.forcing import Af_value, gf_value
from forcing_lab.graph import canonical_form, cycle_with_chords, norm_edge
from forcing_lab.matching import is_matching_covered
from forcing_lab.minors import find_conformal_minor

H2 = cycle_with_chords(8, [(1, 5), (3, 7), (2, 6)])
H3 = cycle_with_chords(6, [(1, 3), (1, 5), (2, 6)])
KEEP = 5
BASES = {"H2": canonical_form(H2), "H3": canonical_form(H3)}


def chords_of(n, colour=None):
    out = []
    for u, v in combinations(range(1, n + 1), 2):
        if v - u in (1, n - 1):
            continue
        same = (v - u) % 2 == 0
        if colour is None and not same:
            out.append((u, v))
        elif colour == "black" and same and u % 2 == 1:
            out.append((u, v))
        elif colour == "white" and same and u % 2 == 0:
            out.append((u, v))
    return out


def interesting(G):
    if not is_matching_covered(G) or gf_value(G) != 3 or Af_value(G) != 2:
        return False
    return is_bn_graph(G)[0]


def reduced_base(n, chords):
    """Shrink every cycle segment between chord endpoints to length 1 or 2."""
    ends = sorted({x for c in chords for x in c})
    pos, k = {}, 1
    for i, v in enumerate(ends):
        pos[v] = k
        gap = (ends[(i + 1) % len(ends)] - v) % n
        k += 1 if gap % 2 else 2
    size = k - 1
    return cycle_with_chords(size, [norm_edge(pos[u], pos[v]) for u, v in chords])


def three_black_pattern(bl):
    shared = [bool(set(a) & set(b)) for a, b in combinations(bl, 2)]
    s = sum(shared)
    if s == 3:
        common = set(bl[0]) & set(bl[1]) & set(bl[2])
        return "star" if common else "triangle"
    if s == 2:
        return "path"
    if s == 0:
        return "matching"
    return "pair+crossing"


def relation(prof, a, b):
    return prof.pair_relations.get((a, b)) or prof.pair_relations[(b, a)]


def rank(G, a_graphs):
    has_a = any(find_conformal_minor(G, A) is not None for A in a_graphs)
    return (has_a, G.n, G.m, canonical_form(G))


def main(max_n, only_black=False):
    a_graphs = [e.graph for e in default_catalog() if e.group == "A"]
    seen = set()
    best = {}

    def offer(role, G, note):
        key = canonical_form(G)
        if (role, key) in seen:
            return
        seen.add((role, key))
        if not interesting(G):
            return
        kept = best.setdefault(role, [])
        kept.append((rank(G, a_graphs), G, note))
        kept.sort(key=lambda t: t[0])
        del kept[KEEP:]

    for n in range(6, max_n + 1, 2):
        cyc = Cycle.from_sequence(range(1, n + 1))
        black, white = chords_of(n, "black"), chords_of(n, "white")
        for bl in combinations(black, 3):
            pats = three_black_pattern(bl)
            ok = all(set(a) & set(b) or relation_cross(a, b) for a, b in combinations(bl, 2))
            if not ok:
                continue
            for w in white:
                offer("three-black:" + pats, cycle_with_chords(n, list(bl) + [w]), f"black={bl} white={w}")
        mono = [] if only_black else black + white
        for k in (3,):
            for M in combinations(mono, k):
                base = None
                red = canonical_form(reduced_base(n, M))
                for name, form in BASES.items():
                    if red == form:
                        base = name
                if base is None:
                    continue
                G0 = cycle_with_chords(n, M)
                for e in chords_of(n):
                    G = G0.add_edges([e])
                    prof = chord_profile(G, cyc)
                    cols = {c: prof.chords[c] for c in M}
                    counts = {}
                    for c in M:
                        counts[cols[c]] = counts.get(cols[c], 0) + 1
                    sig = []
                    for c in M:
                        part = "pair" if counts[cols[c]] == 2 else "lone"
                        sig.append((part, relation(prof, e, c)))
                    role = f"{base}+e:" + ",".join(f"{p}/{r}" for p, r in sorted(sig))
                    offer(role, G, f"mono={M} e={e}")
        print(f"# n={n} roles so far {len(best)}", flush=True)

    for role in sorted(best):
        for r, G, note in best[role]:
            print(role, f"hasA={r[0]}", G.n, G.m, " ".join(f"{u}-{v}" for u, v in G.edge_list), "|", note, flush=True)


def relation_cross(a, b):
    lo, hi = a
    return (lo < b[0] < hi) != (lo < b[1] < hi)


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 10, "black" in sys.argv[2:])

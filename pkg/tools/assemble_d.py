"""Assemble the D entries of the catalog from the obstruction and role searches.

Minimal obstructions come from su_growth.py; role representatives from d_roles.py.
Rows of d_roles output are read from the file given on the command line.

usage: python3 tools/assemble_d.py ROLES_FILE > d_catalog.txt
"""
import sys

from forcing_lab.cycles import is_bn_graph
from forcing_lab.families import CatalogEntry, serialize_catalog
from forcing_lab.forcing import Af_value, gf_value
from forcing_lab.graph import Graph, canonical_form
from forcing_lab.matching import is_matching_covered


def g(n, text):
    return Graph(n, [tuple(map(int, t.split("-"))) for t in text.split()])


MINIMAL = {
    "D1": g(10, "1-2 1-3 1-4 2-8 3-4 3-9 4-5 5-6 6-7 7-8 7-10 9-10"),
    "D2": g(10, "1-2 1-3 1-9 2-8 3-4 3-7 4-5 4-10 5-6 6-7 7-8 9-10"),
    "D3": g(6, "1-2 1-3 1-4 1-5 1-6 2-3 2-6 3-4 4-5 5-6"),
    "D8": g(8, "1-2 1-3 1-4 2-3 2-6 2-8 3-4 4-5 5-6 6-7 7-8"),
    "D9": g(8, "1-2 1-3 1-5 1-6 2-5 2-8 3-4 4-5 5-6 6-7 7-8"),
    "D10": g(10, "1-2 1-3 1-4 2-3 2-10 3-4 4-5 5-6 6-7 6-9 7-8 8-9 9-10"),
    "D25": g(8, "1-2 1-3 1-4 2-6 2-8 3-4 3-7 4-5 5-6 5-8 6-7 7-8"),
}
THREE_BLACK = {
    "D4": g(8, "1-2 1-3 1-5 1-7 1-8 2-3 2-8 3-4 4-5 5-6 6-7 7-8"),
    "D5": g(8, "1-2 1-3 1-5 1-8 2-3 2-6 3-4 3-7 4-5 5-6 6-7 7-8"),
    "D6": g(12, "1-2 1-7 1-12 2-3 2-8 3-4 3-9 4-5 5-6 5-11 6-7 7-8 8-9 9-10 10-11 11-12"),
    "D7": g(10, "1-2 1-5 1-7 1-10 2-3 2-8 3-4 3-9 4-5 5-6 6-7 7-8 8-9 9-10"),
}


def rows(path):
    out = []
    for line in open(path):
        head, _ = line.split(" | ")
        role, has_a, n, m, *edges = head.split()
        base, sig = role.split(":")
        rels = [part.split("/") for part in sig.split(",")]
        G = g(int(n), " ".join(edges))
        out.append((base, rels, (has_a == "hasA=True", G.n, G.m, canonical_form(G)), G))
    return out


def pick(cands, k, used):
    """The k least candidates, skipping graphs already chosen for another role."""
    out = []
    for r in sorted(cands, key=lambda r: r[2]):
        if len(out) == k:
            break
        if r[2][3] not in used:
            used.add(r[2][3])
            out.append(r[3])
    assert len(out) == k, (len(out), k)
    return out


def main(path):
    rs = rows(path)

    def count(r, rel):
        return sum(1 for _, x in r[1] if x == rel)

    h2 = [r for r in rs if r[0] == "H2+e"]
    h3 = [r for r in rs if r[0] == "H3+e"]
    named = dict(MINIMAL)
    named.update(THREE_BLACK)
    used = {canonical_form(G) for G in named.values()}
    groups = [
        (range(11, 16), pick(h2, 5, used)),
        (range(16, 20), pick([r for r in h3 if count(r, "adjacent") == 1], 4, used)),
        (range(20, 22), pick([r for r in h3 if count(r, "adjacent") == 0 and count(r, "crossed") <= 1], 2, used)),
        (range(22, 25), pick([r for r in h3 if count(r, "adjacent") == 0 and count(r, "crossed") >= 2], 3, used)),
    ]
    for idx, graphs in groups:
        for i, G in zip(idx, graphs):
            named[f"D{i}"] = G
    seen = {}
    entries = []
    for i in range(1, 26):
        name = f"D{i}"
        G = named[name]
        key = canonical_form(G)
        assert key not in seen, (name, seen.get(key))
        seen[key] = name
        assert is_matching_covered(G) and is_bn_graph(G)[0], name
        entries.append(CatalogEntry(name, G, gf_value(G), Af_value(G)))
        print(name, G.n, G.m, entries[-1].expected_gf, entries[-1].expected_af, file=sys.stderr)
    sys.stdout.write(serialize_catalog(entries))


if __name__ == "__main__":
    main(sys.argv[1])

"""Write the H part of the bundled catalog: graphs, replaceable sets and strong replaceable sets.

Expected gf/Af values come from the published tables (TABLE below), never from
computation, so that loading the catalog is an independent check.
"""
import sys
import time

sys.path.insert(0, "tools")
from forcing_lab.graph import cycle_with_chords as cw  # noqa: E402
from replaceable import analyse  # noqa: E402

H = {
    "H1": cw(4, [(1, 3), (2, 4)]),
    "H2": cw(8, [(1, 5), (3, 7), (2, 6)]),
    "H3": cw(6, [(1, 3), (1, 5), (2, 6)]),
    "H4": cw(8, [(1, 3), (1, 5), (2, 6), (2, 8)]),
    "H5": cw(10, [(1, 7), (1, 5), (2, 8), (4, 10)]),
    "H6": cw(12, [(3, 9), (5, 11), (2, 8), (6, 12)]),
    "H7": cw(8, [(1, 5), (2, 6), (3, 7), (4, 8)]),
    "H_{1,1}": cw(8, [(1, 7), (2, 5), (6, 8)]),
    "H_{1,2}": cw(8, [(1, 5), (4, 6), (2, 7)]),
    "H_{1,3}": cw(8, [(1, 5), (2, 6), (3, 8)]),
    "H_{1,4}": cw(6, [(1, 3), (2, 4), (1, 4)]),
    "H_{1,5}": cw(6, [(1, 3), (2, 4), (2, 5)]),
    "H_{2,1}": cw(12, [(1, 9), (2, 5), (6, 10), (7, 11)]),
    "H_{3,1}": cw(6, [(1, 4), (1, 5), (2, 6), (4, 6)]),
    "H_{3,2}": cw(10, [(1, 7), (1, 9), (2, 5), (6, 10)]),
    "H_{3,3}": cw(10, [(1, 7), (1, 9), (2, 10), (3, 6)]),
    "H_{4,1}": cw(12, [(1, 5), (2, 6), (4, 6), (5, 11), (7, 10)]),
    "H_{4,2}": cw(12, [(1, 5), (1, 7), (2, 8), (4, 8), (9, 12)]),
    "H_{4,3}": cw(12, [(1, 10), (2, 6), (4, 6), (5, 7), (5, 9)]),
    "H_{5,1}": cw(14, [(1, 5), (2, 6), (2, 8), (3, 13), (9, 12)]),
    "H_{5,2}": cw(14, [(1, 5), (1, 7), (2, 8), (4, 10), (11, 14)]),
    "H_{6,1}": cw(16, [(1, 7), (2, 8), (4, 10), (5, 15), (11, 14)]),
    "H_{1,4,5}": cw(6, [(1, 3), (2, 4), (1, 4), (2, 5)]),
    "H_{3,1,1}": cw(6, [(1, 4), (1, 5), (2, 5), (2, 6), (4, 6)]),
    "H_{3,4}": cw(10, [(1, 4), (1, 7), (4, 8), (5, 10)]),
    "H_{4,5}": cw(8, [(1, 5), (1, 6), (2, 5), (4, 6)]),
}

BASE = {
    **{f"H_{{{i},{j}}}": f"H{i}" for i, j in
       [(1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (2, 1), (3, 1), (3, 2), (3, 3),
        (4, 1), (4, 2), (4, 3), (5, 1), (5, 2), (6, 1)]},
    "H_{1,4,5}": "H_{1,4}",
    "H_{3,1,1}": "H_{3,1}",
    "H_{3,4}": "H_{1,4}",
    "H_{4,5}": "H_{1,4}",
}

# transcription of the published values (gf = Af)
TABLE = {}
for name in ["H1", "H2", "H3", "H_{1,2}", "H_{1,3}", "H_{1,5}"]:
    TABLE[name] = 2
for name in ["H4", "H5", "H6", "H_{1,1}", "H_{1,4}", "H_{2,1}", "H_{3,1}", "H_{3,2}", "H_{3,3}",
             "H_{1,4,5}", "H_{3,1,1}", "H_{3,4}", "H_{4,5}"]:
    TABLE[name] = 3
for name in ["H7", "H_{4,1}", "H_{4,2}", "H_{4,3}", "H_{5,1}", "H_{5,2}", "H_{6,1}"]:
    TABLE[name] = 4

STRONG_FAMILY = {n for n in BASE if n.count(",") == 1 and n != "H_{1,2}"}


def edges_text(es):
    return " ".join(f"{u}-{v}" for u, v in sorted(es))


def entry_text(name, G, rep, strong):
    lines = [f"[graph {name}]", f"vertices {G.n}", "edges " + edges_text(G.edges),
             f"gf {TABLE[name]}", f"af {TABLE[name]}"]
    lines += ["replaceable_set " + edges_text(r) for r in rep]
    lines += ["strong_replaceable_set " + edges_text(s) for s in strong]
    if name in BASE:
        lines.append(f"base {BASE[name]}")
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    out = []
    for name, G in H.items():
        t = time.time()
        irr, rep, strong = analyse(G, strong=name in STRONG_FAMILY)
        print(f"# {name}: irreplaceable {edges_text(irr)} ({time.time() - t:.1f}s)", file=sys.stderr, flush=True)
        out.append(entry_text(name, G, rep, strong))
    sys.stdout.write("\n".join(out))

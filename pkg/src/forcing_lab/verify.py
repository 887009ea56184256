"""Table reproduction and theorem checks over graph pools."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .cycles import conformal_cycles, conformal_cycles_by_alternation, enumerate_cycles, is_bn_graph
from .families import CatalogEntry, classify_bipartite, default_catalog
from .forcing import (
    Af_value,
    anti_forcing_number,
    compatible_alternating_number,
    gf_value,
    max_anti_forcing_number,
)
from .graph import Graph, bipartition, cyclomatic_number, parse_graph, serialize_graph
from .matching import CapExceeded, count_perfect_matchings, enumerate_perfect_matchings, is_matchable, is_matching_covered
from .minors import screen_catalog
from .pools import GraphPool, build_pool
from .surgery import (
    bipartite_ear_decomposition,
    bisubdivide,
    gadget_matching,
    is_valid_ear_decomposition,
    matching_bijection,
    quad_gadget,
    quad_subdivide,
)
from .uniform import StrongUniformityOracle, is_strongly_uniform_direct


@dataclass
class Failure:
    graph: Graph
    detail: str


@dataclass
class VerificationReport:
    property: str
    pool: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    unknown: int = 0
    first_failure: Failure | None = None
    failures: list = field(default_factory=list)  # names, for table reports
    artifact: str | None = None

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.unknown == 0

    def line(self) -> str:
        status = "PASS" if self.ok else ("UNKNOWN" if self.failed == 0 else "FAIL")
        out = (f"{status} {self.property} pool={self.pool} passed={self.passed} "
               f"failed={self.failed} skipped={self.skipped} unknown={self.unknown}")
        if self.failures:
            out += " failing=" + ",".join(self.failures)
        if self.first_failure is not None:
            out += f" first={self.first_failure.detail}"
        if self.artifact:
            out += f" artifact={self.artifact}"
        return out


# ---------------------------------------------------------------------------
# tables

def expected_gap(name: str) -> int | None:
    """gf - Af for the catalog groups: one for excluded minors, zero for fundamentals."""
    if name[0] in "AD":
        return 1
    if name[0] == "H":
        return 0
    return None


def verify_tables(catalog: list[CatalogEntry]) -> VerificationReport:
    """Recompute gf and Af of every entry and compare against the recorded values."""
    rep = VerificationReport("tables", f"catalog({len(catalog)})")
    for e in catalog:
        g = gf_value(e.graph)
        a = Af_value(e.graph)
        gap = expected_gap(e.name)
        problems = []
        if (g, a) != (e.expected_gf, e.expected_af):
            problems.append(f"computed {g}/{a} recorded {e.expected_gf}/{e.expected_af}")
        if gap is not None and g - a != gap:
            problems.append(f"gf-Af={g - a} expected {gap}")
        if problems:
            rep.failed += 1
            rep.failures.append(e.name)
            if rep.first_failure is None:
                rep.first_failure = Failure(e.graph, f"{e.name}: " + "; ".join(problems))
        else:
            rep.passed += 1
    return rep


# ---------------------------------------------------------------------------
# properties: each returns None (precondition not met), or (ok, detail)

Check = Callable[[Graph], "tuple[bool, str] | None"]


def _af_matching(G: Graph):
    af, M, _ = max_anti_forcing_number(G)
    return af, M


def _prop_gf_ge_af(G: Graph):
    if not is_matchable(G) or not (bipartition(G) is not None or is_bn_graph(G)[0]):
        return None
    g, a = gf_value(G), Af_value(G)
    return g >= a, f"gf={g} Af={a}"


def _prop_gf_ge_af_bipartite(G: Graph):
    if bipartition(G) is None or not is_matchable(G):
        return None
    g, a = gf_value(G), Af_value(G)
    return g >= a, f"gf={g} Af={a}"


def _prop_gf_le_cyclomatic(G: Graph):
    if not G.is_connected() or not is_matchable(G):
        return None
    g = gf_value(G)
    c = cyclomatic_number(G)
    all_conformal = len(conformal_cycles(G)) == sum(1 for _ in enumerate_cycles(G))
    ok = g <= c and ((g == c) == all_conformal)
    return ok, f"gf={g} c={c} all_conformal={all_conformal}"


def _is_planar(G: Graph) -> bool:
    import networkx as nx

    H = nx.Graph()
    H.add_nodes_from(G.vertices)
    H.add_edges_from(G.edges)
    return nx.check_planarity(H)[0]


def _prop_af_eq_compatible(G: Graph):
    if bipartition(G) is None or not is_matchable(G) or not _is_planar(G):
        return None
    for M in enumerate_perfect_matchings(G):
        a, _ = anti_forcing_number(G, M)
        c, _ = compatible_alternating_number(G, M)
        if a != c:
            return False, f"af={a} c'={c} M={sorted(M)}"
    return True, ""


def _bisub_edges(G: Graph, length: int = 3):
    for e in G.edge_list:
        yield e, bisubdivide(G, {e: length})


def _prop_bisub_gf(G: Graph):
    if not is_matchable(G):
        return None
    g = gf_value(G)
    for e, res in _bisub_edges(G):
        g2 = gf_value(res.graph)
        if g2 != g:
            return False, f"edge {e}: gf {g} -> {g2}"
    return True, ""


def _prop_bisub_af(G: Graph):
    if not is_matchable(G):
        return None
    a = Af_value(G)
    for e, res in _bisub_edges(G):
        a2 = Af_value(res.graph)
        if a2 > a:
            return False, f"edge {e}: Af {a} -> {a2}"
    return True, ""


def _prop_bisub_af_preserved(G: Graph):
    if not is_matchable(G) or G.m == 0:
        return None
    a, M = _af_matching(G)
    outside = [e for e in G.edge_list if e not in M]
    if not outside:
        return None
    for e in outside:
        a2 = Af_value(bisubdivide(G, {e: 3}).graph)
        if a2 != a:
            return False, f"edge {e} outside M: Af {a} -> {a2}"
    return True, ""


def _gadget_edge(G: Graph):
    if not is_matchable(G):
        return None
    a, M = _af_matching(G)
    outside = [e for e in G.edge_list if e not in M]
    if not outside:
        return None
    return a, M, outside[0]


def _prop_gadget_increment(G: Graph):
    pick = _gadget_edge(G)
    if pick is None:
        return None
    a, M, e = pick
    g = gf_value(G)
    res = quad_gadget(G, e)
    g2, a2 = gf_value(res.graph), Af_value(res.graph)
    return (g2, a2) == (g + 1, a + 1), f"edge {e}: gf {g}->{g2} Af {a}->{a2}"


def _prop_gadget_matching(G: Graph):
    pick = _gadget_edge(G)
    if pick is None:
        return None
    a, M, e = pick
    res = quad_gadget(G, e)
    Me = gadget_matching(G, res, M)
    got, _ = anti_forcing_number(res.graph, Me)
    best = Af_value(res.graph)
    return got == best, f"edge {e}: af(G_e,M_e)={got} Af(G_e)={best}"


def _prop_quad_equivalence(G: Graph):
    if not is_matchable(G) or G.n > 12:
        return None
    a, M = _af_matching(G)
    outside = [e for e in G.edge_list if e not in M][:2]
    if not outside:
        return None
    plan = {e: 1 for e in outside}
    Q = quad_subdivide(G, plan).graph
    before = gf_value(G) == a
    after = gf_value(Q) == Af_value(Q)
    return before == after, f"plan {sorted(plan)}: equal before={before} after={after}"


def _prop_matching_bijection(G: Graph):
    if not is_matchable(G) or G.m == 0:
        return None
    e = G.edge_list[0]
    res = bisubdivide(G, {e: 3})
    images = {matching_bijection(G, res, M) for M in enumerate_perfect_matchings(G)}
    total = count_perfect_matchings(res.graph)
    return len(images) == total == count_perfect_matchings(G), f"|M(G)|->{len(images)} |M(G')|={total}"


def _prop_ear_decomposition(G: Graph):
    if bipartition(G) is None or G.n < 2 or not is_matching_covered(G):
        return None
    dec = bipartite_ear_decomposition(G)
    return is_valid_ear_decomposition(G, dec), f"ears={len(dec.ears)}"


_ORACLE: StrongUniformityOracle | None = None


def _oracle() -> StrongUniformityOracle:
    global _ORACLE
    if _ORACLE is None:
        _ORACLE = StrongUniformityOracle()
    return _ORACLE


def _group(names: str) -> list[CatalogEntry]:
    return [e for e in default_catalog() if e.name[0] in names]


def _prop_bmt_equivalence(G: Graph):
    if bipartition(G) is None or G.n < 4 or not is_matching_covered(G):
        return None
    su = _oracle().check(G).uniform
    found = screen_catalog(G, _group("A"), stop_at_first=True)
    if found.unknown:
        raise CapExceeded("minor search budget exhausted")
    no_minor = not found.found
    fam = classify_bipartite(G).family
    ok = su == no_minor == (fam != "none")
    return ok, f"uniform={su} no_A_minor={no_minor} family={fam} minors={found.names}"


def _prop_bn_characterization(G: Graph):
    if not is_matchable(G) or not is_bn_graph(G)[0]:
        return None
    su = _oracle().check(G).uniform
    found = screen_catalog(G, _group("AD"), stop_at_first=True)
    if found.unknown:
        raise CapExceeded("minor search budget exhausted")
    no_minor = not found.found
    return su == no_minor, f"uniform={su} no_minor={no_minor} minors={found.names}"


def _prop_su_reduction(G: Graph):
    if not is_matchable(G) or G.m > 14:
        return None
    fast = _oracle().check(G).uniform
    direct = is_strongly_uniform_direct(G)[0]
    return fast == direct, f"oracle={fast} direct={direct}"


def _prop_conformal_routes(G: Graph):
    if not is_matchable(G):
        return None
    a = {c.edges for c in conformal_cycles(G)}
    b = {c.edges for c in conformal_cycles_by_alternation(G)}
    return a == b, f"by_remainder={len(a)} by_alternation={len(b)}"


PROPERTIES: dict[str, Check] = {
    "gf_ge_af_bipartite": _prop_gf_ge_af_bipartite,
    "gf_ge_af": _prop_gf_ge_af,
    "af_eq_compatible_plane": _prop_af_eq_compatible,
    "gf_le_cyclomatic": _prop_gf_le_cyclomatic,
    "bisubdivision_gf_invariant": _prop_bisub_gf,
    "bisubdivision_af_nonincreasing": _prop_bisub_af,
    "bisubdivision_af_preserved": _prop_bisub_af_preserved,
    "gadget_increment": _prop_gadget_increment,
    "gadget_matching_attains": _prop_gadget_matching,
    "quad_equality_equivalence": _prop_quad_equivalence,
    "matching_bijection": _prop_matching_bijection,
    "ear_decomposition": _prop_ear_decomposition,
    "bmt_equivalence": _prop_bmt_equivalence,
    "bn_characterization": _prop_bn_characterization,
    "uniformity_reduction": _prop_su_reduction,
    "conformal_cycle_routes": _prop_conformal_routes,
}

SURGERY_PROPERTIES = (
    "bisubdivision_gf_invariant",
    "bisubdivision_af_nonincreasing",
    "bisubdivision_af_preserved",
    "gadget_increment",
    "gadget_matching_attains",
    "quad_equality_equivalence",
)


def evaluate(name: str, G: Graph) -> tuple[str, str]:
    """Run one property on one graph: ("pass"|"fail"|"skip"|"unknown", detail)."""
    if name not in PROPERTIES:
        raise KeyError(f"unknown property {name!r}")
    try:
        res = PROPERTIES[name](G)
    except CapExceeded as exc:
        return "unknown", str(exc)
    if res is None:
        return "skip", ""
    ok, detail = res
    return ("pass" if ok else "fail"), detail


def _evaluate_packed(args: tuple[str, str]) -> tuple[str, str]:
    name, text = args
    return evaluate(name, parse_graph(text))


def write_artifact(results_dir: str, name: str, G: Graph, detail: str) -> str:
    os.makedirs(results_dir, exist_ok=True)
    path = os.path.join(results_dir, f"{name}.g")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_graph(G, [f"property {name}", detail]))
    return path


def replay_artifact(path: str) -> tuple[str, str]:
    """Re-run the property recorded in a failure artifact."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    name = next(
        line.split()[2] for line in text.splitlines() if line.startswith("# property ")
    )
    return evaluate(name, parse_graph(text))


def verify_theorem(name: str, pool: GraphPool | str, jobs: int = 1,
                   results_dir: str | None = None) -> VerificationReport:
    """Evaluate a named property on every pool member.

    The reported counterexample is the first failing member in pool order,
    whatever the job count.
    """
    if name not in PROPERTIES:
        raise KeyError(f"unknown property {name!r}")
    if isinstance(pool, str):
        pool = build_pool(pool)
    rep = VerificationReport(name, pool.spec.describe())
    members = list(pool)
    if jobs > 1 and len(members) > 1:
        with ProcessPoolExecutor(jobs) as ex:
            outcomes = list(ex.map(_evaluate_packed, [(name, serialize_graph(G)) for G in members],
                                   chunksize=8))
    else:
        outcomes = [evaluate(name, G) for G in members]
    for G, (status, detail) in zip(members, outcomes):
        if status == "pass":
            rep.passed += 1
        elif status == "skip":
            rep.skipped += 1
        elif status == "unknown":
            rep.unknown += 1
        else:
            rep.failed += 1
            if rep.first_failure is None:
                rep.first_failure = Failure(G, detail)
    if rep.first_failure is not None and results_dir:
        rep.artifact = write_artifact(results_dir, name, rep.first_failure.graph, rep.first_failure.detail)
    return rep


def verify_on_graphs(name: str, graphs: list[Graph], label: str) -> VerificationReport:
    """verify_theorem over an explicit list, e.g. catalog graphs."""
    from .pools import PoolSpec

    pool = GraphPool(PoolSpec(kind="exhaustive", n=max((G.n for G in graphs), default=0)), graphs)
    rep = verify_theorem(name, pool)
    rep.pool = label
    return rep

"""Command-line entry point."""
from __future__ import annotations

import argparse
import sys

from .cycles import is_bn_graph
from .families import CatalogError, classify_bipartite, classify_bn, default_catalog_text, load_catalog, parse_catalog
from .forcing import anti_forcing_number, forcing_report
from .graph import Graph, GraphFormatError, bipartition, cyclomatic_number, read_graph, serialize_graph
from .matching import CapExceeded, NotMatchableError, format_edges, is_matchable, is_matching_covered, matching_from_literal
from .minors import DEFAULT_NODE_BUDGET, screen_catalog
from .pools import parse_pool_spec
from .surgery import PlanError, bipartite_ear_decomposition, bisubdivide, quad_subdivide
from .uniform import DEFAULT_SUBGRAPH_CAP, StrongUniformityOracle

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3

TSV_COLUMNS = {
    "analyze": ["file", "n", "m", "gf", "Af", "c", "bn", "mc", "bipartite", "matchable", "matchings"],
    "af": ["file", "af", "witness"],
    "minors": ["file", "found", "unknown"],
    "classify": ["file", "family", "base"],
    "uniform": ["file", "uniform", "counterexample"],
    "eardecomp": ["file", "base_edge", "ears"],
    "verify-tables": ["property", "passed", "failed", "failing"],
    "verify-theorems": ["property", "pool", "passed", "failed", "skipped", "unknown"],
}

EPILOG = """exit status: 0 success or all checks passed, 1 a checked property failed
(uniform=false, a verification failure), 2 usage, file or parse error,
3 a cap or search budget was exceeded (result unknown).

--tsv prints a header row and then one tab-separated record per result:
""" + "\n".join(f"  {cmd}: {' '.join(cols)}" for cmd, cols in TSV_COLUMNS.items())


class UsageError(Exception):
    pass


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _emit(args, cmd: str, record: dict, human: str) -> None:
    if args.tsv:
        if not getattr(args, "_header_done", False):
            print("\t".join(TSV_COLUMNS[cmd]))
            args._header_done = True
        print("\t".join(str(record[c]) for c in TSV_COLUMNS[cmd]))
    else:
        print(human)


def _catalog(args, check: bool = False):
    if args.catalog:
        with open(args.catalog, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = default_catalog_text()
    return load_catalog(text, check=check)


def _parse_plan(text: str) -> dict:
    plan = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        edge, sep, val = part.partition(":")
        a, dash, b = edge.partition("-")
        if not sep or not dash:
            raise UsageError(f"bad plan item {part!r}; expected u-v:value")
        try:
            u, v, k = int(a), int(b), int(val)
        except ValueError:
            raise UsageError(f"bad plan item {part!r}") from None
        plan[(min(u, v), max(u, v))] = k
    return plan


# ---------------------------------------------------------------------------

def cmd_analyze(args) -> int:
    for path in args.files:
        G = read_graph(path)
        matchable = is_matchable(G)
        c = cyclomatic_number(G)
        rec = {"file": path, "n": G.n, "m": G.m, "gf": "", "Af": "", "c": c,
               "bn": _bool(matchable and is_bn_graph(G)[0]), "mc": _bool(is_matching_covered(G)),
               "bipartite": _bool(bipartition(G) is not None), "matchable": _bool(matchable), "matchings": 0}
        if matchable:
            rep = forcing_report(G, cap=args.matching_cap)
            rec.update(gf=rep.gf, Af=rep.Af, matchings=rep.pm_count)
            human = f"{path}: n={G.n} m={G.m} gf={rep.gf} Af={rep.Af} c={c}"
        else:
            human = f"{path}: n={G.n} m={G.m} c={c}"
        human += " " + " ".join(f"{k}={rec[k]}" for k in ("bn", "mc", "bipartite", "matchable", "matchings"))
        if args.witness and matchable:
            human += (f"\n  gf set: {format_edges(rep.gf_witness)}"
                      f"\n  Af matching: {format_edges(rep.Af_matching)} anti-forcing set: {format_edges(rep.Af_witness)}")
        _emit(args, "analyze", rec, human)
    return EXIT_OK


def cmd_af(args) -> int:
    G = read_graph(args.file)
    M = matching_from_literal(args.matching)
    try:
        value, witness = anti_forcing_number(G, M)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    human = f"af={value}"
    if args.witness:
        human += f" witness={{{format_edges(witness)}}}"
    _emit(args, "af", {"file": args.file, "af": value, "witness": format_edges(witness)}, human)
    return EXIT_OK


def _select(entries, names: str | None):
    if not names:
        return entries
    wanted = set(names.split(","))
    missing = wanted - {e.name for e in entries}
    if missing:
        raise UsageError(f"no catalog entries named {sorted(missing)}")
    return [e for e in entries if e.name in wanted]


def cmd_minors(args) -> int:
    entries = _select(_catalog(args), args.names)
    if not args.names:
        groups = ("A", "D") if args.only == "all" else (args.only,)
        entries = [e for e in entries if e.group in groups]
    status = EXIT_OK
    for path in args.files:
        G = read_graph(path)
        res = screen_catalog(G, entries, budget=args.node_budget, stop_at_first=args.first)
        if res.unknown:
            status = EXIT_UNKNOWN
        human = f"{path}: found={','.join(res.names) or '-'}"
        if res.unknown:
            human += f" unknown={','.join(res.unknown)}"
        if args.witness:
            for name, emb in res.found:
                paths = "; ".join(f"{u}-{v}:{'-'.join(map(str, p))}" for (u, v), p in sorted(emb.path_map.items()))
                human += f"\n  {name}: {paths}"
        _emit(args, "minors", {"file": path, "found": ",".join(res.names), "unknown": ",".join(res.unknown)}, human)
    return status


def cmd_classify(args) -> int:
    entries = _catalog(args)
    for path in args.files:
        G = read_graph(path)
        try:
            label = classify_bipartite(G) if bipartition(G) is not None else classify_bn(G, entries)
        except ValueError as exc:
            raise UsageError(f"{path}: {exc}") from None
        human = f"{path}: {label}"
        if args.witness and label.subdivision:
            human += "\n  " + "; ".join(
                f"{u}-{v}:{'-'.join(map(str, p))}" for (u, v), p in sorted(label.subdivision.items()))
        if args.witness and label.profile is not None:
            human += "\n  chords: " + ", ".join(f"{u}-{v}:{r}" for (u, v), r in sorted(label.profile.chords.items()))
        _emit(args, "classify", {"file": path, "family": label.family, "base": label.base or ""}, human)
    return EXIT_OK


def cmd_uniform(args) -> int:
    oracle = StrongUniformityOracle(args.cap)
    status = EXIT_OK
    for path in args.files:
        G = read_graph(path)
        if not is_matchable(G):
            raise UsageError(f"{path}: graph has no perfect matching")
        res = oracle.check(G)
        cex = format_edges(res.counterexample) if res.counterexample else ""
        human = f"{path}: uniform={_bool(res.uniform)}"
        if not res.uniform:
            status = EXIT_FAIL
            human += f" gf={res.gf} Af={res.Af}"
            if args.witness:
                human += f" counterexample={{{cex}}}"
        _emit(args, "uniform", {"file": path, "uniform": _bool(res.uniform), "counterexample": cex}, human)
    return status


def cmd_surgery(args) -> int:
    G = read_graph(args.file)
    if bool(args.bisubdivide) == bool(args.quad):
        raise UsageError("give exactly one of --bisubdivide and --quad")
    plan = _parse_plan(args.bisubdivide or args.quad)
    res = bisubdivide(G, plan) if args.bisubdivide else quad_subdivide(G, plan)
    comments = ["replacement"] + [
        f"{u}-{v}: {'-'.join(map(str, p))}" for (u, v), p in sorted(res.replacement_paths.items())
    ]
    sys.stdout.write(serialize_graph(res.graph, comments))
    return EXIT_OK


def cmd_eardecomp(args) -> int:
    G = read_graph(args.file)
    try:
        dec = bipartite_ear_decomposition(G)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ears = " ".join("-".join(map(str, p)) for p in dec.ears)
    human = f"base {dec.base_edge[0]}-{dec.base_edge[1]}\n" + "\n".join(
        f"ear {i + 1}: {'-'.join(map(str, p))}" for i, p in enumerate(dec.ears))
    _emit(args, "eardecomp", {"file": args.file, "base_edge": f"{dec.base_edge[0]}-{dec.base_edge[1]}", "ears": ears},
          human)
    return EXIT_OK


def cmd_verify_tables(args) -> int:
    from .verify import verify_tables

    entries = _catalog(args, check=False)
    rep = verify_tables(entries)
    _emit(args, "verify-tables", {"property": rep.property, "passed": rep.passed, "failed": rep.failed,
                                  "failing": ",".join(rep.failures)}, rep.line())
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_verify_theorems(args) -> int:
    from .verify import PROPERTIES, build_pool, verify_theorem

    names = list(PROPERTIES) if args.property == "all" else args.property.split(",")
    for name in names:
        if name not in PROPERTIES:
            raise UsageError(f"unknown property {name!r}; known: {', '.join(PROPERTIES)}")
    try:
        spec = parse_pool_spec(args.pool)
        pool = build_pool(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    worst = EXIT_OK
    for name in names:
        rep = verify_theorem(name, pool, jobs=args.jobs, results_dir=args.results_dir)
        _emit(args, "verify-theorems", {"property": name, "pool": rep.pool, "passed": rep.passed,
                                        "failed": rep.failed, "skipped": rep.skipped, "unknown": rep.unknown},
              rep.line())
        if rep.failed:
            worst = EXIT_FAIL
        elif rep.unknown and worst == EXIT_OK:
            worst = EXIT_UNKNOWN
    return worst


# ---------------------------------------------------------------------------

def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tsv", action="store_true", help="tab-separated output")
    common.add_argument("--witness", action="store_true", help="print certificates")
    common.add_argument("--catalog", help="catalog file (default: $FORCING_LAB_CATALOG or the bundled one)")
    common.add_argument("--matching-cap", type=_positive, default=10**6, help="perfect matching cap")
    common.add_argument("--node-budget", type=_positive, default=DEFAULT_NODE_BUDGET, help="minor search node budget")
    common.add_argument("--jobs", type=_positive, default=1, help="worker processes for pool checks")

    p = argparse.ArgumentParser(
        prog="forcing-lab",
        description="Global forcing and anti-forcing numbers, conformal minors and strong uniformity.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", parents=[common], help="gf, Af, cyclomatic number, BN")
    s.add_argument("files", nargs="+")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("af", parents=[common], help="af(G, M) for a given perfect matching")
    s.add_argument("file")
    s.add_argument("--matching", required=True, help="u-v,u-v,...")
    s.set_defaults(func=cmd_af)

    s = sub.add_parser("minors", parents=[common], help="screen for catalog conformal minors")
    s.add_argument("files", nargs="+")
    s.add_argument("--only", choices=["A", "D", "all"], default="all", help="which excluded-minor family to screen")
    s.add_argument("--names", help="comma-separated entry names (overrides --only)")
    s.add_argument("--first", action="store_true", help="stop at the first minor found")
    s.set_defaults(func=cmd_minors)

    s = sub.add_parser("classify", parents=[common], help="structural family of a graph")
    s.add_argument("files", nargs="+")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("uniform", parents=[common], help="strong uniformity test")
    s.add_argument("files", nargs="+")
    s.add_argument("--cap", type=_positive, default=DEFAULT_SUBGRAPH_CAP, help="subgraph class cap")
    s.set_defaults(func=cmd_uniform)

    s = sub.add_parser("surgery", parents=[common], help="bisubdivision or quadrilateral subdivision")
    s.add_argument("file")
    s.add_argument("--bisubdivide", help="u-v:length,...")
    s.add_argument("--quad", help="u-v:k,...")
    s.set_defaults(func=cmd_surgery)

    s = sub.add_parser("eardecomp", parents=[common], help="bipartite ear decomposition")
    s.add_argument("file")
    s.set_defaults(func=cmd_eardecomp)

    s = sub.add_parser("verify-tables", parents=[common], help="recompute the catalog's recorded values")
    s.set_defaults(func=cmd_verify_tables)

    s = sub.add_parser("verify-theorems", parents=[common], help="check named properties over a pool")
    s.add_argument("--property", default="all", help="property name, comma list or 'all'")
    s.add_argument("--pool", required=True,
                   help='"exhaustive:n=8,filter=bipartite+mc" or "random:n=10,p=0.4,count=100,seed=7"')
    s.add_argument("--results-dir", default="results", help="where failure artifacts are written")
    s.set_defaults(func=cmd_verify_theorems)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"unknown: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except (UsageError, GraphFormatError, CatalogError, PlanError, NotMatchableError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

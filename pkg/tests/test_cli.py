import pytest

from forcing_lab.cli import EXIT_FAIL, EXIT_OK, EXIT_UNKNOWN, EXIT_USAGE, TSV_COLUMNS, main
from forcing_lab.forcing import is_anti_forcing_set
from forcing_lab.graph import complete_bipartite, complete_graph, cycle_graph, parse_graph, serialize_graph
from forcing_lab.matching import matching_from_literal


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, G in {"c6": cycle_graph(6), "k4": complete_graph(4), "k33": complete_bipartite(3, 3),
                    "c5": cycle_graph(5)}.items():
        p = tmp_path / f"{name}.g"
        p.write_text(serialize_graph(G))
        out[name] = str(p)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_analyze_c6(capsys, files):
    code, out, _ = run(capsys, "analyze", files["c6"])
    assert code == EXIT_OK
    assert "gf=1 Af=1 c=1 bn=true" in out


def test_analyze_unmatchable(capsys, files):
    code, out, _ = run(capsys, "analyze", files["c5"])
    assert code == EXIT_OK and "matchable=false" in out


def test_af_k4(capsys, files):
    code, out, _ = run(capsys, "af", files["k4"], "--matching", "1-2,3-4", "--witness")
    assert code == EXIT_OK and out.startswith("af=2")
    # the reported witness is one optimum; {2-3, 2-4} is another
    witness = matching_from_literal(out.split("witness={")[1].rstrip("}\n"))
    M = {(1, 2), (3, 4)}
    assert len(witness) == 2 and is_anti_forcing_set(complete_graph(4), M, witness)
    assert is_anti_forcing_set(complete_graph(4), M, {(2, 3), (2, 4)})


def test_af_rejects_non_matching(capsys, files):
    code, _, err = run(capsys, "af", files["k4"], "--matching", "1-2")
    assert code == EXIT_USAGE and "error" in err


def test_uniform_exit_codes(capsys, files):
    assert run(capsys, "uniform", files["c6"])[0] == EXIT_OK
    code, out, _ = run(capsys, "uniform", files["k33"], "--witness")
    assert code == EXIT_FAIL and "uniform=false" in out and "counterexample=" in out
    assert run(capsys, "uniform", files["k4"], "--cap", "1")[0] == EXIT_UNKNOWN


def test_usage_errors(capsys, files, tmp_path):
    assert run(capsys, "analyze", str(tmp_path / "missing.g"))[0] == EXIT_USAGE
    bad = tmp_path / "bad.g"
    bad.write_text("p 3 1\ne 1 1\n")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == EXIT_USAGE and "line 2" in err
    assert run(capsys, "bogus")[0] == EXIT_USAGE
    assert run(capsys, "analyze", files["c6"], "--matching-cap", "0")[0] == EXIT_USAGE
    assert run(capsys, "surgery", files["c6"])[0] == EXIT_USAGE
    assert run(capsys, "surgery", files["c6"], "--bisubdivide", "1-3:3")[0] == EXIT_USAGE


def test_tsv_is_stable(capsys, files):
    args = ["analyze", "--tsv", files["c6"], files["k4"], files["k33"]]
    first = run(capsys, *args)[1]
    assert first == run(capsys, *args)[1]
    rows = [line.split("\t") for line in first.splitlines()]
    assert rows[0] == TSV_COLUMNS["analyze"]
    for row in rows[1:]:
        rec = dict(zip(rows[0], row))
        for col in ("n", "m", "gf", "Af", "c", "matchings"):
            int(rec[col])
    assert dict(zip(rows[0], rows[3]))["gf"] == "4"


def test_surgery_output_parses(capsys, files):
    code, out, _ = run(capsys, "surgery", files["k4"], "--quad", "1-2:1")
    assert code == EXIT_OK
    G = parse_graph(out)
    assert (G.n, G.m) == (8, 11)
    assert "# 1-2: 1-5-6-7-8-2" in out


def test_eardecomp(capsys, files):
    code, out, _ = run(capsys, "eardecomp", files["k33"])
    assert code == EXIT_OK and out.count("ear ") == 4
    assert run(capsys, "eardecomp", files["k4"])[0] == EXIT_USAGE


def test_help_documents_columns(capsys):
    assert main(["--help"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "verify-theorems: property pool passed failed skipped unknown" in out

import io
import json
import subprocess
import sys

import pytest

from annihilator import families
from annihilator.cli import EXIT_ERROR, EXIT_OK, EXIT_VIOLATION, main
from annihilator.formats import write_graph6

from conftest import DATA


def run(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_table_lists_every_row(monkeypatch, capsys):
    g6 = write_graph6(families.make_star(6)) + "\n"
    code, out, _ = run(["analyze"], g6, monkeypatch, capsys)
    assert code == EXIT_OK
    assert "alpha=5 mu=1 a=5 gap=0" in out
    for bound in ("TREE_HALF_MU", "COR_KE", "NONSTAR_A_N_MINUS_2"):
        assert bound in out
    assert "NOT_APPLICABLE" in out


def test_analyze_json_and_edge_list_input(monkeypatch, capsys, tmp_path):
    path = tmp_path / "ke12.txt"
    main(["generate", "ke-12", "--format", "edgelist", "--output", str(path)])
    code, out, _ = run(["analyze", "--input", str(path), "--format", "json"], "",
                       monkeypatch, capsys)
    assert code == EXIT_OK
    doc = json.loads(out)["graphs"][0]
    assert (doc["n"], doc["m"], doc["alpha"], doc["mu"], doc["a"]) == (12, 22, 6, 6, 9)
    sqrt_row = next(r for r in doc["bounds"] if r["bound"] == "BIPARTITE_SQRT")
    assert sqrt_row["status"] == "NOT_APPLICABLE" and sqrt_row["diagnostic"] == "VIOLATED"


def test_analyze_csv(monkeypatch, capsys):
    code, out, _ = run(["analyze", "--format", "csv"], "A_\nBw\n", monkeypatch, capsys)
    assert code == EXIT_OK and len(out.splitlines()) == 3


def test_analyze_errors(monkeypatch, capsys):
    code, _, err = run(["analyze"], "A_\n!!\n", monkeypatch, capsys)
    assert code == EXIT_ERROR and "line 2" in err
    code, out, err = run(["analyze", "--tolerant", "--format", "graph6"], "A_\n!!\n",
                         monkeypatch, capsys)
    assert code == EXIT_OK and out == "A_\n" and "skipped" in err
    code, _, _ = run(["analyze"], "", monkeypatch, capsys)
    assert code == EXIT_ERROR
    code, _, _ = run(["analyze", "--input", "/nonexistent/file"], "", monkeypatch, capsys)
    assert code == EXIT_ERROR


def test_usage_errors_exit_1(monkeypatch, capsys):
    with pytest.raises(SystemExit) as info:
        main(["analyze", "--no-such-flag"])
    assert info.value.code == EXIT_ERROR
    with pytest.raises(SystemExit) as info:
        main(["generate", "star", "x"])
    assert info.value.code == EXIT_ERROR


def test_budget_env(monkeypatch, capsys):
    import random

    rng = random.Random(0)
    from annihilator.graph import build_graph
    g = build_graph(90, [(u, v) for v in range(90) for u in range(v) if rng.random() < 0.08])
    monkeypatch.setenv("ANNIHILATOR_BUDGET", "5")
    code, out, err = run(["analyze"], write_graph6(g) + "\n", monkeypatch, capsys)
    assert code == EXIT_OK
    assert "alpha=?" in out and "budget" in err


def test_generate(monkeypatch, capsys):
    code, out, err = run(["generate", "bipartite-p", "3", "--self-check"], "", monkeypatch, capsys)
    assert code == EXIT_OK and out.strip() == write_graph6(families.make_bipartite_p(3))
    assert "self-check passed" in err
    code, _, _ = run(["generate", "spider"], "", monkeypatch, capsys)
    assert code == EXIT_OK
    code, _, err = run(["generate", "tree-mu5", "4"], "", monkeypatch, capsys)
    assert code == EXIT_ERROR and "n >= 10" in err
    code, _, _ = run(["generate", "dodecahedron"], "", monkeypatch, capsys)
    assert code == EXIT_ERROR


def test_verify(monkeypatch, capsys):
    code, out, _ = run(["verify"], "", monkeypatch, capsys)
    assert code == EXIT_OK
    assert out.count("PASS") == len(families.default_fixtures()) and "FAIL" not in out


def test_search_trees_and_determinism(monkeypatch, capsys, tmp_path):
    outputs = []
    for workers in ("1", "2"):
        csv, summary = tmp_path / f"t{workers}.csv", tmp_path / f"t{workers}.json"
        code, _, _ = run(["search", "--trees", "2-7", "--workers", workers, "--output",
                          str(csv), "--summary", str(summary)], "", monkeypatch, capsys)
        assert code == EXIT_OK
        outputs.append((csv.read_bytes(), summary.read_bytes()))
    assert outputs[0] == outputs[1]
    assert b"runtime" not in outputs[0][1]


def test_search_stream_filter(monkeypatch, capsys):
    stdin = (DATA / "connected_n6.g6").read_text()
    code, out, _ = run(["search", "--stdin", "--filter", "bipartite"], stdin, monkeypatch, capsys)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["total"] == doc["bounds"]["BIPARTITE_SQRT"]["HOLDS"] + \
        doc["bounds"]["BIPARTITE_SQRT"]["EQUALITY"]
    code, _, _ = run(["search", "--stdin", "--filter", "planar"], stdin, monkeypatch, capsys)
    assert code == EXIT_ERROR
    code, _, _ = run(["search", "--trees", "12"], "", monkeypatch, capsys)
    assert code == EXIT_ERROR
    code, _, _ = run(["search", "--trees", "5", "--workers", "0"], "", monkeypatch, capsys)
    assert code == EXIT_ERROR


def test_search_reports_violation_exit_code(monkeypatch, capsys):
    # no real input breaks a proven bound, so stub the summary
    from annihilator import cli
    from annihilator.search import SearchSummary

    def fake_scan(*a, **k):
        s = SearchSummary()
        s.proven_violations = 1
        return s
    monkeypatch.setattr(cli, "run_scan", fake_scan)
    code, _, _ = run(["search", "--stdin"], "A_\n", monkeypatch, capsys)
    assert code == EXIT_VIOLATION


def test_probe(monkeypatch, capsys):
    code, out, _ = run(["probe", "--input", str(DATA / "bipartite_n1_8.g6"), "--max-n", "8",
                        "--include-families"], "", monkeypatch, capsys)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["witness"]["n"] == 6 and doc["witness"]["certified"]


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "annihilator.cli", "generate", "star", "4"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == write_graph6(families.make_star(4))

import json
import subprocess
import sys

import pytest

from parideal.cli import main
from parideal.verify import SCHEMA, run_suite
from parideal.rootsys import build_root_system


def run(*argv):
    lines = []
    code = main(list(argv), out=lines.append)
    return code, "\n".join(lines)


def test_roots_a2():
    code, text = run("roots", "--type", "A", "--rank", "2", "--format", "json")
    data = json.loads(text)
    assert code == 0
    assert data["schema"] == SCHEMA
    assert data["count"] == 3
    assert data["theta"] == [1, 1]
    assert [r["theta"] for r in data["roots"]] == [False, False, True]


def test_roots_f4_count():
    code, text = run("roots", "--type", "F", "--rank", "4", "--format", "json")
    assert json.loads(text)["count"] == 24


def test_roots_epsilon_b3():
    code, text = run("roots", "--type", "B", "--rank", "3", "--epsilon", "--format", "json")
    roots = json.loads(text)["roots"]
    alpha3 = next(r for r in roots if r["coeffs"] == [0, 0, 1])
    assert alpha3["epsilon"] == [0, 0, 1]


def test_roots_pretty_marks_theta():
    code, text = run("roots", "--type", "G", "--rank", "2")
    assert "(2,3)  ht 5  <- theta" in text


def test_epsilon_rejected_for_exceptional(capsys):
    code, _ = run("roots", "--type", "G", "--rank", "2", "--epsilon")
    assert code == 2


@pytest.mark.parametrize("argv", [
    ("roots", "--type", "X", "--rank", "3"),
    ("roots", "--type", "B", "--rank", "1"),
    ("roots", "--type", "A"),
    ("antichains", "--type", "A", "--rank", "3", "--J", "4"),
    ("antichains", "--type", "A", "--rank", "3", "--J", "a,b"),
    ("verify", "--type", "A", "--rank", "2", "--suite", "nonsense"),
    (),
])
def test_usage_errors(argv, capsys):
    assert run(*argv)[0] == 2


@pytest.mark.parametrize("extra,count", [((), 8), (("--size", "1"), 6), (("--J", "1"), 4)])
def test_antichain_counts(extra, count):
    code, text = run("antichains", "--type", "A", "--rank", "3", "--abelian", *extra)
    assert code == 0
    assert text.splitlines()[-1] == f"count: {count}"


def test_antichains_csv():
    code, text = run("antichains", "--type", "A", "--rank", "2", "--format", "csv")
    lines = text.splitlines()
    assert lines[0] == "index,size,roots"
    assert len(lines) == 1 + 5


def test_verify_peterson_d4():
    code, text = run("verify", "--suite", "peterson", "--type", "D", "--rank", "4", "--format", "json")
    data = json.loads(text)
    assert code == 0 and data["passed"]
    total = next(c for c in data["claims"] if c["claim"] == "abelian-total")
    assert total["total"] == 16


def test_verify_theorem2_b2():
    code, text = run("verify", "--suite", "theorem2", "--type", "B", "--rank", "2", "--format", "json")
    claim = json.loads(text)["claims"][0]
    assert code == 0
    assert claim["instances_checked"] == 255 and claim["failure_count"] == 0


def test_verify_corollary_f4():
    code, text = run("verify", "--suite", "corollary", "--type", "F", "--rank", "4", "--format", "json")
    data = json.loads(text)
    assert code == 0
    fixture = next(c for c in data["claims"] if c["claim"] == "f4-fixture")
    assert fixture["two_rho"] == [7, 14, 21, 14] and fixture["J"] == [1, 2, 3]


@pytest.mark.parametrize("argv", [
    ("--suite", "theorem2", "--type", "A", "--rank", "4"),
    ("--suite", "lemmas", "--type", "A", "--rank", "5"),
    ("--suite", "bijection", "--type", "A", "--rank", "3", "--max-rank", "2"),
])
def test_scale_cap(argv, capsys):
    code, _ = run("verify", *argv)
    assert code == 3
    assert "scale cap exceeded" in capsys.readouterr().err


def test_verify_failure_exit_code(monkeypatch):
    import parideal.verify as v

    monkeypatch.setitem(v._RUNNERS, "lemmas", lambda rs: [
        {"claim": "forced", "instances_checked": 1, "failure_count": 1, "failures": [{"x": 1}]}])
    code, text = run("verify", "--suite", "lemmas", "--type", "A", "--rank", "2")
    assert code == 1
    assert "counterexample" in text


def test_classify_g2_long_only():
    code, text = run("classify", "--type", "G", "--rank", "2", "--format", "json")
    rs = build_root_system("G2")
    sets = json.loads(text)["sets"]
    assert code == 0 and sets
    assert all(rs.is_long(tuple(a)) for r in sets for a in r["roots"])


def test_classify_a2_csv():
    code, text = run("classify", "--type", "A", "--rank", "2", "--format", "csv")
    lines = text.splitlines()
    assert lines[0] == "family,I,J,size,two_rho,all_conditions"
    assert len(lines) == 13
    assert all(line.startswith("A,") and line.endswith(",1") for line in lines[1:])


@pytest.mark.parametrize("fmt", ["json", "csv"])
def test_output_is_deterministic(fmt):
    argv = ("antichains", "--type", "B", "--rank", "4", "--abelian", "--format", fmt)
    first = run(*argv)[1]
    assert run(*argv, "--threads", "3")[1] == first
    assert run(*argv)[1] == first


def test_report_shape():
    rep = run_suite(build_root_system("A2"), "lemmas")
    assert rep["schema"] == SCHEMA
    for c in rep["claims"]:
        assert {"claim", "instances_checked", "failure_count", "failures"} <= set(c)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "parideal", "roots", "--type", "A", "--rank", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "1 positive roots" in proc.stdout

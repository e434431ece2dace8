import csv
import io
from pathlib import Path

import pytest

from hyptree.canonical import u3, u7
from hyptree.cli import main
from hyptree.solver import min_depth
from hyptree.trees import QueryModel

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_solve_examples(capsys):
    code, out, _ = run(capsys, "solve", "--system", "u7", "--n", "7", "--model", "m1")
    assert code == 0
    assert rows(out)[0]["depth"] == "3"
    _, out, _ = run(capsys, "solve", "--system", "u6", "--n", "3", "--model", "m4")
    assert rows(out)[0]["depth"] == "1"
    _, out, _ = run(capsys, "solve", "--table", str(GOLDEN / "cube2.csv"), "--model", "m5")
    assert out.splitlines()[0] == "system,n,model,depth,nodes,memo_hits,time_ms"
    assert rows(out)[0]["depth"] == "2"


def test_solve_all_models_match_library(capsys):
    _, out, _ = run(capsys, "solve", "--system", "u3", "--n", "3", "--attrs", "p1,p2,p3,l3")
    s = u3(3)
    z = s.problem(["p1", "p2", "p3", "l3"])
    got = {r["model"]: int(r["depth"]) for r in rows(out)}
    assert got == {str(m): min_depth(s, z, m).depth for m in QueryModel}


@pytest.mark.parametrize(
    "argv, golden",
    [
        (["solve", "--system", "u3", "--n", "2", "--model", "m5", "--dot"], "u3_2_m5.dot"),
        (["strategy", "--kind", "halving", "--system", "u7", "--n", "3", "--r", "2", "--dot"], "u7_3_halving.dot"),
        (["export", "--dot", "--table", str(GOLDEN / "cube2.csv"), "--model", "m4"], "cube2_m4.dot"),
        (["classify", "--system", "u7", "--n", "7", "--format", "json"], "u7_7_classify.json"),
        (["shannon", "--system", "u7", "--n", "7"], "u7_7_shannon.csv"),
    ],
)
def test_golden_outputs(capsys, argv, golden):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_out_file_matches_stdout(capsys, tmp_path):
    argv = ["shannon", "--system", "u6", "--n", "4", "--model", "m4"]
    _, out, _ = run(capsys, *argv)
    run(capsys, *argv, "--out", str(tmp_path / "s.csv"))
    assert (tmp_path / "s.csv").read_text() == out
    assert [r["depth"] for r in rows(out)] == ["1"] * 4


def test_export_depth_zero_tree(capsys, tmp_path):
    path = tmp_path / "one.csv"
    path.write_text("element,f1,f2\na,1,0\nb,1,0\n")
    _, out, _ = run(capsys, "export", "--dot", "--table", str(path))
    assert out == 'digraph tree {\n  n0 [label="10", shape=box];\n}\n'


def test_export_table_roundtrip(capsys):
    _, out, _ = run(capsys, "export", "--table", str(GOLDEN / "cube2.csv"))
    assert out == (GOLDEN / "cube2.csv").read_text()


def test_strategy_summary_rows(capsys):
    _, out, _ = run(capsys, "strategy", "--kind", "halving", "--system", "u7", "--n", "7", "--r", "2")
    row = rows(out)[0]
    assert row["bound"] == "6" and row["verified"] == "1"
    for kind, extra in [("sequential", []), ("ksystem", ["--r", "2"]), ("proper-only", [])]:
        code, out, _ = run(capsys, "strategy", "--kind", kind, "--system", "u6", "--n", "4", *extra)
        assert code == 0 and rows(out)[0]["verified"] == "1"
    _, out, _ = run(capsys, "strategy", "--kind", "complete", "--system", "u6", "--n", "4", "--d", "2")
    assert rows(out)[0]["found"] == "0"


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", "--system", "u3", "--n", "3")
    assert code == 0
    assert "{p1=0, p2=0, p3=0, l3=0}" in out
    assert "independence dimension  1" in out


def test_config_precedence(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# defaults\nsystem = u7\nn = 7\nmodel = m1\nno-timing = true\n")
    _, out, _ = run(capsys, "solve", "--config", str(cfg))
    assert rows(out)[0]["depth"] == "3" and rows(out)[0]["time_ms"] == "0"
    _, out, _ = run(capsys, "solve", "--config", str(cfg), "--n", "3")
    assert rows(out)[0]["depth"] == "2"


def test_config_errors(capsys, tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("colour = blue\n")
    assert run(capsys, "solve", "--config", str(cfg))[0] == 2
    cfg.write_text("no equals sign\n")
    assert run(capsys, "solve", "--config", str(cfg))[0] == 3


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "solve", "--system", "u9", "--n", "2")[0] == 2
    assert run(capsys, "solve", "--system", "u7")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--system", "u7", "--table", "x.csv"])
    assert exc.value.code == 2
    bad = tmp_path / "bad.csv"
    bad.write_text("element,f1\na,7\n")
    assert run(capsys, "solve", "--table", str(bad))[0] == 3
    code, out, err = run(capsys, "shannon", "--system", "u3", "--n", "4", "--budget", "10")
    assert code == 4
    assert "budget-exceeded" in out and "budget" in err
    code, _, err = run(capsys, "strategy", "--kind", "halving", "--system", "u3", "--n", "2", "--r", "2")
    assert code == 5 and "2-i-reduced" in err


def test_shannon_budget_reported_per_row(capsys):
    _, out, _ = run(capsys, "shannon", "--system", "u7", "--n", "5", "--model", "m1", "--budget", "15")
    depths = [r["depth"] for r in rows(out)]
    assert depths == ["1", "2", "budget-exceeded", "budget-exceeded", "budget-exceeded"]


def test_shannon_deterministic_across_threads(capsys):
    argv = ["shannon", "--system", "u3", "--n", "4", "--model", "all"]
    _, one, _ = run(capsys, *argv)
    _, again, _ = run(capsys, *argv)
    _, four, _ = run(capsys, *argv, "--threads", "4")
    assert one == again == four


def test_corpus_is_seeded(capsys, tmp_path):
    run(capsys, "corpus", "--seed", "5", "--count", "3", "--out", str(tmp_path / "a"))
    run(capsys, "corpus", "--seed", "5", "--count", "3", "--out", str(tmp_path / "b"))
    for name in ("table_0000.csv", "table_0002.csv"):
        assert (tmp_path / "a" / name).read_text() == (tmp_path / "b" / name).read_text()


def test_u7_depths_from_cli_equal_library(capsys):
    s = u7(5)
    _, out, _ = run(capsys, "solve", "--system", "u7", "--n", "5")
    for r in rows(out):
        assert int(r["depth"]) == min_depth(s, s.problem(), QueryModel.parse(r["model"])).depth

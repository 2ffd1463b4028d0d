import csv
import io
import json
import subprocess
import sys

import pytest

from resdom.cli import SWEEP_HEADER, main
from resdom.graph import complete, from_edge_list, path, to_edge_list


@pytest.fixture
def write(tmp_path):
    def _write(name, g_or_text):
        p = tmp_path / name
        p.write_text(g_or_text if isinstance(g_or_text, str) else to_edge_list(g_or_text))
        return str(p)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_path10(capsys, write):
    code, out, _ = run(capsys, "compute", "--input", write("p10.el", path(10)), "--k", "2",
                       "--invariants", "gammark")
    assert code == 0
    (inv,) = json.loads(out)["invariants"]
    assert inv["name"] == "GAMMA_RK" and inv["value"] == 2 and len(inv["witness"]) == 2


def test_compute_k5_all(capsys, write):
    code, out, _ = run(capsys, "compute", "--input", write("k5.el", complete(5)), "--k", "3")
    values = {r["name"]: r["value"] for r in json.loads(out)["invariants"]}
    assert code == 0 and values == {"DIM": 4, "GAMMA_K": 1, "GAMMA_RK": 4, "LD_K": 4}


def test_compute_csv(capsys, write):
    code, out, _ = run(capsys, "compute", "--input", write("p4.el", path(4)), "--format", "csv",
                       "--invariants", "ldk")
    assert code == 0
    assert out.splitlines() == ["invariant,k,value,witness", "LD_K,1,2,0 2"]


def test_compute_disconnected_is_domain_error(capsys, write):
    code, _, err = run(capsys, "compute", "--input", write("d.el", "4 1\n0 1\n"), "--k", "1",
                       "--invariants", "dim")
    assert code == 1 and "disconnected" in err


def test_compute_parse_error(capsys, write):
    code, _, err = run(capsys, "compute", "--input", write("bad.el", "3 2\n0 1\n0 1\n"))
    assert code == 2 and "line 3" in err


def test_compute_missing_file_and_bad_invariant(capsys, write):
    assert run(capsys, "compute", "--input", "/nonexistent/x.el")[0] == 2
    assert run(capsys, "compute", "--input", write("p.el", path(3)), "--invariants", "foo")[0] == 2


def test_compute_size_cap(capsys, write):
    code, _, err = run(capsys, "compute", "--input", write("p.el", path(70)), "--invariants", "dim")
    assert code == 1 and "cap" in err


def test_generate_extremal(capsys):
    code, out, _ = run(capsys, "generate", "--family", "extremal-gr", "--k", "1", "--r", "2")
    assert code == 0 and from_edge_list(out).n == 8


def test_generate_certify_t4(capsys):
    code, out, err = run(capsys, "generate", "--family", "t4", "--k", "2", "--m", "1", "--l", "1",
                         "--r", "3", "--certify")
    assert code == 0
    g = from_edge_list(out)
    assert g.m == g.n - 1
    assert json.loads(err)["computed"] == {"DIM": 4, "GAMMA_K": 3, "GAMMA_RK": 6}


def test_generate_bad_parameters(capsys):
    assert run(capsys, "generate", "--family", "t1", "--k", "2", "--m", "0", "--l", "0")[0] == 2
    assert run(capsys, "generate", "--family", "nope")[0] == 2
    assert run(capsys, "generate", "--family", "path", "--n", "x")[0] == 2
    assert run(capsys, "generate")[0] == 2


def test_generate_triple(capsys):
    code, out, _ = run(capsys, "generate", "--triple", "2", "3", "4", "--k", "2", "--certify",
                       "--format", "json")
    assert code == 0 and json.loads(out)["family"]["family"] == "T5"
    assert run(capsys, "generate", "--triple", "1", "2", "3", "--k", "2")[0] == 2


def test_verify_cycle_resolving(capsys):
    code, out, _ = run(capsys, "verify", "--check", "chk_cycle_resolving", "--kmax", "4",
                       "--nmax", "20")
    rows = json.loads(out)["checks"]
    assert code == 0 and all(r["status"] == "PASS" for r in rows)
    negative = sorted((r["params"]["k"], r["params"]["n"]) for r in rows
                      if not r["params"]["expect_resolving"])
    assert negative == [(1, 6), (2, 10), (3, 14), (4, 18)]


def test_verify_unknown_check(capsys):
    assert run(capsys, "verify", "--check", "nonexistent")[0] == 2
    assert run(capsys, "verify")[0] == 2


def test_verify_report_file_is_byte_identical(capsys, tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        code, _, _ = run(capsys, "verify", "--check", "chk_path_formula", "--check",
                         "chk_maxorder", "--no-timing", "--out", str(p))
        assert code == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--check", "chk_ng_connected", "--kmax", "3", "--nmax", "5")
    report = json.loads(out)
    assert code == 1 and report["summary"]["fail"] == 1
    assert report["checks"][-1]["counterexample"]["graph"]


def test_sweep_cycle(capsys):
    code, out, _ = run(capsys, "sweep", "--family", "cycle", "--k", "2", "--n", "3..20")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and tuple(rows[0]) == SWEEP_HEADER
    assert len(rows) == 19 and all(r[-1] == "true" for r in rows[1:])


def test_sweep_path_and_tree_family(capsys):
    code, out, _ = run(capsys, "sweep", "--family", "path", "--k", "1", "--n", "2..16")
    assert code == 0 and out.count("true") == 15
    code, out, _ = run(capsys, "sweep", "--family", "t1", "--k", "2", "--m", "1", "--l", "1..3")
    assert code == 0 and out.count("true") == 3


def test_sweep_errors(capsys):
    assert run(capsys, "sweep", "--family", "path", "--k", "0", "--n", "2..5")[0] == 2
    assert run(capsys, "sweep", "--family", "path", "--n", "5..2")[0] == 2
    assert run(capsys, "sweep", "--family", "t1", "--k", "2", "--m", "1..2", "--l", "1..2")[0] == 2


def test_enumerate(capsys):
    code, out, err = run(capsys, "enumerate", "--n", "3", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 4 and "4 graphs" in err
    assert run(capsys, "enumerate", "--n", "9")[0] == 2


def test_sweep_output_is_deterministic(capsys):
    a = run(capsys, "sweep", "--family", "cycle", "--k", "1", "--n", "3..9")[1]
    b = run(capsys, "sweep", "--family", "cycle", "--k", "1", "--n", "3..9")[1]
    assert a == b


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "resdom", "generate", "--family", "path", "--n", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "3 2\n0 1\n1 2\n"
    proc = subprocess.run([sys.executable, "-m", "resdom", "bogus"], capture_output=True, text=True,
                          check=False)
    assert proc.returncode == 2

import json
import subprocess
import sys

from crystalcompress.cli import main

A4_INPUT = "Y1(4)^-1*Y3(1)*Y1(3)^-1*Y4(1)^-1*Y2(0)^2*Y3(2)^2"
C3_INPUT = ("Y1(0)*Y1(2)*Y1(1)^-1*Y1(5)^-1*Y1(3)^-1*Y1(4)^-2*Y2(0)*Y2(3)*Y2(5)^-2"
            "*Y3(0)*Y3(4)")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_normalize(capsys):
    assert run(capsys, "normalize", "Y1(1)*Y1(1)")[:2] == (0, "Y1(1)^2\n")
    assert run(capsys, "normalize", "1")[:2] == (0, "1\n")
    code, out, _ = run(capsys, "normalize", A4_INPUT)
    assert out.strip() == "Y1(3)^-1*Y1(4)^-1*Y2(0)^2*Y3(1)*Y3(2)^2*Y4(1)^-1"


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "normalize", "Y1(1")
    assert code == 1 and "position 4" in err


def test_usage_errors(capsys):
    assert run(capsys, "bogus")[0] == 1
    assert run(capsys, "--rank", "1", "normalize", "Y2(0)")[0] == 1
    assert run(capsys, "act", "--op", "f", "--index", "3", "Y1(0)")[0] == 1


def test_compress(capsys):
    code, out, _ = run(capsys, "compress", A4_INPUT)
    assert code == 0
    assert out.splitlines()[:3] == ["N: Y1(2)^-2*Y2(0)^2*Y3(0)^2*Y3(1)*Y4(1)^-1", "lambda: 4L2+L4", "s: 0"]
    code, out, _ = run(capsys, "--family", "C", "--format", "json", "compress", C3_INPUT)
    doc = json.loads(out)
    assert code == 0 and doc["lambda"] == [3, 2, 2] and doc["s"] == 0
    assert doc["matrix"]["rows"][5] == [4, 0, 0]
    code, out, _ = run(capsys, "compress", "1")
    assert out.splitlines()[:3] == ["N: 1", "lambda: 0", "s: 0"]


def test_compress_invariant_violation(capsys):
    code, _, err = run(capsys, "--family", "C", "compress", "Y1(0)^2*Y2(-2)*Y2(-1)^-3*Y3(1)^-1")
    assert code == 3 and "invariant" in err
    assert run(capsys, "--family", "C", "compress", "--lenient",
               "Y1(0)^2*Y2(-2)*Y2(-1)^-3*Y3(1)^-1")[0] == 0


def test_act(capsys):
    assert run(capsys, "act", "--op", "f", "--index", "1", "Y1(2)^-1*Y1(1)^2")[1] == "Y1(1)*Y1(2)^-2\n"
    assert run(capsys, "--rank", "2", "act", "--op", "f", "--index", "1",
               "Y1(2)^-1*Y1(1)^2")[1] == "Y1(1)*Y1(2)^-2*Y2(1)\n"
    assert run(capsys, "act", "--op", "e", "--index", "1", "Y1(1)")[1] == "undefined\n"


def test_tableau(capsys):
    code, out, _ = run(capsys, "tableau", A4_INPUT)
    assert out.splitlines() == [". . . . 1", ". . . . 2", "1 1 2 2 3", "2 2 3 3 5"]
    code, out, _ = run(capsys, "--family", "C", "tableau", "Y2(2)^2*Y2(1)^-1*Y3(0)*Y1(0)*Y3(3)^-1")
    assert out.splitlines()[-1] == "(unnormalized)"
    code, out, _ = run(capsys, "--format", "json", "tableau", "1")
    assert json.loads(out)["rows"] == [[]]


def test_path(capsys):
    code, out, _ = run(capsys, "--format", "json", "path", "Y1(0)*Y2(0)")
    doc = json.loads(out)
    assert code == 0 and len(doc["vertices"]) == len(doc["segments"]) + 1


def test_graph_and_cap(capsys, monkeypatch):
    code, out, _ = run(capsys, "--rank", "2", "--format", "dot", "graph", "Y1(1)")
    assert code == 0 and out.startswith("digraph") and "label=1" in out
    code, out, _ = run(capsys, "--format", "json", "graph", "Y1(1)*Y2(1)")
    assert len(json.loads(out)["nodes"]) == 8
    monkeypatch.setenv("CRYSTAL_NODE_CAP", "3")
    assert run(capsys, "graph", "Y1(1)*Y2(1)")[0] == 1
    assert run(capsys, "graph", "--cap", "10", "Y1(1)*Y2(1)")[0] == 0


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", A4_INPUT)
    assert code == 0 and "isomorphic: true" in out
    code, out, _ = run(capsys, "--rank", "2", "--format", "json", "verify", "Y1(1)")
    doc = json.loads(out)
    assert (doc["input_size"], doc["compressed_size"], doc["isomorphic"]) == (3, 3, True)


def test_insert(capsys):
    code, out, _ = run(capsys, "--rank", "1", "--format", "json", "insert", "Y1(1)^2", "Y1(1)^3", "--verify")
    doc = json.loads(out)
    assert code == 0 and doc["lambda"] == [5] and doc["isomorphic"]
    code, out, _ = run(capsys, "--family", "C", "--rank", "2", "insert", "Y1(0)", "Y2(1)^-1", "--verify")
    assert code == 0 and "isomorphic: true" in out


def test_deterministic_output(capsys):
    first = run(capsys, "--format", "json", "graph", "Y1(0)^2*Y2(1)^-1")[1]
    assert run(capsys, "--format", "json", "graph", "Y1(0)^2*Y2(1)^-1")[1] == first


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "crystalcompress", "normalize", "Y1(0)*Y1(0)"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "Y1(0)^2\n"

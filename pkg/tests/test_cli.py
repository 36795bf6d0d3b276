import io
import json
import subprocess
import sys

import pytest

from schurdim.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_glob_examples():
    code, out, _ = call("glob", "--n", "3", "--p", "3", "--r", "6")
    assert code == EXIT_OK
    js = json.loads(out)
    assert js["glob"] == 8 and js["gfd"] == 4 and js["witness"] == [6, 0, 0]
    code, out, _ = call("glob", "--n", "2", "--p", "2", "--r", "6")
    assert code == EXIT_OK and json.loads(out)["glob"] == 6


def test_glob_quantum():
    code, out, _ = call("glob", "--n", "2", "--p", "3", "--r", "7", "--quantum", "--l", "2")
    js = json.loads(out)
    assert code == EXIT_OK and js["glob"] == 2 and js["l"] == 2
    assert call("glob", "--n", "3", "--p", "3", "--r", "7", "--quantum", "--l", "2")[0] == EXIT_USAGE
    assert call("glob", "--n", "2", "--p", "3", "--r", "7", "--quantum")[0] == EXIT_USAGE


def test_pfilt_dot_steinberg():
    code, out, _ = call("pfilt", "--p", "3", "--n", "3", "--weight", "5,2", "--format", "dot")
    assert code == EXIT_OK
    assert out.count("[label=") == 1 and " -- " not in out
    assert "Nabla(1,0)^F (x) L(2,2)" in out


def test_pfilt_formats():
    code, out, _ = call("pfilt", "--p", "5", "--n", "3", "--weight", "11,6")
    assert code == EXIT_OK and json.loads(out)["case"] == "vii"
    code, out, _ = call("pfilt", "--p", "5", "--n", "3", "--weight", "11,6", "--format", "text")
    assert code == EXIT_OK and out.count("mu") >= 9
    code, out, _ = call("pfilt", "--p", "3", "--n", "2", "--weight", "7")
    assert code == EXIT_OK and len(json.loads(out)["sections"]) == 2


def test_gfd_command():
    code, out, _ = call("gfd", "--n", "3", "--p", "3", "--partition", "6,0,0")
    js = json.loads(out)
    assert code == EXIT_OK and js["gfd"] == 4 and js["weight"] == [6, 0]
    code, out, _ = call("gfd", "--n", "2", "--p", "5", "--weight", "24")
    js = json.loads(out)
    assert js["gfd"] == 0 and js["steinberg_depth"] == 2 and js["primitive_core"] == [0]


def test_char_command():
    code, out, _ = call("char", "--kind", "nabla", "--n", "3", "--weight", "1,0")
    assert code == EXIT_OK and json.loads(out) == [[1, 0, 1], [-1, 1, 1], [0, -1, 1]]
    code, out, _ = call("char", "--kind", "simple", "--n", "3", "--p", "3", "--weight", "1,1")
    assert sum(row[-1] for row in json.loads(out)) == 7
    code, out, _ = call("char", "--kind", "nabla-p", "--n", "2", "--p", "2", "--weight", "4")
    assert json.loads(out) == [[4, 1], [0, 1], [-4, 1]]
    assert call("char", "--kind", "simple", "--n", "3", "--weight", "1,1")[0] == EXIT_USAGE


def test_tensor_command():
    code, out, _ = call("tensor", "--p", "3", "--left", "1,0", "--right", "1,0")
    js = json.loads(out)
    assert code == EXIT_OK
    assert js["good"] == [[2, 0, 1], [0, 1, 1]]
    assert js["simple"] == [[2, 0, 1], [0, 1, 1]]
    assert call("tensor", "--p", "3", "--left", "1,0", "--right", "1")[0] == EXIT_USAGE


def test_blocks_command():
    code, out, _ = call("blocks", "--n", "2", "--p", "2", "--weight", "4", "--box", "8")
    js = json.loads(out)
    assert code == EXIT_OK
    assert js["members"] == [[8], [6], [4], [2], [0]]
    assert call("blocks", "--n", "2", "--p", "2", "--weight", "4", "--box", "3")[0] == EXIT_USAGE


def test_table_command():
    code, out, _ = call("table", "--n", "2", "--p", "2", "--rmax", "10", "--format", "csv")
    lines = out.splitlines()
    assert code == EXIT_OK
    assert lines[0] == "n,p,r,glob_formula,glob_bruteforce,match"
    assert len(lines) == 12 and all(line.endswith(",true") for line in lines[1:])
    assert lines[7] == "2,2,6,6,6,true"


@pytest.mark.parametrize("suite", ["xanth", "pfilt", "resolutions", "glob", "quantum", "monotone"])
def test_verify_suites(suite):
    code, out, _ = call("verify", "--suite", suite, "--p", "3", "--bound", "4")
    js = json.loads(out)
    assert code == EXIT_OK and js["passed"] and js["checked"] > 0


@pytest.mark.parametrize("argv", [
    ["glob", "--n", "2", "--p", "4", "--r", "6"],
    ["glob", "--n", "4", "--p", "3", "--r", "6"],
    ["glob", "--n", "2", "--p", "3"],
    ["gfd", "--n", "3", "--p", "3", "--weight", "1"],
    ["gfd", "--n", "3", "--p", "3", "--weight", "1,-1"],
    ["gfd", "--n", "3", "--p", "3", "--partition", "1,2,0"],
    ["pfilt", "--p", "3", "--n", "3", "--weight", "a,b"],
    ["verify", "--suite", "nothing"],
    ["frobnicate"],
    [],
])
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == EXIT_USAGE and out == ""
    assert "usage" in err


def test_deterministic_output():
    argv = ["pfilt", "--p", "5", "--n", "3", "--weight", "26,26", "--format", "dot"]
    assert call(*argv) == call(*argv)
    argv = ["blocks", "--n", "3", "--p", "3", "--weight", "2,1"]
    assert call(*argv) == call(*argv)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "schurdim", "glob", "--n", "2", "--p", "2", "--r", "6"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["glob"] == 6
    proc = subprocess.run([sys.executable, "-m", "schurdim", "glob"], capture_output=True, text=True)
    assert proc.returncode == 2

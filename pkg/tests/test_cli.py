import json
import subprocess
import sys

import pytest

from cwcodes.cli import run
from cwcodes.constraints import read_b
from cwcodes.core import dumps_code, read_code, verify_code, write_code


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


P = ["--q", "3", "--n", "6", "--d", "4", "--w", "3"]


def test_bound_text(capsys):
    assert call(capsys, "bound", *P) == (0, "10 (10/1) t=2 parity=even\n", "")


def test_bound_json(capsys):
    code, out, _ = call(capsys, "bound", "--q", "5", "--n", "10", "--d", "6", "--w", "3", "--json")
    assert code == 0
    assert json.loads(out) == {"floor": 3, "numerator": 10, "denominator": 3, "t": 1, "parity": "even"}


def test_oracle(capsys, tmp_path):
    out_file = tmp_path / "w.txt"
    code, out, _ = call(capsys, "oracle", "--q", "2", "--n", "7", "--d", "4", "--w", "3", "--out", str(out_file))
    assert code == 0 and out.startswith("A=7 exact=true nodes=")
    assert len(read_code(out_file)) == 7


def test_verify(capsys, tmp_path, fano):
    f = tmp_path / "fano.txt"
    write_code(fano, f)
    assert call(capsys, "verify", "--file", str(f)) == (0, "PASS\n", "")
    text = dumps_code(fano).replace("1 1 1 0 0 0 0", "1 1 0 0 0 0 0")
    f.write_text(text)
    code, out, _ = call(capsys, "verify", "--file", str(f))
    assert code == 1 and out.startswith("FAIL\n") and "weight" in out


def test_verify_unparseable(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("nonsense\n")
    code, out, _ = call(capsys, "verify", "--file", str(f))
    assert code == 1 and out.startswith("FAIL")


def test_construct_then_verify(capsys, tmp_path):
    out_file, b_file = tmp_path / "c.txt", tmp_path / "b.txt"
    code, out, _ = call(capsys, "--threads", "1", "construct", *P, "--seed", "3", "--restarts", "5",
                        "--out", str(out_file), "--emit-b", str(b_file))
    assert code == 0 and out.startswith("size=")
    assert verify_code(read_code(out_file)).passed
    assert read_b(b_file, 4, 3).params.t == 2
    assert call(capsys, "verify", "--file", str(out_file))[0] == 0


def test_construct_odd(capsys, tmp_path):
    code, out, _ = call(capsys, "--threads", "1", "construct", "--q", "3", "--n", "7", "--d", "3", "--w", "3",
                        "--seed", "1", "--restarts", "3")
    assert code == 0 and "johnson_floor=28" in out
    assert call(capsys, "construct", "--q", "3", "--n", "7", "--d", "3", "--w", "3", "--seed", "1",
                "--emit-b", str(tmp_path / "b"))[0] == 2


def test_degrees(capsys):
    code, out, _ = call(capsys, "degrees", "--q", "3", "--n", "5", "--d", "4", "--w", "3", "--seed", "1",
                        "--exact", "--samples", "20")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "n,q,d,w,t,mode,samples,expected,obs_min,obs_mean,obs_max,stderr,seed"
    assert lines[1].startswith("5,3,4,3,2,exact-over-B,2,3/2,3/2,3/2,3/2,,1")
    assert lines[2].startswith("5,3,4,3,2,monte-carlo,20,3/2,")
    code, out, _ = call(capsys, "degrees", *P, "--seed", "1")
    assert ",fixed-B-census,60,2/1," in out


def test_sweep(capsys, tmp_path):
    f = tmp_path / "s.csv"
    code, out, _ = call(capsys, "--threads", "1", "sweep", "--q", "3", "--d", "4", "--w", "3", "--n-start", "6",
                        "--n-end", "10", "--n-step", "2", "--seed", "0", "--restarts", "4", "--csv", str(f))
    assert code == 0
    lines = f.read_text().splitlines()
    assert lines[0] == "n,q,d,w,t,x_size,code_size,johnson_floor,main_term,ratio,seed,restarts,elapsed_ms"
    assert [l.split(",")[0] for l in lines[1:]] == ["6", "8", "10"]
    assert lines[1].split(",")[8] == "10/1"


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["bound", "--q", "3"],
        ["bound", *P, "--frobnicate"],
        ["construct", *P],
        ["degrees", *P],
        ["bound", "--q", "3", "--n", "6", "--d", "9", "--w", "3"],
        ["sweep", "--q", "3", "--d", "4", "--w", "3", "--n-start", "6", "--n-end", "8", "--n-step", "0",
         "--seed", "1", "--csv", "x.csv"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2 and err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cwcodes", "bound", *P], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "10 (10/1) t=2 parity=even\n"

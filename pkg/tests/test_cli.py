import io
import json
import subprocess
import sys

import pytest

from quiverdt.cli import format_element, parse_element, run
from quiverdt.coha import SymElement

LOOPS = {"vertices": ["0"], "arrows": [[1]]}
K2 = {"vertices": ["i", "j"], "arrows": [[0, 2], [0, 0]]}


@pytest.fixture
def files(tmp_path):
    loops = tmp_path / "loops.json"
    loops.write_text(json.dumps(LOOPS))
    k2 = tmp_path / "k2.json"
    k2.write_text(json.dumps(K2))
    return str(loops), str(k2)


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_dt_loop_row(files):
    loops, _ = files
    code, out, _ = call("dt", "--quiver", loops, "--m", "2", "--theta", "0", "--box", "2")
    assert code == 0
    assert "d=2: omega_tilde=1; Omega[k=-4]=1" in out.splitlines()


def test_wallcross_exit_code(files):
    _, k2 = files
    code, out, _ = call("check", "wallcross", "--quiver", k2, "--theta", "1,0", "--box", "3,3")
    assert code == 0 and out.strip() == "wallcross: pass"


def test_sst_dims(files):
    _, k2 = files
    code, out, _ = call("sst-dims", "--quiver", k2, "--theta", "1,0", "--d", "1,1", "--jmax", "3")
    assert code == 0 and out == "1 2 2 2\n"


def test_other_dims(files):
    loops, k2 = files
    assert call("coha-dims", "--quiver", k2, "--d", "1,1", "--jmax", "2")[1] == "1 2 3\n"
    assert call("st-dims", "--m", "2", "--d", "2", "--jmax", "3")[1] == "1 1 1 1\n"


def test_series_output(files):
    _, k2 = files
    code, out, _ = call("series", "--quiver", k2, "--theta", "1,0", "--slope", "1/2", "--box", "1,1")
    assert code == 0
    assert out.splitlines() == ["# semistable slope 1/2", "d=0,0: 1", "d=1,1: (-1-q)/(1-q)"]
    code, out, _ = call("series", "--m", "0", "--box", "1")
    assert out.splitlines()[-1] == "d=1: v/(1-q)"


def test_product_and_reduce(files):
    _, k2 = files
    code, out, _ = call("product", "--quiver", k2, "--theta", "1,0",
                        "--left", "1,1: m(1|)", "--right", "1,1: m(|)", "--reduce")
    assert code == 0
    assert out.splitlines() == ["2,2: 2*m(1|) - m(|1)", "sst class: 2*m(1|) - m(|1)"]


def test_oracle_command(files):
    _, k2 = files
    code, out, _ = call("oracle", "--quiver", k2, "--theta", "1,0", "--d", "1,1", "--primes", "2,3")
    assert code == 0
    assert out.splitlines() == ["p=2: count=3 predicted=3 ok", "p=3: count=8 predicted=8 ok"]


def test_checks(files):
    _, k2 = files
    assert call("check", "tensor", "--quiver", k2, "--theta", "1,0", "--d", "2,1", "--jmax", "3")[0] == 0
    assert call("check", "chowbetti", "--m", "2", "--d", "2")[0] == 0
    assert call("check", "supercomm", "--m", "2", "--d", "1", "--e", "2", "--jmax", "1")[0] == 0
    assert call("check", "positivity", "--m", "3", "--box", "3")[0] == 0


def test_json_round_trip_and_determinism(files):
    _, k2 = files
    argv = ("dt", "--quiver", k2, "--theta", "1,0", "--box", "2,2", "--format", "json")
    code, out, _ = call(*argv)
    assert code == 0
    doc = json.loads(out)
    assert json.dumps(doc, indent=2, sort_keys=True) + "\n" == out
    assert call(*argv)[1] == out
    rows = {tuple(r["d"]): r for r in doc["results"]}
    assert rows[(1, 1)]["omega_tilde"] == [1, 1]
    assert rows[(1, 1)]["omegas"] == [[0, 1], [2, 1]]


def test_inline_and_stdin_quiver(monkeypatch):
    code, out, _ = call("sst-dims", "--quiver", json.dumps(K2), "--theta", "1,0", "--d", "1,1",
                        "--jmax", "1")
    assert out == "1 2\n"
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(K2)))
    code, out, _ = call("sst-dims", "--quiver", "-", "--theta", "1,0", "--d", "1,1", "--jmax", "1")
    assert code == 0 and out == "1 2\n"


def test_exit_codes(files, monkeypatch):
    loops, k2 = files
    code, _, err = call("dt", "--quiver", k2, "--box", "1,1")
    assert code == 3 and err.startswith("error: genericity:")
    code, _, err = call("dt", "--m", "2", "--box", "x")
    assert code == 2 and err.startswith("error: usage:")
    code, _, err = call("dt", "--quiver", "/nonexistent.json", "--box", "1")
    assert code == 2
    code, _, err = call("check", "supercomm", "--quiver", k2, "--d", "1,1")
    assert code == 2 and "not-symmetric" in err
    assert call("dt", "--box", "1")[0] == 2
    assert call("bogus")[0] == 2
    monkeypatch.setenv("QUIVERDT_BUDGET", "10")
    code, _, err = call("oracle", "--m", "1", "--d", "2")
    assert code == 3 and err.startswith("error: budget:")
    assert call("dt", "--quiver", k2, "--m", "2", "--box", "1,1")[0] == 2


def test_element_syntax_round_trip():
    f = parse_element("2,1: 3/2*m(1,1|) - m(|2) + m(2|)")
    assert f.d == (2, 1) and f.degree == 2
    assert parse_element(format_element(f)) == f
    assert format_element(SymElement((1, 1), 3)) == "1,1: 0"
    assert parse_element("1,1: m(|)") == SymElement.one((1, 1))


def test_module_entry_point(files):
    loops, _ = files
    proc = subprocess.run([sys.executable, "-m", "quiverdt", "dt", "--quiver", loops, "--m", "2",
                           "--box", "2"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "d=2: omega_tilde=1; Omega[k=-4]=1" in proc.stdout

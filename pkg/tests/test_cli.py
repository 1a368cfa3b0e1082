import json
import subprocess
import sys

import pytest

from composita.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_composita_plain(capsys):
    code, out, _ = run(capsys, "composita", "builtin:pascal_h", "-n", "5")
    assert code == 0
    assert out.splitlines()[-1] == "1 4 6 4 1"
    assert out.splitlines()[0].strip() == "1"


def test_composita_csv(capsys):
    code, out, _ = run(capsys, "composita", "builtin:a105306_h", "-n", "5", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "n,k,value"
    assert "5,1,8" in lines and lines[-1] == "5,5,1"


def test_composita_json(capsys):
    _, out, _ = run(capsys, "composita", "builtin:xcotx", "-n", "3", "--format", "json")
    assert json.loads(out) == {"order": 3, "rows": [["1"], ["0", "1"], ["-1/3", "0", "1"]]}


def test_composita_zero_series(capsys):
    code, _, err = run(capsys, "composita", "coeffs:[0]")
    assert code == 1
    assert "composita requires g(0)=0 and a nonzero series" in err


def test_parse_error_reported(capsys):
    code, _, err = run(capsys, "composita", "coeffs:[1,")
    assert code == 1
    assert "line 1, column 11" in err


def test_forward(capsys):
    code, out, _ = run(capsys, "central", "forward", "builtin:pascal_h", "-n", "10")
    assert code == 0
    assert out == "1 2 6 20 70 252 924 3432 12870 48620\n"


def test_forward_extras(capsys):
    _, out, _ = run(capsys, "central", "forward", "builtin:pascal_h", "-n", "3",
                    "--show-a", "--show-triangle")
    lines = out.splitlines()
    assert lines[0] == "F: 1 2 6"
    assert lines[1] == "A: 0 1 1 2"
    assert lines[-1] == "1 4 6 4 1"


def test_forward_json(capsys):
    _, out, _ = run(capsys, "central", "forward", "builtin:a105306_h", "-n", "4",
                    "--format", "json", "--show-a")
    doc = json.loads(out)
    assert doc["F"] == ["1", "2", "9", "44"]
    assert doc["A"] == ["0", "1", "1", "3", "11"]


def test_invert(capsys):
    code, out, _ = run(capsys, "central", "invert", "builtin:catalan_gf", "-n", "6")
    assert code == 0
    assert out.splitlines()[0] == "H: 1, 1/2, 5/12, 1/2, 551/720, 11/8"


def test_invert_check_lemma(capsys):
    code, out, _ = run(capsys, "central", "invert", "builtin:catalan_gf", "-n", "4",
                       "--check", "--method", "lemma", "--format", "json")
    assert code == 0
    assert json.loads(out)["H"] == ["1", "1/2", "5/12", "1/2"]


def test_invert_rejects_zero_constant(capsys):
    code, _, err = run(capsys, "central", "invert", "coeffs:[0,1]")
    assert code == 1
    assert "requires F(0)≠0" in err


def test_invert_bfile_of_rationals_fails(capsys):
    code, _, err = run(capsys, "central", "invert", "builtin:catalan_gf", "-n", "3",
                       "--format", "bfile")
    assert code == 1
    assert "CSV" in err


def test_solve_fe(capsys):
    _, out, _ = run(capsys, "solve-fe", "builtin:a105306_h", "-n", "7", "--format", "bfile")
    assert out.splitlines() == ["1 1", "2 1", "3 3", "4 11", "5 45", "6 197", "7 903"]


@pytest.mark.parametrize(
    "source, spec, fixture, n",
    [
        ("forward", "builtin:pascal_h", "A000984", "10"),
        ("solve-fe", "builtin:a105306_h", "A001003", "7"),
        ("forward", "builtin:a105306_h", "A176479", "6"),
        ("composita", "builtin:a105306_h", "A105306", "15"),
        ("series", "builtin:catalan_gf", "A000108", "12"),
    ],
)
def test_compare_fixtures(capsys, source, spec, fixture, n):
    code, out, _ = run(capsys, "compare", source, spec, fixture, "-n", n)
    assert code == 0
    assert out == f"match: {n} terms agree\n"


def test_compare_mismatch(capsys, tmp_path):
    p = tmp_path / "b.txt"
    p.write_text("0 1\n1 2\n2 7\n")
    code, out, _ = run(capsys, "compare", "forward", "builtin:pascal_h", str(p), "-n", "3")
    assert code == 1
    assert "mismatch at index 2" in out


def test_out_file_and_determinism(capsys, tmp_path):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    args = ["central", "invert", "builtin:catalan_gf", "-n", "5", "--format", "json"]
    assert main(args + ["--out", str(p1)]) == 0
    assert main(args + ["--out", str(p2)]) == 0
    assert p1.read_bytes() == p2.read_bytes()
    assert capsys.readouterr().out == ""


def test_builtins_list(capsys):
    _, out, _ = run(capsys, "builtins", "list")
    names = [line.split()[0] for line in out.splitlines()]
    for name in ["geometric_h(a,b)", "linquad(a,b)", "log1p", "expm1", "catalan_c",
                 "catalan_gf", "xcotx", "a105306_h", "pascal_h"]:
        assert name in names


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "composita", "central", "forward", "builtin:pascal_h", "-n", "4"],
        capture_output=True, text=True, check=True,
    )
    assert res.stdout == "1 2 6 20\n"

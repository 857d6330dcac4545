import json
import subprocess
import sys

import pytest

from cubicinv.arith import DUAL
from cubicinv.cli import main
from cubicinv.textform import parse_poly
from helpers import FERMAT


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariants_fermat(capsys):
    code, out, _ = run(capsys, "invariants", FERMAT)
    assert code == 0
    data = json.loads(out)
    assert data["invariants"] == {"I8": "1", "I16": "0", "I24": "0", "I32": "0", "I40": "0", "I100": "0"}
    assert data["weights"]["I100"] == 75


def test_invariants_json_is_byte_identical(capsys):
    _, first, _ = run(capsys, "invariants", "x^3 + 2*y^3 - z^3 + 5*w^3 + x*y*z")
    _, second, _ = run(capsys, "invariants", "x^3 + 2*y^3 - z^3 + 5*w^3 + x*y*z")
    assert first == second


def test_timing_is_opt_in(capsys):
    _, out, _ = run(capsys, "invariants", FERMAT, "--timing")
    assert "timing_ms" in json.loads(out)


@pytest.mark.parametrize("form, code", [
    ("x^3 + *y", 2),
    ("x^3 + y^2", 3),
    ("x^3 + x^2", 3),
    ("x^2*y^2", 3),
    ("0", 4),
    ("x^3 - x^3", 4),
])
def test_exit_codes(capsys, form, code):
    got, out, err = run(capsys, "invariants", form)
    assert got == code
    assert out == ""
    assert err.startswith("error:")


def test_missing_file_is_reported(capsys, tmp_path):
    code, _, err = run(capsys, "invariants", f"@{tmp_path / 'nope.txt'}")
    assert code == 2
    assert "error" in err


def test_form_from_file(capsys, tmp_path):
    path = tmp_path / "f.txt"
    path.write_text(FERMAT + "\n")
    code, out, _ = run(capsys, "hessian", f"@{path}", "--text")
    assert code == 0
    assert out.strip() == "1296*x*y*z*w"


def test_dual_reparses(capsys):
    code, out, _ = run(capsys, "dual", FERMAT)
    assert code == 0
    data = json.loads(out)
    g = parse_poly(data["dual"], DUAL)
    assert g.is_homogeneous(12)


def test_dual_of_zero_form(capsys):
    code, out, _ = run(capsys, "dual", "0", "--text")
    assert code == 0
    assert out.strip() == "0"


def test_covariants(capsys):
    code, out, _ = run(capsys, "covariants", "x^3 + y^3 + z^3 + w^3 + 2*x*y*z")
    assert code == 0
    assert set(json.loads(out)["covariants"]) == {"C11", "C19", "C27", "C43"}


def test_compare(capsys, tmp_path):
    code, out, _ = run(capsys, "compare", FERMAT, "x^3 + 8*y^3 + z^3 + w^3", "--text")
    assert code == 0
    assert out.strip() == "equivalent"
    clebsch_file = tmp_path / "clebsch.txt"
    run(capsys, "pentahedral", "1", "1", "1", "1", "1", "--output", str(clebsch_file))
    clebsch = json.loads(clebsch_file.read_text())["form"]
    code, out, _ = run(capsys, "compare", FERMAT, clebsch, "--text")
    assert out.strip() == "not-equivalent"


def test_pentahedral(capsys):
    code, out, _ = run(capsys, "pentahedral", "1", "1", "1", "1", "1")
    data = json.loads(out)
    assert data["salmon_invariants"] == {"I8": "-15", "I16": "5", "I24": "5", "I32": "10", "I40": "1"}
    code, out, _ = run(capsys, "pentahedral", "1", "0", "2", "3", "4")
    assert json.loads(out)["salmon_covariants"] is None
    code, _, _ = run(capsys, "pentahedral", "0", "0", "0", "0", "0")
    assert code == 3


def test_selftest_passes(capsys):
    code, out, _ = run(capsys, "selftest", "--samples", "1", "--eq-cubics", "1", "--eq-matrices", "1",
                       "--no-T")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_selftest_catches_fault(capsys):
    code, out, _ = run(capsys, "selftest", "--samples", "1", "--eq-cubics", "1", "--eq-matrices", "1",
                       "--no-T", "--inject-fault", "--text")
    assert code == 1
    assert "selftest: FAIL" in out


def test_bench_is_deterministic(capsys):
    _, a, _ = run(capsys, "bench", "--count", "1", "--seed", "4")
    _, b, _ = run(capsys, "bench", "--count", "1", "--seed", "4")
    da, db = json.loads(a), json.loads(b)
    assert da["digest_full"] == db["digest_full"]
    assert da["digest_invariants"] == db["digest_invariants"]
    assert run(capsys, "bench", "--count", "0")[0] == 3


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cubicinv", "hessian", "x^3", "--text"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "0"


# the first form after (x, y, z, w) -> (x, y, z, w) M with M = [[1,1,0,0],[0,1,2,0],[0,0,1,-1],[1,0,0,2]]
BASE = "x^3 + 2*y^3 - z^3 + 5*w^3 + x*y*z"
MOVED = ("3*x^3 + 8*x^2*y + x^2*z + 3*x^2*w + 8*x*y^2 + x*y*z + 2*x*y*w + x*z*w + 3*x*w^2 - 6*y^3"
         " - 12*y^2*z + 2*y^2*w - 6*y*z^2 + y*z*w - 6*z^3 + 30*z^2*w - 60*z*w^2 + 41*w^3")


def test_compare_transformed_fixture(capsys):
    code, out, _ = run(capsys, "compare", BASE, MOVED)
    assert code == 0
    assert json.loads(out)["verdict"] == "equivalent"
    _, out, _ = run(capsys, "compare", BASE, BASE, "--text")
    assert out.strip() == "equivalent"

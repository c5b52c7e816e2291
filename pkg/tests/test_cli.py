import csv
import io
import json
import subprocess
import sys
import time

import pytest

from trapsf.cli import fmt_grouped, fmt_grouped_complex, parse_grouped, run
from trapsf.reference import K_CASES


def _value_line(text):
    for line in text.splitlines():
        if line.startswith("value"):
            return line.split(None, 1)[1]
    raise AssertionError(f"no value line in {text!r}")


def _table_rows(text):
    rows = []
    for line in text.splitlines():
        if line.startswith("#") or line.lstrip().startswith("1/h"):
            continue
        inv_h, points, est = line.split(None, 2)
        rows.append((float(inv_h), int(points), parse_grouped(est)))
    return rows


def _ulps16(a, b):
    """Difference in units of the 16th significant digit, as printed."""
    da, ea = f"{a:.15e}".split("e")
    db, eb = f"{b:.15e}".split("e")
    assert ea == eb
    return abs(int(da.replace(".", "")) - int(db.replace(".", "")))


# ---------------------------------------------------------------- formatting


def test_grouped_format():
    assert fmt_grouped(2.427069024702016e-05) == "2.42706 90247 02016e-05"
    assert fmt_grouped(-1.5) == "-1.50000 00000 00000"
    assert fmt_grouped_complex(complex(1, -2), real=False) == (
        "1.00000 00000 00000-i2.00000 00000 00000")


@pytest.mark.parametrize("z", [complex(3.91892927088136e-07, 1.12844796958462e-06),
                               complex(-1.25, -0.5), complex(2.5e100, 0)])
def test_grouped_round_trip(z):
    s = fmt_grouped_complex(z, real=False)
    back = parse_grouped(s)
    assert back == pytest.approx(z, rel=1e-15)


# ---------------------------------------------------------------- eval


def test_eval_k():
    code, out = run(["eval", "k", "--nu", "0", "--z", "0.1"])
    assert code == 0
    assert _value_line(out) == "2.42706 90247 02016"
    assert "converged    yes" in out
    assert out.startswith("# k(nu = 0.0, z = 0.1)")


def test_eval_gamma_complex():
    code, out = run(["eval", "gamma", "--z", "1+10i"])
    assert code == 0
    v = parse_grouped(_value_line(out))
    assert v.real == pytest.approx(3.9189292708813600e-07, rel=1e-12)
    assert v.imag == pytest.approx(1.1284479695846250e-06, rel=1e-12)
    code2, out2 = run(["eval", "gamma", "--z-re", "1", "--z-im", "10"])
    assert code2 == 0
    assert _value_line(out2) == _value_line(out)


def test_eval_zeta_outside_domain(capsys):
    code, out = run(["eval", "zeta", "--z", "0.5"])
    assert code == 1
    assert out == ""
    assert "Re(s) > 1" in capsys.readouterr().err


def test_settings_line_marks_changes():
    _, out = run(["eval", "i", "--nu", "2", "--z", "1", "--accel", "sinh", "--h0", "1"])
    settings = out.splitlines()[1]
    assert "h0=1.0*" in settings
    assert "accel=sinh*" in settings
    assert "tol=1e-15 " in settings


def test_not_converged_exit_code():
    code, out = run(["eval", "k", "--nu", "0", "--z", "0.1", "--max-halvings", "1"])
    assert code == 2
    assert "converged    no" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["eval", "k", "--nu", "0"],
        ["eval", "k", "--nu", "0", "--z", "abc"],
        ["eval", "k", "--nu", "0", "--z", "1", "--z-re", "1"],
        ["eval", "k", "--nu", "0", "--z", "1+1i"],
        ["eval", "k", "--nu", "0", "--z", "1", "--accel", "sinh"],
        ["eval", "k", "--nu", "0", "--z", "1", "--route", "contour"],
        ["eval", "k", "--nu", "0", "--z", "1", "--h0", "-1"],
        ["eval", "k", "--nu", "0", "--z", "-1"],
        ["eval", "gamma", "--z", "0"],
        ["validate", "--only", "no_such_check"],
    ],
)
def test_usage_and_domain_errors_exit_one(argv):
    code, _ = run(argv)
    assert code == 1


def test_parser_errors_exit_one():
    with pytest.raises(SystemExit) as info:
        run(["eval", "bessel", "--z", "1"])
    assert info.value.code == 1


def test_csv_and_human_values_agree():
    argv = ["eval", "j", "--nu", "1", "--z", "10"]
    _, human = run(argv)
    _, text = run(argv + ["--format", "csv"])
    rec = next(csv.DictReader(io.StringIO(text)))
    machine = float(rec["value_re"])
    assert fmt_grouped(machine) == _value_line(human)
    assert rec["converged"] == "true"


def test_json_record():
    _, text = run(["eval", "gamma", "--z", "0.1", "--format", "json"])
    doc = json.loads(text)
    rec = doc["record"]
    assert rec["value_re"] == pytest.approx(9.5135076986687320, rel=1e-14)
    assert rec["value_im"] == 0.0
    assert rec["converged"] is True
    assert doc["settings"]["h0"] == 2.0


def test_output_is_deterministic():
    argv = ["table", "gamma", "--z", "1+10i", "--format", "csv"]
    assert run(argv) == run(argv)


# ---------------------------------------------------------------- table


def test_table_k0_matches_reference():
    case = next(c for c in K_CASES if c.nu == 0.0 and c.z == 10.0)
    code, out = run(["table", "k", "--nu", "0", "--z", "10"])
    assert code == 0
    rows = {inv_h: est for inv_h, _, est in _table_rows(out)}
    for inv_h, ref in case.rows:
        assert _ulps16(rows[inv_h].real, ref.real) <= 2, inv_h
    assert "# converged after" in out


def test_table_j_final_rows():
    # published 16-digit rows for J_1(1)
    published = {16.0: "4.400505857449333e-01", 32.0: "4.400505857449336e-01"}
    code, out = run(["table", "j", "--nu", "1", "--z", "1"])
    assert code == 0
    rows = _table_rows(out)
    assert [r[0] for r in rows[-2:]] == [16.0, 32.0]
    for inv_h, _, est in rows[-2:]:
        assert _ulps16(est.real, float(published[inv_h])) <= 2, inv_h


def test_table_j_full_schedule_is_digit_exact():
    code, out = run(["table", "j", "--nu", "1", "--z", "1", "--tol", "0", "--max-halvings", "7"])
    assert code == 0
    tail = [line.split(None, 2) for line in out.splitlines()[-3:-1]]
    assert tail == [["32", "74", "4.40050 58574 49336e-01"],
                    ["64", "144", "4.40050 58574 49336e-01"]]


def test_table_csv_header_and_rows():
    code, text = run(["table", "k", "--nu", "2.718", "--z", "1", "--format", "csv"])
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "inv_h,mesh_points,estimate_re,estimate_im"
    rows = list(csv.DictReader(io.StringIO(text)))
    assert [float(r["inv_h"]) for r in rows[:3]] == [0.5, 1.0, 2.0]
    assert float(rows[-1]["estimate_re"]) == pytest.approx(4.4990344319187490, rel=1e-15)


def test_table_json_round_trip():
    _, text = run(["table", "i", "--nu", "2", "--z", "1", "--format", "json"])
    doc = json.loads(text)
    last = doc["rows"][-1]
    assert last["estimate_re"] == doc["record"]["value_re"]
    assert last["mesh_points"] == doc["record"]["mesh_points"]


# ---------------------------------------------------------------- validate


def test_validate_all_pass_quickly():
    t0 = time.perf_counter()
    code, out = run(["validate"])
    elapsed = time.perf_counter() - t0
    assert code == 0
    lines = [line for line in out.splitlines() if line.startswith(("PASS", "FAIL"))]
    assert len(lines) >= 20
    assert all(line.startswith("PASS") for line in lines)
    assert elapsed <= 5.0


def test_validate_only():
    code, text = run(["validate", "--only", "wronskian", "--format", "json"])
    assert code == 0
    doc = json.loads(text)
    assert [c["name"] for c in doc["checks"]] == ["wronskian"]


def test_validate_detects_perturbed_k():
    code, text = run(["validate", "--perturb", "1e-8", "--format", "csv"])
    assert code == 2
    status = {r["name"]: r["passed"] for r in csv.DictReader(io.StringIO(text))}
    assert status["wronskian"] == "false"
    assert status["cross_product"] == "false"
    assert status["gaussian"] == "true"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "trapsf", "eval", "k", "--nu", "0", "--z", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "4.21024 43824 07083e-01" in proc.stdout

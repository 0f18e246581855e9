import io
import json
from pathlib import Path

import pytest

from elimdeg.cli import run

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def test_analyze_example1_text():
    code, out, _ = call("analyze", PROBLEMS / "minding1.poly", "--order", "y")
    assert code == 0
    assert "minding_degree: 58" in out and "bezout_bound: 78" in out


def test_analyze_both_orders_json():
    code, out, _ = call("analyze", PROBLEMS / "minding2.poly", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["mode"] == "pattern" and "tool_version" in data
    assert data["reports"]["eliminate_y"]["minding_degree"] == 26
    assert data["reports"]["eliminate_x"]["minding_degree"] == 26


def test_infinity_json():
    code, out, _ = call("infinity", PROBLEMS / "minding2-degenerate.poly", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["finite_count"] == 23
    assert (data["D_x"], data["D_y"], data["D_gen"]) == (25, 24, 26)
    assert "gcd_lead_y_order" not in data


def test_infinity_concrete_reports_gcds():
    code, out, _ = call("infinity", PROBLEMS / "minding2-instance.poly", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["gcd_lead_y_order"] == [0, 0, 1]
    assert data["gcd_lead_x_order"] == [0, 1]
    assert data["finite_count"] == 23


def test_shared_factor_exit_1():
    code, out, err = call("analyze", PROBLEMS / "shared-factor.poly")
    assert code == 1 and out == ""
    assert "resultant vanishes identically: common factor" in err


def test_resultant_json():
    code, out, _ = call("resultant", PROBLEMS / "lines.poly", "--eliminate", "y", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["degree"] == 1 and data["coefficients"] == [0, 2] and data["eliminate"] == "y"


@pytest.mark.parametrize("method", ["interp", "bareiss", "both"])
def test_resultant_methods_text(method):
    code, out, _ = call("resultant", PROBLEMS / "minding2-instance.poly", "--eliminate", "x",
                        "--method", method)
    assert code == 0 and "degree: 24" in out


def test_resultant_rejects_pattern():
    code, _, err = call("resultant", PROBLEMS / "minding1.poly", "--eliminate", "y")
    assert code == 4 and "concrete" in err


def test_verify_deterministic():
    args = ("verify", PROBLEMS / "minding2-degenerate.poly", "--eliminate", "y", "--trials", "3",
            "--seed", "5", "--json")
    first, second = call(*args), call(*args)
    assert first == second
    data = json.loads(first[1])
    assert data["predicted"] == 25 and data["agreement"] == 1


def test_parse_error_exit_2(tmp_path):
    bad = tmp_path / "bad.poly"
    bad.write_text("f = y +\ntheta = y\n")
    code, _, err = call("analyze", bad)
    assert code == 2 and "line 1" in err


def test_usage_errors():
    assert call()[0] == 4
    assert call("analyze")[0] == 4
    assert call("frobnicate", "x")[0] == 4
    assert call("verify", PROBLEMS / "minding1.poly")[0] == 4  # --eliminate missing
    assert call("analyze", "/nonexistent/file.poly")[0] == 4
    assert call("verify", PROBLEMS / "minding1.poly", "--eliminate", "y", "--trials", "0")[0] == 4


def test_help_exit_0():
    code, out, _ = call("--help")
    assert code == 0 and "analyze" in out


def test_mixed_file_warns(tmp_path):
    p = tmp_path / "mixed.poly"
    p.write_text("f = (x^1)*y + 3\ntheta = #*y^2 + #\n")
    code, _, err = call("analyze", p, "--order", "y")
    assert code == 0 and "warning" in err

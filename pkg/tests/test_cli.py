import json
import math
import subprocess
import sys

import pytest

from kleinian_rp import construct_generators
from kleinian_rp.cli import round_sig, run

SQ5 = math.sqrt(5)


def call(capsys, *argv):
    code = run([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_mindist_77(capsys):
    code, out, _ = call(capsys, "mindist", 7, 7, "--json")
    d = json.loads(out)
    assert code == 0 and d["cosh_rho_min"] == pytest.approx(1.655971, abs=1e-6)
    assert d["printed"] == 1.656


def test_classify_row34_full_precision(capsys):
    code, out, _ = call(capsys, "classify", "--beta", -3, "--beta-prime", repr(SQ5),
                        "--gamma", repr((SQ5 + 1) / 2), "--json")
    d = json.loads(out)
    assert code == 0 and d["status"] == "discrete" and [m["row"] for m in d["matched_rows"]] == [34]


def test_classify_row34_eight_digits(capsys):
    # eight significant digits carry ~1e-7 error, so the matching tolerances must allow it
    code, out, _ = call(capsys, "classify", "--beta", -3, "--beta-prime", "2.2360679", "--gamma", "1.6180339",
                        "--eps-match", "1e-7", "--eps", "1e-6")
    assert code == 0 and "status: discrete" in out and "row 34" in out


def test_classify_elementary(capsys):
    code, out, _ = call(capsys, "classify", "--beta", -3, "--beta-prime", 1, "--gamma", 0)
    assert code == 2 and "out_of_scope" in out and "elementary" in out


def test_json_round_trip(capsys):
    code, out, _ = call(capsys, "classify", "--beta", -3, "--beta-prime", 1, "--gamma", 0.7, "--json")
    d = json.loads(out)
    t = d["triple"]
    _, again, _ = call(capsys, "classify", "--beta", t["beta"], "--beta-prime", t["beta_prime"],
                       "--gamma", t["gamma"], "--json")
    assert json.loads(again) == d and d["status"] == "not_discrete"


def test_decide_matrix_file(capsys, tmp_path):
    f, g = construct_generators(__import__("kleinian_rp").ParamTriple(-3, SQ5, (SQ5 + 1) / 2))
    path = tmp_path / "pair.json"
    path.write_text(json.dumps({"f": f.to_json(), "g": g.to_json()}))
    code, out, _ = call(capsys, "decide", "--matrix-file", path, "--json")
    d = json.loads(out)
    assert code == 0 and d["theorem_a_clause"] == "iii" and d["agreement"] is True


def test_construct(capsys):
    code, out, _ = call(capsys, "construct", "--beta", -3, "--beta-prime", 2, "--gamma", 1, "--json")
    d = json.loads(out)
    assert code == 0 and d["round_trip"] == {"beta": -3.0, "beta_prime": 2.0, "gamma": 1.0}


def test_witnesses(capsys):
    code, out, _ = call(capsys, "witnesses", "--beta", -3, "--beta-prime", repr(SQ5),
                        "--gamma", repr((SQ5 + 1) / 2), "--json")
    d = json.loads(out)
    assert code == 0 and d["n"] == 3 and d["clause"] == "iii"
    assert all(v < 1e-9 for v in d["residuals"].values())


def test_witnesses_precondition(capsys):
    code, _, err = call(capsys, "witnesses", "--beta", 2, "--beta-prime", 2, "--gamma", 1)
    assert code == 1 and "error" in err


def test_enumerate_sorted_and_deterministic(capsys, tmp_path):
    code, out, _ = call(capsys, "enumerate", "--row", 22, "--cap", 9)
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and lines and all(x["row"] == 22 for x in lines)
    keys = [tuple(x["params"][k] for k in sorted(x["params"])) for x in lines]
    assert keys == sorted(keys)
    target = tmp_path / "rows.jsonl"
    call(capsys, "enumerate", "--row", 22, "--cap", 9, "--out", target)
    assert target.read_text() == out


def test_enumerate_bad_row(capsys):
    code, _, err = call(capsys, "enumerate", "--row", 50)
    assert code == 1 and "error" in err


def test_verify_353(capsys):
    code, out, _ = call(capsys, "verify-353", "--json")
    d = json.loads(out)
    assert code == 0 and d["ok"] is True


def test_cap_flags_do_not_clash_with_positionals(capsys):
    code, out, _ = call(capsys, "mindist", 3, 5, "--cap-p", 10)
    assert code == 0 and "cosh rho_min(3, 5)" in out


def test_usage_errors(capsys):
    assert call(capsys)[0] == 1
    assert call(capsys, "classify", "--beta", 1)[0] == 1
    assert call(capsys, "--help")[0] == 0


def test_round_sig():
    assert round_sig({"x": [1.23456789012345678, math.inf]}) == {"x": [1.23456789012, "inf"]}


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "kleinian_rp", "mindist", "7", "2"],
                         capture_output=True, text=True, check=True).stdout
    assert "1.15" in out

import json
import subprocess
import sys

import pytest

from capelli.cli import run
from capelli.young import phi_lambda


def out_of(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_fusion_matches_symmetrizer(capsys):
    c1, a, _ = out_of(capsys, ["fusion", "--shape", "2,1"])
    c2, b, _ = out_of(capsys, ["symmetrizer", "--shape", "2,1"])
    assert c1 == c2 == 0
    assert a == b
    assert json.loads(a) == phi_lambda((2, 1)).to_json()


def test_output_is_deterministic(capsys):
    _, a, _ = out_of(capsys, ["phi-pair", "--lambda", "2,1", "--mu", "1"])
    _, b, _ = out_of(capsys, ["phi-pair", "--lambda", "2,1", "--mu", "1"])
    assert a == b


def test_pole_order(capsys):
    code, out, _ = out_of(capsys, ["phi-pair", "--lambda", "1", "--mu", "1", "--pole-order"])
    assert code == 0 and out.strip() == "1"


def test_rational_function_coefficients(capsys):
    _, out, _ = out_of(capsys, ["phi-pair", "--lambda", "1", "--mu", "1"])
    data = json.loads(out)
    swap = next(t for t in data if t["perm"] == [2, 1])
    assert swap["coeff"] == {"num": ["1"], "den": ["0", "1"]}


@pytest.mark.parametrize("name", ["shifted-product", "prop212"], ids=["name", "alias"])
def test_shifted_product(capsys, name):
    code, out, _ = out_of(capsys, [name, "--shape", "2,1"])
    assert code == 0 and json.loads(out) == {"shape": [2, 1], "holds": True}


def test_qdet(capsys):
    code, out, _ = out_of(capsys, ["qdet", "--N", "1"])
    assert code == 0
    assert json.loads(out) == {"N": 1, "coefficients": [[{"coeff": "-1", "monomial": [[1, 1, 1]]}]]}


def test_elambda(capsys):
    code, out, _ = out_of(capsys, ["elambda", "--shape", "1", "--N", "2", "--z-poly", "--format", "text"])
    assert code == 0
    assert out.splitlines() == ["z^0: E11 + E22", "z^1: 2"]


@pytest.mark.parametrize(
    "formula", ["1.1", "1.3", "image", "character", "product"],
    ids=["alias-character", "alias-product", "image", "character", "product"],
)
def test_capelli_formulas_agree(capsys, formula):
    code, out, _ = out_of(capsys, ["capelli", "--shape", "1,1", "--N", "2", "--M", "2", "--formula", formula])
    assert code == 0
    _, ref, _ = out_of(capsys, ["capelli", "--shape", "1,1", "--N", "2", "--M", "2"])
    assert out == ref


def test_usage_errors(capsys):
    assert out_of(capsys, ["fusion", "--shape", "1,2"])[0] == 2
    assert out_of(capsys, ["fusion", "--shape", "x"])[0] == 2
    assert out_of(capsys, ["fusion", "--shape", "9"])[0] == 2
    assert out_of(capsys, ["capelli", "--shape", "2", "--N", "9", "--M", "1"])[0] == 2
    assert out_of(capsys, ["verify", "--suite", "fusion", "--max-n", "0"])[0] == 2
    assert out_of(capsys, ["verify", "--suite", "fusion", "--max-n", "12"])[0] == 2
    assert out_of(capsys, ["nonsense"])[0] == 2
    code, out, err = out_of(capsys, ["fusion", "--shape", "1,2"])
    assert out == "" and "bad shape" in err


def test_verify_small(capsys):
    code, out, _ = out_of(capsys, ["verify", "--suite", "fusion", "--max-n", "3"])
    assert code == 0
    assert out.startswith("PASS fusion")


def test_verify_json(capsys):
    code, out, _ = out_of(capsys, ["verify", "--suite", "rtt", "--max-N", "2", "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["ok"] and data["suites"][0]["first_failure"] is None


def test_verify_reports_smallest_failure(capsys, monkeypatch):
    from capelli import sweeps

    def broken(lam):
        return sum(lam) < 3, "forced failure"

    monkeypatch.setitem(sweeps.CHECKS, "fusion_limit", broken)
    code, out, _ = out_of(capsys, ["verify", "--suite", "fusion", "--max-n", "4"])
    assert code == 1
    assert "smallest failing instance: fusion_limit(lam=(3)): forced failure" in out


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "capelli", "phi-pair", "--lambda", "1", "--mu", "1", "--pole-order"],
        capture_output=True, text=True,
    )
    assert res.returncode == 0 and res.stdout.strip() == "1"


@pytest.mark.slow
def test_verify_all_default(capsys):
    code, out, _ = out_of(capsys, ["verify", "--suite", "all", "--max-n", "4"])
    assert code == 0, out
    assert out.count("PASS") == 4

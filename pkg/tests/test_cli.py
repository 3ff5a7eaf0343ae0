import io
import json

import pytest

from skewnull.cli import run_command


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_affine_count():
    code, out, _ = run("affine", "count", "--p", "3", "--m", "2", "--k", "1", "--n", "2")
    doc = json.loads(out)
    assert code == 0
    assert list(doc) == ["command", "params", "results", "elapsed_ms"]
    assert doc["results"] == [{"q": 9, "k": 1, "n": 2, "count": 33, "formula_count": 33,
                               "mod_p_ok": True}]


def test_affine_enum_text():
    code, out, _ = run("affine", "enum", "--p", "2", "--m", "2", "--k", "1", "--n", "2",
                       "--format", "text")
    assert code == 0 and len(out.splitlines()) == 10 and out.startswith("(0, 0)\n")


def test_cw_check_passes():
    code, out, _ = run("cw-check", "--p", "3", "--m", "2", "--k", "1", "--n", "5",
                       "--poly", "x1+x2+x3+x4+x5")
    report = json.loads(out)["results"][0]
    assert code == 0 and report["pass"] and report["hypothesis"]
    assert report["observed"]["points"] == 969


def test_nf():
    code, out, _ = run("nf", "--p", "2", "--m", "2", "--k", "1", "--n", "2",
                       "--poly", "x2*x1^2", "--format", "text")
    assert code == 0 and out == "poly=x2*x1^2 normal_form=x2^2*x1\n"


def test_csv_columns():
    code, out, _ = run("ax-check", "--p", "3", "--m", "2", "--k", "1", "--n", "2",
                       "--poly", "x1*x2", "--format", "csv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "theorem,params,hypothesis,observed,expected,pass"
    assert lines[1].startswith("skew_ax,") and lines[1].endswith(",true")


def test_cn_quaternion():
    code, out, _ = run("cn-check", "--ring", "quaternion", "--poly", "x^2+1", "--set", "i", "j", "1")
    report = json.loads(out)["results"][0]
    assert code == 0 and report["observed"] == {"witness": ["1"], "value": "2"}


def test_small_commands():
    assert run("minpoly", "--p", "2", "--m", "2", "--k", "1", "--set", "0", "1", "g", "g^2",
               "--format", "text")[1] == 'set=["0","1","g^1","g^2"] minpoly=x^3 + x rank=3\n'
    assert json.loads(run("rank", "--ring", "quaternion", "--set", "i", "j")[1])["results"][0]["rank"] == 2
    out = run("lclm", "--ring", "quaternion", "--f", "x-i", "--g", "x-j", "--format", "text")[1]
    assert "lclm=x^2 + 1" in out
    out = run("gcrd", "--p", "2", "--m", "2", "--k", "1", "--f", "x^3-x", "--g", "x-g")[1]
    assert json.loads(out)["results"][0]["gcrd"] == "x + g^1"
    out = run("eval", "--p", "3", "--m", "2", "--k", "1", "--n", "2", "--poly", "x1*x2",
              "--point", "g^2", "g^2")[1]
    # sigma(g^2) g^2 = g^8 = 1
    assert json.loads(out)["results"][0]["value"] == "1"
    code, out, _ = run("vanish-check", "--p", "2", "--m", "2", "--k", "1", "--n", "1",
                       "--poly", "x^3 - x")
    assert code == 0 and json.loads(out)["results"][0]["vanishes"] is True


def test_finitesatz_commands():
    code, out, _ = run("finitesatz-cert", "--p", "2", "--m", "2", "--k", "1", "--n", "2",
                       "--poly", "x1", "--poly", "x1-1")
    report = json.loads(out)["results"][0]
    assert code == 0 and report["pass"] and report["observed"]["identity"]
    code, out, _ = run("finitesatz-1v", "--p", "2", "--m", "2", "--k", "1", "--poly", "x-g")
    assert code == 0 and json.loads(out)["results"][0]["pass"]


@pytest.mark.parametrize("argv", [
    ["nf", "--p", "2", "--m", "2", "--n", "2", "--poly", "x3"],
    ["nf", "--p", "4", "--poly", "x1"],
    ["nf"],
    ["bogus"],
    ["cn-check", "--ring", "quaternion", "--poly", "x^2+1", "--set", "i", "j"],
    ["finitesatz-cert", "--p", "2", "--n", "1", "--poly", "x1"],
    ["eval", "--p", "3", "--m", "2", "--k", "1", "--n", "2", "--poly", "x1", "--point", "g", "g^2"],
    ["affine", "count", "--ring", "gaussian"],
])
def test_usage_errors_exit_2(argv):
    code, out, err = run(*argv)
    assert code == 2 and out == "" and err


def test_sweep_deterministic():
    argv = ["sweep", "--theorem", "cn", "--p", "3", "--m", "2", "--k", "1", "--n", "2",
            "--count", "20", "--seed", "5", "--no-timing"]
    first, second = run(*argv), run(*argv)
    assert first == second and first[0] == 0
    assert json.loads(first[1])["elapsed_ms"] is None


@pytest.mark.parametrize("theorem", ["cw", "ax", "nf", "finitesatz", "finitesatz-1v", "roundtrip"])
def test_sweeps_pass(theorem):
    code, out, _ = run("sweep", "--theorem", theorem, "--p", "2", "--m", "2", "--k", "1",
                       "--n", "1" if theorem == "finitesatz-1v" else "2", "--count", "5")
    assert code == 0 and json.loads(out)["results"][0]["observed"]["failed"] == 0


def test_modulus_flag():
    code, out, _ = run("affine", "count", "--p", "3", "--m", "2", "--k", "1", "--n", "2",
                       "--modulus", "x^2+x+2")
    assert code == 0 and json.loads(out)["results"][0]["count"] == 33
    # x^2 + x + 1 = (x - 1)^2 over F_3
    assert run("affine", "count", "--p", "3", "--m", "2", "--modulus", "x^2+1+x")[0] == 2

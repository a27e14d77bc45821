from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

import corpus
from equicurve.cli import main


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def run_json(argv):
    code, text, err = run(argv)
    return code, (json.loads(text) if text else None), err


@pytest.fixture
def files(tmp_path):
    def write(name, data):
        p = tmp_path / name
        p.write_text(data if isinstance(data, str) else json.dumps(data))
        return p

    paths = {
        "C1": write("C1.json", corpus.C1_JSON),
        "C2": write("C2.json", corpus.C2_JSON),
        "D2": write("D2.json", [{"place": "inf:+", "coeff": 2}, {"place": "inf:-", "coeff": 2}]),
        "D3": write("D3.json", [{"place": "inf:+", "coeff": 3}, {"place": "inf:-", "coeff": 3}]),
        "tame": write("tame.json", {"n": 2, "gY": 1, "branch": [{"e": 2, "tame": True}] * 2}),
        "P6": write("P6.json", {"n": 2, "gY": 0, "p": 7, "branch": [{"e": 2, "tame": True}] * 6}),
        "spec": write("spec.json", {"branch_coeffs": [1, 0, 0, 0, 0, 0], "free_orbits": [{"nQ": 1, "count": 1}]}),
        "low": write("low.json", {"branch_coeffs": [0] * 6, "free_orbits": [{"nQ": 1, "count": 1}]}),
        "bad": write("bad.json", "{not json"),
        "g3": write("g3.json", {"p": 11, "f": [0, 1, 3, 2, 0, 0, 0, 0, 1]}),
    }
    paths["tmp"] = tmp_path
    return paths


def test_dims(files):
    code, out, _ = run_json(["dims", "--curve", files["C1"], "--m", 2])
    assert code == 0 and out["total"] == 3 and out["invariant"] == 3 and out["schema"] == 1
    code, out, _ = run_json(["dims", "--curve", files["C2"], "--m", 1])
    assert code == 0 and (out["total"], out["invariant"]) == (2, 2)
    code, out, _ = run_json(["dims", "--profile", files["tame"], "--m", 1])
    assert code == 0 and out["invariant"] == 1
    code, out, _ = run_json(["dims", "--curve", files["C1"], "--divisor", files["D3"]])
    assert code == 0 and (out["total"], out["invariant"], out["invariant_oracle"]) == (5, 4, 4)
    code, out, _ = run_json(["dims", "--profile", files["P6"], "--divisor", files["spec"]])
    assert code == 0 and (out["degree"], out["invariant"]) == (3, 2)


def test_dims_force(files):
    code, _, err = run_json(["dims", "--profile", files["P6"], "--divisor", files["low"]])
    assert code == 65 and "DegreeTooSmall" in err
    code, out, _ = run_json(["dims", "--profile", files["P6"], "--divisor", files["low"], "--force"])
    assert code == 0 and out["invariant"] == 2 and out["outside_hypothesis"]


def test_faithful(files):
    code, out, _ = run_json(["faithful", "--curve", files["C2"], "--m", 1])
    assert code == 0 and (out["result"], out["clause"]) == ("trivial", "faithful1/p=2")
    code, out, _ = run_json(["faithful", "--curve", files["C1"], "--m", 3])
    assert code == 0 and out["result"] == "faithful"
    code, out, _ = run_json(["faithful", "--curve", files["C1"], "--divisor", files["D3"]])
    assert out["clause"] == "trivialD4(a)" and out["detail"]["matrix_result"] == "faithful"
    code, out, _ = run_json(["faithful", "--profile", files["P6"], "--divisor", files["spec"]])
    assert code == 0 and out["clause"] == "trivialD3(n=2)" and out["result"] == "trivial"
    code, out, _ = run_json(["faithful", "--profile", files["P6"], "--m", 2])
    assert out["clause"] == "trivialPoly"


def test_basis_and_rr(files):
    code, out, _ = run_json(["basis", "--curve", files["C1"], "--m", 3])
    assert code == 0 and out["labels"] == ["1*omega", "x*omega", "x^2*omega", "x^3*omega", "y*omega"]
    assert all(out["holomorphic"])
    code, out, _ = run_json(["rr", "--curve", files["C1"], "--divisor", files["D2"]])
    assert code == 0 and out["dim"] == 3


def test_goppa(files):
    wp = [f"fin:a={a}:y=0" for a in range(1, 7)]
    pts = files["tmp"] / "pts.json"
    pts.write_text(json.dumps(wp))
    alist = files["tmp"] / "code.alist"
    code, out, _ = run_json(["goppa", "--curve", files["C1"], "--divisor", files["D2"], "--points", pts, "--alist", alist])
    assert code == 0 and (out["code"]["n"], out["code"]["k"], out["min_distance"]) == (6, 3, 4)
    assert alist.read_text().startswith("6 3 7\n")
    code, out, _ = run_json(["goppa", "--curve", files["C1"], "--divisor", files["D3"]])
    assert code == 0 and out["extension"] == 2 and out["code"]["n"] > 6
    assert out["action"]["evaluation_injective"] and out["rr_action_faithful"]


def test_deform(files):
    code, out, _ = run_json(["deform", "--curve", files["C1"]])
    assert code == 0 and (out["dim"], out["crosscheck"], out["hypothesis"]) == (3, 3, "proved")
    code, out, _ = run_json(["deform", "--profile", files["tame"]])
    assert code == 0 and out["dim"] == 2 and out["hypothesis"] == "assumed"
    code, out, _ = run_json(["deform", "--profile", files["tame"], "--group-shape", '{"N":2,"cyclicQuotient":1}'])
    assert out["hypothesis"] == "assumed"  # no characteristic in the profile: only N = 1 qualifies
    code, _, _ = run_json(["deform", "--profile", files["tame"], "--group-shape", "nope"])
    assert code == 64


def test_check_is_deterministic(files):
    first = run(["check", "--curve", files["C1"], "--seed", 5])
    second = run(["check", "--curve", files["C1"], "--seed", 5])
    assert first[0] == 0 and first[1] == second[1]
    report = json.loads(first[1])
    assert report["ok"] and report["seed"] == 5
    code, out, _ = run_json(["check", "--curve", files["C2"], "--sweep", 4])
    assert code == 0 and out["ok"]


def test_check_with_extra_group(files):
    tau = {"kind": "affine", "alpha": 2, "beta": 0, "lambda": 1}
    sigma = {"kind": "affine", "alpha": 1, "beta": 0, "lambda": 6}
    for gens, order in (([tau], 3), ([sigma, tau], 6)):
        path = files["tmp"] / "C1group.json"
        path.write_text(json.dumps(dict(corpus.C1_JSON, group=gens)))
        code, out, _ = run_json(["check", "--curve", path, "--sweep", 4])
        assert code == 0 and out["ok"] and out["group_order"] == order


def test_table_format_and_option_placement(files):
    a = run(["--format", "table", "dims", "--curve", files["C1"], "--m", 2])
    b = run(["dims", "--curve", files["C1"], "--m", 2, "--format", "table"])
    assert a == b and a[0] == 0 and "invariant: 3" in a[1]


def test_usage_errors(files):
    assert run(["dims", "--curve", files["bad"], "--m", 2])[0] == 64
    assert run(["dims", "--curve", files["tmp"] / "missing.json", "--m", 2])[0] == 64
    assert run(["dims", "--curve", files["C1"]])[0] == 64
    assert run(["dims", "--curve", files["C1"], "--m", 0])[0] == 64
    assert run(["frobnicate"])[0] == 64
    assert run([])[0] == 64


def test_library_errors_map_to_65(files):
    path = files["tmp"] / "sing.json"
    path.write_text(json.dumps({"p": 7, "f": [4, 4, 6, 3, 3, 1]}))  # (x - 1)^2 (x - 2)(x - 3)(x - 4)
    code, _, err = run(["dims", "--curve", path, "--m", 1])
    assert code == 65 and err


def test_console_script(files):
    proc = subprocess.run(
        [sys.executable, "-m", "equicurve.cli", "dims", "--curve", str(files["C1"]), "--m", "2"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["invariant"] == 3

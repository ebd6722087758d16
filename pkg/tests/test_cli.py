import json
import subprocess
import sys

import pytest

from weighthom.cli import run
from weighthom.complex import save_complex
from weighthom.homology import ModuleInvariants


def out_of(capsys, argv):
    code = run(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_homology_text(capsys):
    code, out, _ = out_of(capsys, ["homology", "fig1", "--dim", "1"])
    assert code == 0
    assert out.strip() == "H_1^v = R^1 (+) R/(pi^1) (+) R/(pi^4)"


def test_homology_from_path(capsys, tmp_path, fig1):
    p = tmp_path / "fig1.json"
    p.write_text(save_complex(fig1))
    code, out, _ = out_of(capsys, ["homology", str(p), "--dim", "1"])
    assert code == 0 and "R/(pi^4)" in out


def test_homology_json_round_trips(capsys):
    code, out, _ = out_of(capsys, ["homology", "fig1", "--json", "--oracle"])
    assert code == 0
    docs = json.loads(out)["homology"]
    assert [d["dim"] for d in docs] == [0, 1, 2]
    assert ModuleInvariants.from_dict(docs[1]) == ModuleInvariants(1, (1, 4))
    assert all(d["structure_agrees"] for d in docs)


def test_pairing_table(capsys):
    code, out, _ = out_of(capsys, ["pairing", "fig1", "--dim", "1"])
    assert code == 0
    rows = [line.split() for line in out.splitlines()]
    assert ["AB", "ABC", "1"] in rows and ["AC", "ACD", "4"] in rows
    assert "free kappas: BC" in out


def test_basis_dump(capsys):
    code, out, _ = out_of(capsys, ["basis", "fig1", "--dim", "1"])
    assert code == 0
    assert "K = {AB, AC, BC}" in out and "M = {AD, BD, CD}" in out


def test_basis_with_order_seed(capsys):
    code, out, _ = out_of(capsys, ["basis", "fig1", "--dim", "1", "--order", "3", "--json"])
    assert code == 0
    assert len(json.loads(out)["basis"][0]["kappa"]) == 3


def test_quotient_and_theta(capsys):
    code, out, _ = out_of(capsys, ["quotient", "fig1", "--vprime", "0", "--dim", "1"])
    assert code == 0 and "R/(pi^1) (+) R/(pi^4) (+) R/(pi^4)" in out
    code, out, _ = out_of(capsys, ["theta", "rp2", "--dim", "1"])
    assert code == 0 and "not injective" in out
    code, out, _ = out_of(capsys, ["theta", "sphere", "--json"])
    assert all(d["injective"] for d in json.loads(out)["theta"])


def test_bistruct(capsys):
    code, out, _ = out_of(capsys, ["bistruct", "--s", "((..))", "--t", "......"])
    assert code == 0
    assert "S:1-6     [1, 2, 5, 6]" in out
    assert "H_0^v = R^1" in out


def test_bistruct_lean_closed_forms(capsys):
    code, out, _ = out_of(capsys, ["bistruct", "--s", "(..)(..)", "--t", "..(..)..", "--json"])
    doc = json.loads(out)
    assert code == 0 and doc["lean"] and all(doc["closed_forms_match"])
    assert doc["crossing_components"] == 1


def test_check_single_fixture(capsys):
    code, out, _ = out_of(capsys, ["check", "fig1"])
    assert code == 0 and "match" in out


def test_check_suite_small(capsys):
    code, out, _ = out_of(capsys, ["check", "--cases", "5", "--json"])
    assert code == 0
    assert json.loads(out)["summary"] == {"cases": 5, "mismatches": []}


def test_field_option(capsys):
    code, out, _ = out_of(capsys, ["homology", "rp2", "--field", "fp:2", "--dim", "2"])
    assert code == 0 and out.strip() == "H_2^v = R^1"


def test_output_is_deterministic(capsys):
    a = out_of(capsys, ["pairing", "torus", "--json"])
    b = out_of(capsys, ["pairing", "torus", "--json"])
    assert a == b


@pytest.mark.parametrize("argv,code", [
    (["nope"], 2),
    (["homology", "fig1", "--bogus"], 2),
    (["homology", "fig1", "--dim", "7"], 2),
    (["bistruct", "--s", "(.)"], 2),
    (["homology", "missing.json"], 1),
    (["homology", "fig1", "--field", "fp:4"], 2),
    (["bistruct", "--s", "(()", "--t", "..."], 1),
])
def test_exit_codes(capsys, argv, code):
    assert run(argv) == code


def test_validation_error_exit(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"simplices": [{"v": [0], "w": 0}, {"v": [1], "w": 0},
                                           {"v": [0, 1], "w": 3}]}))
    code, _, err = out_of(capsys, ["homology", str(p)])
    assert code == 1 and "weight of" in err


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "weighthom.cli", "homology", "fig1", "--dim", "1"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "R/(pi^4)" in r.stdout

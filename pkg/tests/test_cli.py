import json
import subprocess
import sys

import pytest

from foxcoh.cli import dumps, main, run
from foxcoh.manifest import fixture_path

ANTIDIAG = [["0", "0", "1"], ["0", "1", "0"], ["1", "0", "0"]]


def write_manifest(tmp_path, **overrides):
    data = json.loads(fixture_path("gamma8_rho0").read_text())
    data.update(overrides)
    path = tmp_path / "m.json"
    path.write_text(json.dumps(data))
    return str(path)


def no_floats(obj):
    if isinstance(obj, float):
        return False
    if isinstance(obj, dict):
        return all(no_floats(v) for v in obj.values())
    if isinstance(obj, list):
        return all(no_floats(v) for v in obj)
    return True


def test_h1_gamma8(capsys):
    report, code, _ = run(["h1", "gamma8_rho0", "--check"])
    assert code == 0 and report["ok"]
    assert report["reports"]["sp21"]["h1"] == 3
    assert report["reports"]["sp21"]["split"] == {"u21": 3, "m": 0}
    assert report["verdicts"]["central_split_holds"] is True
    assert report["verdicts"]["h1_sp21_minus_u21"] == 0
    assert report["check"] == {"passed": True, "mismatches": []}


def test_h1_quotient_and_inflation():
    report, code, _ = run(["h1", "gammaW_rhoW", "--quotient", "--check"])
    assert code == 0
    q = report["quotient"]
    assert {f: r["h1"] for f, r in q["reports"].items()} == {"sp21": 8, "u21": 4, "su21": 4, "m": 4}
    assert all(q["inflation_holds"].values())
    assert q["verdicts"]["deformable_outside_u21_first_order"] is True


def test_json_is_deterministic_and_exact(tmp_path):
    out1, out2 = tmp_path / "1.json", tmp_path / "2.json"
    assert main(["h1", "z3z3_rhoW", "--json", str(out1)]) == 0
    assert main(["h1", "z3z3_rhoW", "--json", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    data = json.loads(out1.read_text())
    assert no_floats(data)
    assert dumps(data) == out1.read_text()


def test_json_to_stdout(capsys):
    assert main(["abelianization", "gammaW_rhoW", "--quotient", "--json", "-"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["presentation"]["free_rank"] == 2
    assert data["quotient"]["invariant_factors"] == [3, 3]
    assert data["quotient"]["group"] == "Z/3 + Z/3"


def test_human_summary(capsys):
    assert main(["h1", "gamma8_rho0", "--flavor", "sp21"]) == 0
    out = capsys.readouterr().out
    assert "H1=3" in out and "split u21=3 m=0" in out


def test_verify_fixtures():
    for name in ("gamma8_rho0", "gammaW_rhoW", "z3z3_rhoW"):
        report, code, _ = run(["verify", name])
        assert code == 0, report
        assert all(report["membership"].values())
        assert report["form"]["signature"] == [2, 1]


def test_not_in_group(tmp_path):
    images = json.loads(fixture_path("gamma8_rho0").read_text())["images"]
    images["a"] = [["2", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    path = write_manifest(tmp_path, form=ANTIDIAG, images=images)
    report, code, _ = run(["verify", path])
    assert code == 1
    codes = [f["code"] for f in report.get("failures", [])]
    if "error" in report:
        codes.append(report["error"]["code"])
    assert "NOT_IN_GROUP" in codes


def test_not_a_representation(tmp_path):
    path = write_manifest(tmp_path, relators=["ab"])
    report, code, _ = run(["verify", path])
    assert code == 1
    assert report["failures"][0]["code"] == "NOT_A_REPRESENTATION"
    assert run(["h1", path])[1] == 1


@pytest.mark.parametrize("relator,code", [("Bab1", "SYNTAX_ERROR"), ("abc", "UNKNOWN_GENERATOR")])
def test_bad_words_exit_2(tmp_path, relator, code):
    report, exit_code, _ = run(["h1", write_manifest(tmp_path, relators=[relator])])
    assert exit_code == 2
    assert report["error"]["code"] == code


def test_bad_entry_exit_2(tmp_path, capsys):
    images = json.loads(fixture_path("gamma8_rho0").read_text())["images"]
    images["a"][0][0] = "1 +"
    path = write_manifest(tmp_path, images=images)
    assert main(["verify", path]) == 2
    assert "SYNTAX_ERROR" in capsys.readouterr().err


def test_missing_manifest():
    report, code, _ = run(["verify", "no_such_manifest"])
    assert code == 2


def test_check_mismatch(tmp_path):
    data = json.loads(fixture_path("gamma8_rho0").read_text())
    data["expected"]["h1"]["sp21"] = 4
    path = write_manifest(tmp_path, expected=data["expected"])
    report, code, _ = run(["h1", path, "--flavor", "sp21", "--check"])
    assert code == 1
    assert report["check"]["passed"] is False
    assert report["failures"][0]["code"] == "CHECK_FAILED"


def test_centralizer_command():
    report, code, _ = run(["centralizer", "gammaW_rhoW", "a", "--check"])
    assert code == 0
    assert report["centralizers"]["sp21"] == {"dim": 21, "centralizer_dim": 7, "pair_space_bound": 7}


def test_fox_command():
    report, code, _ = run(["fox", "gamma8_rho0", "a", "0"])
    assert code == 0
    assert report["augmentation"] == -1
    assert report["relator"] == "BabAbaBAbA"
    assert run(["fox", "gamma8_rho0", "a", "1"])[1] == 2
    assert run(["fox", "gamma8_rho0", "c", "0"])[1] == 2


def test_console_module():
    proc = subprocess.run([sys.executable, "-m", "foxcoh", "abelianization", "gamma8_rho0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "Z" in proc.stdout

import json
import subprocess
import sys

import pytest

from semitoric.cli import DISAGREE, HARTOGS, HYPOTHESIS, INVALID, NOT_HARTOGS, check_file, main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def fx(fixtures_dir, name):
    return str(fixtures_dir / name)


def test_y1_not_hartogs(capsys, fixtures_dir):
    code, out = run(capsys, "check", fx(fixtures_dir, "y1_semiabelian.json"))
    assert code == NOT_HARTOGS
    assert "NOT HARTOGS  witness (0, -1)" in out.out


def test_y2_hartogs(capsys, fixtures_dir):
    code, out = run(capsys, "check", fx(fixtures_dir, "y2_semiabelian.json"))
    assert code == HARTOGS
    assert out.out.strip().endswith("HARTOGS")


def test_toric_flag_overrides_problem(capsys, fixtures_dir):
    code, _ = run(capsys, "check", "--toric", fx(fixtures_dir, "y2_semiabelian.json"))
    assert code == NOT_HARTOGS


@pytest.mark.parametrize("name,needle", [
    ("complete_p2.json", "complete fan"),
    ("two_ends.json", "multiple ends"),
    ("zero_fan_r1.json", "multiple ends"),
])
def test_gating(capsys, fixtures_dir, name, needle):
    code, out = run(capsys, "check", fx(fixtures_dir, name))
    assert code == HYPOTHESIS
    assert needle in out.out


def test_invalid_inputs(capsys, fixtures_dir, tmp_path):
    code, out = run(capsys, "check", fx(fixtures_dir, "bad_fan.json"))
    assert code == INVALID and "invalid fan" in out.out
    code, _ = run(capsys, "check", str(tmp_path / "nope.json"))
    assert code == INVALID


def test_explain_and_cross_check(capsys, fixtures_dir):
    code, out = run(capsys, "check", "--explain", "--cross-check", "--box", "4",
                    fx(fixtures_dir, "y1_semiabelian.json"))
    assert code == NOT_HARTOGS
    assert "C rays: ['(0, -1)']" in out.out
    assert "L basis: ['(0, 1)']" in out.out
    assert "cross-check: ok" in out.out


def test_explain_lists_ends(capsys, fixtures_dir):
    _, out = run(capsys, "check", "--explain", fx(fixtures_dir, "two_ends.json"))
    assert "end 0:" in out.out and "end 1:" in out.out


def test_expected_mismatch_is_reported(capsys, fixtures_dir, tmp_path):
    obj = json.loads((fixtures_dir / "y2_semiabelian.json").read_text())
    obj["expected"] = "not-hartogs"
    p = tmp_path / "wrong.json"
    p.write_text(json.dumps(obj))
    code, out = run(capsys, "check", str(p))
    assert code == HARTOGS
    assert "differs from the file's expected value" in out.out


def test_multiple_files_max_code(capsys, fixtures_dir):
    code, out = run(capsys, "check", fx(fixtures_dir, "y2_semiabelian.json"),
                    fx(fixtures_dir, "y1_semiabelian.json"), fx(fixtures_dir, "complete_p2.json"))
    assert code == HYPOTHESIS
    assert len(out.out.strip().splitlines()) == 3


def test_workers_env(capsys, fixtures_dir, monkeypatch):
    monkeypatch.setenv("SEMITORIC_WORKERS", "2")
    files = [fx(fixtures_dir, n) for n in ("y1_semiabelian.json", "y2_semiabelian.json")]
    code, out = run(capsys, "check", "--json", *files)
    reports = json.loads(out.out)
    assert [r["status"] for r in reports] == ["not-hartogs", "hartogs"]
    assert code == NOT_HARTOGS


def test_json_and_validate_round_trip(capsys, fixtures_dir, tmp_path):
    for name, expect in (("y1_semiabelian.json", NOT_HARTOGS), ("y2_semiabelian.json", HARTOGS),
                         ("torsion_third.json", NOT_HARTOGS)):
        code, out = run(capsys, "check", "--json", fx(fixtures_dir, name))
        assert code == expect
        cert = tmp_path / ("cert_" + name)
        cert.write_text(out.out)
        code, out = run(capsys, "validate", str(cert))
        assert code == 0, out.out
        assert "certificate valid" in out.out


def test_validate_rejects_forged_certificate(capsys, fixtures_dir, tmp_path):
    _, out = run(capsys, "check", "--json", fx(fixtures_dir, "y1_semiabelian.json"))
    obj = json.loads(out.out)
    obj["witness"] = [0, 1]
    p = tmp_path / "forged.json"
    p.write_text(json.dumps(obj))
    code, out = run(capsys, "validate", str(p))
    assert code == INVALID and "fails" in out.out
    # flipping the verdict must also be caught
    obj["hartogs"], obj["witness"] = True, None
    p.write_text(json.dumps(obj))
    code, out = run(capsys, "validate", str(p))
    assert code == INVALID and "meet outside the origin" in out.out


def test_validate_fan_files(capsys, fixtures_dir):
    code, out = run(capsys, "validate", fx(fixtures_dir, "complete_p2.json"))
    assert code == 0 and "smooth=True" in out.out
    code, out = run(capsys, "validate", fx(fixtures_dir, "bad_fan.json"))
    assert code == INVALID and "violation" in out.out


def test_ends_and_dual(capsys, fixtures_dir):
    code, out = run(capsys, "ends", "--json", fx(fixtures_dir, "two_ends.json"))
    assert code == 0 and json.loads(out.out)["ends"] == 2
    code, out = run(capsys, "ends", fx(fixtures_dir, "complete_p2.json"))
    assert code == HYPOTHESIS
    code, out = run(capsys, "dual", "--json", fx(fixtures_dir, "y1_fan.json"))
    assert code == 0 and json.loads(out.out)["rays"] == [[0, -1]]
    code, out = run(capsys, "dual", fx(fixtures_dir, "y2_fan.json"))
    assert "rays: [(-1, 0)]" in out.out


def test_check_file_cross_disagreement_code(fixtures_dir, monkeypatch):
    import semitoric.cli as cli
    monkeypatch.setattr(cli, "cross_check", lambda *a: ["forced"])
    r = check_file(fx(fixtures_dir, "y1_semiabelian.json"), cross=True)
    assert r["exit_code"] == DISAGREE


def test_module_entry_point(fixtures_dir):
    proc = subprocess.run([sys.executable, "-m", "semitoric", "check", fx(fixtures_dir, "y2_semiabelian.json")],
                          capture_output=True, text=True)
    assert proc.returncode == HARTOGS

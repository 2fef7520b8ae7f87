import json
import subprocess
import sys

import pytest

from mwlat.catalog.build import load_entry
from mwlat.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_OK, EXIT_USAGE, SCHEMA, main
from mwlat.sections import Section


def run_json(capsys, *argv):
    code = main([*argv, "--json", "-"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_verify_passes(capsys):
    code, cert = run_json(capsys, "verify", "--m", "4")
    assert code == EXIT_OK and cert["status"] == "pass"
    assert cert["schema"] == SCHEMA and cert["command"] == "verify" and cert["m"] == 4
    assert set(cert) >= {"schema", "version", "command", "m", "status", "checks", "errata", "artifacts", "timing"}
    for c in cert["checks"]:
        assert set(c) == {"name", "status", "detail", "evidence"}


def test_certificates_are_reproducible(capsys):
    _, a = run_json(capsys, "verify", "--m", "6")
    _, b = run_json(capsys, "verify", "--m", "6")
    a.pop("timing"), b.pop("timing")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_json_file_and_summary(tmp_path, capsys):
    out = tmp_path / "cert.json"
    assert main(["verify", "--m", "2", "--json", str(out)]) == EXIT_OK
    text = capsys.readouterr().out
    assert text.startswith("verify m=2: pass")
    assert "erratum" in text
    assert json.loads(out.read_text())["m"] == 2


def test_usage_errors(capsys):
    assert main(["verify", "--m", "13"]) == EXIT_USAGE
    assert main(["nonsense"]) == EXIT_USAGE
    assert main(["verify", "--m", "4", "--precision", "10"]) == EXIT_USAGE
    assert main(["basechange", "--m", "4", "--n", "0"]) == EXIT_USAGE
    assert main(["phi", "--m", "4", "--var", "U"]) == EXIT_USAGE
    capsys.readouterr()


def test_bad_points_files(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["verify", "--m", "6", "--points", str(bad)]) == EXIT_USAGE
    bad.write_text("[]")
    assert main(["verify", "--m", "6", "--points", str(bad)]) == EXIT_USAGE
    wrong_m = tmp_path / "m4.json"
    wrong_m.write_text(json.dumps([p.section.to_json() for p in load_entry(4).points]))
    assert main(["verify", "--m", "6", "--points", str(wrong_m)]) == EXIT_USAGE
    capsys.readouterr()


def test_points_file_checked(tmp_path, capsys):
    pts = [p.section.to_json() for p in load_entry(6).points]
    good = tmp_path / "good.json"
    good.write_text(json.dumps(pts))
    code, cert = run_json(capsys, "verify", "--m", "6", "--points", str(good))
    assert code == EXIT_OK
    pts[0] = Section.make(6, [1], [1]).to_json()
    off = tmp_path / "off.json"
    off.write_text(json.dumps(pts))
    code, cert = run_json(capsys, "verify", "--m", "6", "--points", str(off))
    assert code == EXIT_FAIL and cert["status"] == "fail"


def test_phi_verbs(capsys):
    code, cert = run_json(capsys, "phi", "--m", "4")
    assert code == EXIT_OK
    names = {c["name"] for c in cert["checks"]}
    assert {"catalog_phi_divides_eliminant", "eliminant_equals_match_times_cofactor"} <= names
    code, cert = run_json(capsys, "phi", "--m", "6", "--var", "U")
    assert code == EXIT_OK


def test_phi_budget(capsys):
    code, cert = run_json(capsys, "phi", "--m", "9")
    assert code == EXIT_BUDGET and cert["status"] == "budget"
    assert not any(c["status"] == "fail" for c in cert["checks"])


def test_gram_det_eval(capsys):
    code, cert = run_json(capsys, "gram", "--m", "6")
    assert code == EXIT_OK and cert["artifacts"]["match"] is True
    code, cert = run_json(capsys, "det", "--m", "12")
    assert code == EXIT_OK
    code, cert = run_json(capsys, "eval", "--m", "2")
    assert code == EXIT_OK


def test_basechange_verb(capsys):
    code, cert = run_json(capsys, "basechange", "--m", "4", "--n", "2")
    assert code == EXIT_OK and cert["artifacts"]["det"] == "64/3"
    code, cert = run_json(capsys, "basechange", "--m", "2", "--n", "5")
    assert code == EXIT_OK and cert["artifacts"]["det"] == "25/3"


def test_catalog_dump(capsys):
    assert main(["catalog"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["artifacts"]["ms"] == [2, 3, 4, 5, 6, 8, 9, 10, 12]
    assert main(["catalog", "--m", "4"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert "entry" in data["artifacts"]


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "mwlat.cli", "verify", "--m", "3"], capture_output=True, text=True)
    assert out.returncode == 0, out.stderr
    assert out.stdout.startswith("verify m=3: pass")

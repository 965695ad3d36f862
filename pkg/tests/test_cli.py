"""Command line behavior: exit codes, output shapes, byte stability."""

import json
import subprocess
import sys

import pytest

from drinfeld_forge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_all_passes(capsys):
    code, out, err = run(capsys, "verify", "--series", "A", "--rank", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1].endswith("all passed")
    for name in ("jacobi", "closure", "pairing", "reconstruction",
                 "compatibility", "selfdual", "forminv", "delta-agree",
                 "cocycle", "cojacobi", "subbialg", "coboundary", "cybe",
                 "twist", "chain", "rep-fermionic", "rep-bosonic",
                 "casimir-form"):
        assert any(line.startswith(f"PASS {name}") for line in lines), name


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify", "--series", "C", "--rank", "1",
                       "--checks", "jacobi,cybe")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 3


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--series", "B", "--rank", "2",
                       "--checks", "subbialg", "--sub", "Dn")
    assert code == 1
    assert "FAIL subbialg" in out


def test_bare_chain_fails_via_cli(capsys):
    code, out, _ = run(capsys, "verify", "--series", "A", "--rank", "2",
                       "--checks", "subbialg", "--sub", "An")
    assert code == 1
    code, out, _ = run(capsys, "verify", "--series", "A", "--rank", "2",
                       "--checks", "subbialg", "--sub", "Anc")
    assert code == 0


def test_json_report_shape(capsys):
    code, out, _ = run(capsys, "verify", "--series", "D", "--rank", "2",
                       "--checks", "closure,cybe", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["series"] == "D"
    assert payload["passed"] is True
    assert [r["check"] for r in payload["reports"]] == ["closure", "cybe"]
    assert all(r["pass"] for r in payload["reports"])


def test_rank_validation_exit_two(capsys):
    code, _, err = run(capsys, "verify", "--series", "D", "--rank", "1")
    assert code == 2
    assert "rank" in err


def test_unknown_check_exit_two(capsys):
    code, _, err = run(capsys, "verify", "--series", "A", "--rank", "1",
                       "--checks", "nope")
    assert code == 2
    assert "unknown check" in err


def test_mixed_spec_rejects_canonical_only_checks(capsys):
    code, _, err = run(capsys, "verify", "--series", "D", "--rank", "2",
                       "--spec", "mixed:pairs=1-2", "--checks", "delta-agree")
    assert code == 2
    code, _, err = run(capsys, "verify", "--series", "D", "--rank", "2",
                       "--spec", "mixed:pairs=1-2", "--checks", "subbialg",
                       "--sub", "An")
    assert code == 2


def test_mixed_spec_full_battery_skips_canonical_only(capsys):
    code, out, _ = run(capsys, "verify", "--series", "D", "--rank", "2",
                       "--spec", "mixed:pairs=1-2")
    assert code == 0
    assert "delta-agree" not in out
    assert "twist" not in out


def test_bad_spec_exit_two(capsys):
    code, _, err = run(capsys, "verify", "--series", "A", "--rank", "2",
                       "--spec", "mixed:pairs=1-2;central=9")
    assert code == 2


def test_unwritable_out_exit_three(capsys):
    code, _, err = run(capsys, "export", "--series", "A", "--rank", "1",
                       "--what", "pairing", "--out", "/nonexistent/dir/x.txt")
    assert code == 3
    assert "cannot write" in err


def test_build_payload(capsys):
    code, out, _ = run(capsys, "build", "--series", "C", "--rank", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["basis"] == ["H1", "I1", "P1,1", "Q1,1"]
    assert payload["dimension"] == 4
    assert payload["spec"]["mode"] == "canonical"
    splus = payload["splitting"]["splus"]
    assert splus[0]["gen"] == "X1"
    pairing = payload["splitting"]["pairing"]
    assert all(entry["value"] == ["1", "0", "0", "0"] for entry in pairing)


def test_build_mixed_payload(capsys):
    code, out, _ = run(capsys, "build", "--series", "D", "--rank", "2",
                       "--spec", "mixed:pairs=1-2")
    assert code == 0
    payload = json.loads(out)
    assert payload["spec"]["mode"] == "mixed"
    assert "I1" not in payload["basis"]
    assert payload["dimension"] == 6


@pytest.mark.parametrize("what", ["brackets", "delta", "rmatrix", "pairing",
                                  "matrices"])
def test_exports_are_byte_stable(capsys, what):
    _, first, _ = run(capsys, "export", "--series", "B", "--rank", "2",
                      "--what", what)
    _, second, _ = run(capsys, "export", "--series", "B", "--rank", "2",
                       "--what", what)
    assert first == second
    assert first


def test_export_out_file(tmp_path, capsys):
    target = tmp_path / "table.txt"
    code, out, _ = run(capsys, "export", "--series", "A", "--rank", "1",
                       "--what", "brackets", "--out", str(target))
    assert code == 0
    assert out == ""
    text = target.read_text()
    assert text.startswith("series A rank 1")
    assert "[F1,2, F2,1]" in text


def test_config_supplies_defaults(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"series": "A", "rank": 1,
                               "checks": "jacobi"}))
    code, out, _ = run(capsys, "verify", "--config", str(cfg))
    assert code == 0
    assert out.startswith("PASS jacobi")
    # command line still wins
    code, out, _ = run(capsys, "verify", "--config", str(cfg),
                       "--checks", "cybe")
    assert code == 0
    assert out.startswith("PASS cybe")


def test_config_rejects_unknown_keys(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"series": "A", "rank": 1, "bogus": 3}))
    code, _, err = run(capsys, "verify", "--config", str(cfg))
    assert code == 2
    assert "unknown config keys" in err


def test_missing_series_exit_two(capsys):
    code, _, err = run(capsys, "verify", "--rank", "1")
    assert code == 2
    assert "--series" in err


def test_console_script_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "drinfeld_forge.cli", "verify", "--series",
         "A", "--rank", "1", "--checks", "closure"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "PASS closure" in proc.stdout

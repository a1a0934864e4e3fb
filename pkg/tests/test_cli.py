import json
import subprocess
import sys

import pytest

from modcurve_check.cli import main, parse_args


def test_x13_subset_passes(capsys, tmp_path):
    rep = tmp_path / "r.json"
    code = main(["x13-verify", "--only", "cusps,d_pair,even_model,splitting", "--json", str(rep)])
    out = capsys.readouterr().out
    assert code == 0
    assert "PASS  cusps" in out
    assert "x13-verify: 4 pass, 0 fail, 13 skip" in out
    data = json.loads(rep.read_text())
    statuses = [c["status"] for c in data["checks"]]
    assert data["suite"] == "x13-verify" and data["rng_seed"] == 0
    assert statuses.count("pass") == 4 and statuses.count("skip") == 13


def test_x37_verify_without_jmap(capsys):
    assert main(["x37-verify"]) == 0
    out = capsys.readouterr().out
    assert "SKIP  table_curves" in out
    assert "x37-verify: 5 pass, 0 fail, 1 skip" in out


def test_x37_verify_with_bundled_jmap_reports_row_12(capsys):
    assert main(["x37-verify", "--jmap", "bundled", "--only", "table_curves"]) == 1
    out = capsys.readouterr().out
    assert "FAIL  table_curves" in out
    assert "row 12 (D = 4521)" in out and "12/13 rows agree" in out


def test_x37_table_export(capsys, tmp_path):
    out = tmp_path / "t.csv"
    code = main(["x37-table", "--max-k", "6", "--out", str(out), "--skip", "table_points,table_curves"])
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "k,D,x,y,j,A,B" and len(lines) == 1 + 5
    js = tmp_path / "t.json"
    assert main(["x37-table", "--max-k", "4", "--out", str(js), "--jmap", "bundled", "--skip", "table_points,table_curves"]) == 0
    assert len(json.loads(js.read_text())) == 3


def test_x37_table_listing(capsys):
    assert main(["x37-table", "--max-k", "2", "--skip", "table_points,table_curves"]) == 0
    out = capsys.readouterr().out
    assert "k=1" in out and "D=-3" in out and "k=2" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["x13-verify", "--only", "nope"],
        ["x13-verify", "--only", "cusps", "--skip", "cusps"],
        ["x37-table", "--format", "csv"],
        ["x37-table", "--max-k", "0"],
        ["x13-verify", "--jmap", "bundled"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        parse_args(argv)
    assert exc.value.code == 2


def test_format_inferred_from_out():
    assert parse_args(["x37-table", "--out", "a.csv"]).fmt == "csv"
    assert parse_args(["x37-table", "--out", "a.json"]).fmt == "json"


def test_missing_jmap_file_exits_2(capsys, tmp_path):
    assert main(["x37-verify", "--jmap", str(tmp_path / "missing.txt")]) == 2
    assert "cannot load j-map" in capsys.readouterr().err


def test_malformed_jmap_exits_2(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("[numerator]\n0 0 1\n")
    assert main(["x37-verify", "--jmap", str(p)]) == 2


def test_unwritable_report_exits_2(capsys, tmp_path):
    assert main(["x37-verify", "--only", "non_torsion", "--json", str(tmp_path / "no" / "r.json")]) == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "modcurve_check", "x37-verify", "--only", "map_identity"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "x37-verify: 1 pass, 0 fail, 5 skip" in proc.stdout

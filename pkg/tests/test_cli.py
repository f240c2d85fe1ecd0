import json
import subprocess
import sys

import jsonschema
import pytest

from hnlie.catalog import CATALOG
from hnlie.cli import run
from hnlie.report import load_schema

HC4A = "dim = 4\nbracket 1 2 = 1 e_2\nbracket 1 3 = 1 e_3\nbracket 1 4 = 1 e_4\n"


@pytest.fixture
def hc4a_file(tmp_path):
    p = tmp_path / "hc4a.alg"
    p.write_text(HC4A)
    return p


def test_analyze_json(hc4a_file, capsys):
    assert run(["analyze", str(hc4a_file), "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    jsonschema.validate(out, load_schema())
    assert out["lee_forms"]["theta1"][1] == "-2"
    assert out["combined_label"] == "W^0"
    assert out["derived_algebra_dim"] == 3 and out["center_dim"] == 0


def test_catalog_hc1_text(capsys):
    assert run(["catalog", "hc1"]) == 0
    out = capsys.readouterr().out
    assert "[K]" in out
    assert "F1: 0" in out and "all zero" in out


def test_catalog_hc3b_oracle(capsys):
    assert run(["catalog", "hc3b", "--oracle", "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["combined_label"] == "W^0"
    assert out["oracle"]["ok"] and all(out["oracle"]["checks"].values())
    assert out["oracle"]["norms_oracle"] == [out["norms"][k] for k in ("J1", "J2", "J3")]


def test_catalog_listing_and_all(capsys):
    assert run(["catalog"]) == 0
    assert len(capsys.readouterr().out.strip().splitlines()) == 9
    assert run(["catalog", "--all", "--quiet"]) == 0
    labels = capsys.readouterr().out.split()
    assert labels == ["K", "H-proper", "H-proper", "W_0(J1)-H", "W^0", "W^0", "W^0", "H-proper", "H-proper"]


def test_catalog_all_json_is_schema_valid(capsys):
    assert run(["catalog", "--all", "--format", "json"]) == 0
    reports = json.loads(capsys.readouterr().out)
    schema = load_schema()
    assert [r["name"] for r in reports] == list(CATALOG)
    for r in reports:
        jsonschema.validate(r, schema)


def test_json_is_deterministic_and_float_free(capsys):
    run(["catalog", "hc5a", "--format", "json"])
    first = capsys.readouterr().out
    run(["catalog", "hc5a", "--format", "json"])
    assert capsys.readouterr().out == first

    def walk(x):
        assert not isinstance(x, float)
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        elif isinstance(x, list):
            for v in x:
                walk(v)

    walk(json.loads(first))


def test_exit_codes(tmp_path, capsys):
    bad_syntax = tmp_path / "bad.alg"
    bad_syntax.write_text("dim = 4\nbracket 2 1 = e_3\n")
    assert run(["analyze", str(bad_syntax)]) == 2
    assert "line 2" in capsys.readouterr().err

    jacobi = tmp_path / "jacobi.alg"
    jacobi.write_text("bracket 1 2 = e_3\nbracket 1 3 = e_1\n")
    assert run(["analyze", str(jacobi)]) == 1
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "jacobi" in captured.err

    riem = tmp_path / "riem.alg"
    riem.write_text("metric = diag(1, 1, 1, 1)\n")
    assert run(["analyze", str(riem)]) == 1

    assert run(["analyze", str(tmp_path / "missing.alg")]) == 2
    assert run(["catalog", "hc9"]) == 2
    assert run(["bogus"]) == 2


def test_export_then_analyze(tmp_path, capsys):
    for name in CATALOG:
        path = tmp_path / f"{name}.alg"
        assert run(["export", name, "-o", str(path)]) == 0
        assert run(["analyze", str(path), "--quiet"]) == 0
        from_file = capsys.readouterr().out.strip()
        run(["catalog", name, "--quiet"])
        assert capsys.readouterr().out.strip() == from_file


def test_module_entry_point(hc4a_file):
    proc = subprocess.run(
        [sys.executable, "-m", "hnlie", "analyze", str(hc4a_file), "--quiet"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "W^0"

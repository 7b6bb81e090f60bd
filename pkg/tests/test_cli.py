import json

import pytest

from kfcheck.cli import main


def test_validate_clean(fixtures, capsys):
    assert main(["validate", str(fixtures / "models" / "employment.kfm")]) == 0
    out = capsys.readouterr()
    assert out.out == "" and "0 violation(s)" in out.err


def test_validate_jsonl(fixtures, capsys):
    assert main(["validate", "--format", "jsonl", str(fixtures / "models" / "one_role.kfm")]) == 1
    rows = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert {"axiom": "REL-CONTAINS.2", "tier": "C2", "witness": {"x": "marriedTo"}}.items() <= \
        rows[0].items()


def test_validate_fragment(fixtures, capsys):
    path = str(fixtures / "models" / "star_only.kfm")
    assert main(["validate", "--fragment", "c2", path]) == 0
    assert main(["validate", path]) == 1
    assert "[STAR]" in capsys.readouterr().out


def test_validate_load_errors(tmp_path, capsys):
    bad = tmp_path / "bad.kfm"
    bad.write_text("entity c : Bogus.\n")
    assert main(["validate", str(bad)]) == 2
    assert "line 1, col 12: unknown kind Bogus" in capsys.readouterr().err
    assert main(["validate", str(tmp_path / "missing.kfm")]) == 2


def test_validate_out_file(fixtures, tmp_path):
    out = tmp_path / "report.txt"
    assert main(["validate", "--out", str(out), str(fixtures / "models" / "one_role.kfm")]) == 1
    assert out.read_text().startswith("REL-CONTAINS.2 [C2]")


def test_max_arity_validation():
    with pytest.raises(SystemExit):
        main(["validate", "--max-arity", "1", "x.kfm"])


def test_export_schema(tmp_path):
    out = tmp_path / "kf.ofn"
    assert main(["export-owl", "--schema", "--out", str(out)]) == 0
    assert out.read_text().startswith("Prefix(:=")


def test_export_refused(fixtures, tmp_path, capsys):
    out = tmp_path / "m.ofn"
    assert main(["export-owl", str(fixtures / "models" / "one_role.kfm"), "--out", str(out)]) == 1
    assert not out.exists()
    assert "REL-CONTAINS.2" in capsys.readouterr().err


def test_export_model_with_warning(fixtures, capsys):
    assert main(["export-owl", str(fixtures / "models" / "star_only.kfm")]) == 0
    out = capsys.readouterr()
    assert "ClassAssertion" in out.out and "warning: REL-REIFIED-COH.1" in out.err


def test_export_needs_input(capsys):
    assert main(["export-owl"]) == 2


def test_taxonomy(capsys):
    assert main(["taxonomy"]) == 0
    assert "labels satisfiable" in capsys.readouterr().out
    assert main(["taxonomy", "--mutate", "disjoint-relprops", "--format", "jsonl"]) == 1
    rows = {r["label"]: r["satisfiable"]
            for r in map(json.loads, capsys.readouterr().out.splitlines())}
    assert rows["Asymmetry"] is False


def test_oracle_compare(capsys):
    assert main(["oracle-compare", "--count", "5", "--seed", "3"]) == 0
    assert "agreement=100.00%" in capsys.readouterr().out

import json
import os

import pytest

from src import cli
from src.pipeline.verify_pipeline import GoldenResult

RAW_DIR = os.path.join(os.path.dirname(__file__), "..", "data", "raw")


def _run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_marks_json(capsys):
    code, out, _ = _run(capsys, "marks", "C2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["marks"] == [[2, 0], [1, 1]]
    assert payload["labels"] == ["B", "A"]
    assert payload["schema_version"] == 1


def test_analyze_quaternions_over_c(capsys):
    code, out, _ = _run(capsys, "analyze", "2D4", "--fields", "c", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    coker = payload["cokernels"]["c"]
    assert coker["free_rank"] == 0
    assert coker["invariant_factors"] == [2]
    [generator] = coker["generators"]
    assert generator["order"] == 2
    terms = dict(generator["terms"])
    assert terms["rho5"] % 2 == 1
    assert payload["kernel_rank"] == 1
    assert payload["surjective"] == {"c": False}


def test_analyze_json_is_deterministic(capsys):
    _, first, _ = _run(capsys, "analyze", "2D6", "--format", "json")
    _, second, _ = _run(capsys, "analyze", "2D6", "--format", "json")
    assert first == second
    assert first.endswith("}\n")
    payload = json.loads(first)
    assert sorted(payload) == sorted([
        "schema_version", "group", "subgroups", "marks", "products", "multiplicities", "h_tilde",
        "u_tilde", "norms", "image_characters", "tables", "coordinates", "cokernels",
        "kernel_rank", "surjective", "effective",
    ])
    assert sorted(payload["cokernels"]) == ["c", "int", "int-r", "q", "r"]
    assert payload["group"]["order"] == 12


def test_analyze_s3_rational_is_surjective(capsys):
    code, out, _ = _run(capsys, "analyze", "S3", "--fields", "q", "--format", "json")
    assert code == 0
    assert json.loads(out)["cokernels"]["q"]["presentation"] == "0"


def test_analyze_text_and_latex(capsys):
    code, out, _ = _run(capsys, "analyze", "C3")
    assert code == 0
    assert "TABLE OF MARKS" in out
    assert "KERNEL RANK: 0" in out
    code, out, _ = _run(capsys, "analyze", "C3", "--format", "latex")
    assert code == 0
    assert out.startswith("\\documentclass{article}")
    assert "\\rho_{2}" in out


def test_analyze_group_spec_file(capsys):
    path = os.path.join(RAW_DIR, "c3_permutation.txt")
    code, out, _ = _run(capsys, "analyze", path, "--fields", "c", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["group"]["name"] == "c3_permutation.txt"
    assert payload["cokernels"]["c"]["free_rank"] == 1


def test_out_writes_file(capsys, tmp_path):
    target = tmp_path / "nested" / "c2.json"
    code, out, _ = _run(capsys, "analyze", "C2", "--format", "json", "--out", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["group"]["name"] == "C2"


def test_chartab_and_list_groups(capsys):
    code, out, _ = _run(capsys, "chartab", "2D4", "--field", "r", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["field"] == "r"
    assert payload["names"][-1] == "2rho5"

    code, out, _ = _run(capsys, "chartab", "C3", "--format", "json")
    values = json.loads(out)["values"]
    assert values[1][0] == 1
    assert values[1][1]["order"] == 3

    code, out, _ = _run(capsys, "list-groups", "--format", "json")
    rows = json.loads(out)["worked_examples"]
    assert len(rows) == 14
    assert {"group": "2I", "dynkin": "E8"} in rows


@pytest.mark.parametrize("argv", [
    [],
    ["analyze"],
    ["analyze", "D4"],
    ["analyze", "C2", "--fields", "h"],
    ["analyze", "C2", "--format", "yaml"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(argv, capsys):
    code, _, err = _run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_computation_errors_exit_3(capsys, monkeypatch):
    monkeypatch.setenv("BURNSIDE_ORDER_CAP", "10")
    code, _, err = _run(capsys, "analyze", "S4")
    assert code == 3
    assert "[stage build]" in err

    monkeypatch.setenv("BURNSIDE_ORDER_CAP", "1000")
    monkeypatch.setenv("BURNSIDE_SUBGROUP_CAP", "5")
    code, _, err = _run(capsys, "marks", "S4")
    assert code == 3
    assert "[stage subgroups]" in err


def test_bad_environment_is_a_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("BURNSIDE_ORDER_CAP", "many")
    code, _, err = _run(capsys, "marks", "C2")
    assert code == 2
    assert "BURNSIDE_ORDER_CAP" in err


def test_verify_paper_exit_codes(capsys, monkeypatch):
    monkeypatch.setattr(cli, "run_golden_suite",
                        lambda quick, settings: [GoldenResult("C2", "cyclic", {"kernel rank": True})])
    code, out, _ = _run(capsys, "verify-paper", "--quick")
    assert code == 0
    assert "1/1 passed" in out

    monkeypatch.setattr(cli, "run_golden_suite",
                        lambda quick, settings: [GoldenResult("C2", "cyclic", {"kernel rank": False})])
    code, out, _ = _run(capsys, "verify-paper")
    assert code == 1
    assert "FAIL" in out


def _raise(error):
    def _fail(*args, **kwargs):
        raise error
    return _fail


@pytest.mark.parametrize("command, target, label", [
    ("marks", "table_of_marks", "[stage marks]"),
    ("chartab", "complex_irreducibles", "[stage characters]"),
])
def test_unexpected_errors_name_their_stage(command, target, label, capsys, monkeypatch):
    monkeypatch.setattr(cli, target, _raise(IndexError("index 7 is out of bounds")))
    code, _, err = _run(capsys, command, "S3")
    assert code == 3
    assert label in err
    assert "out of bounds" in err


@pytest.mark.parametrize("error", [KeyError("rho9"), TypeError("bad operand"), IndexError("row 4")])
def test_any_error_outside_a_stage_is_a_computation_error(error, capsys, monkeypatch):
    monkeypatch.setattr(cli, "run_golden_suite", _raise(error))
    code, _, err = _run(capsys, "verify-paper", "--quick")
    assert code == 3
    assert err.startswith("error: [stage cli]")

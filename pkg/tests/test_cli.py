"""Tests for the command-line interface: exit codes, schemas, determinism."""

import json
import subprocess
import sys

import jsonschema
import pytest

from virkit.cli import REPORT_SCHEMA, build_parser, main, run_capture


def run_json(argv):
    code, text = run_capture(argv + ["--output", "json"])
    payload = json.loads(text)
    jsonschema.validate(payload, REPORT_SCHEMA)
    return code, payload


# -- jacobi ----------------------------------------------------------------


def test_jacobi_passes_on_valid_algebra():
    code, text = run_capture(
        ["jacobi", "--algebra", "W", "--rho", "1/2", "--s", "0", "--window", "5"]
    )
    assert code == 0
    assert "passed: yes" in text


def test_jacobi_rejects_excluded_rho():
    code, text = run_capture(["jacobi", "--algebra", "W", "--rho", "-1", "--s", "0"])
    assert code == 2
    assert text.startswith("error:")


def test_jacobi_json_is_byte_stable():
    argv = ["jacobi", "--algebra", "SV", "--s", "1/2", "--window", "5", "--output", "json"]
    first = run_capture(argv)
    second = run_capture(argv)
    assert first == second
    code, payload = run_json(["jacobi", "--algebra", "SV", "--s", "1/2", "--window", "5"])
    assert code == 0
    assert payload["passed"] is True
    assert payload["details"]["label"] == "sv[1/2]"
    assert payload["params"]["s"] == "1/2"


def test_jacobi_field_order_is_fixed():
    _, payload = run_json(["jacobi", "--algebra", "Vir", "--window", "3"])
    assert list(payload) == ["version", "command", "params", "passed", "details"]


# -- cocycle ----------------------------------------------------------------


def test_cocycle_identity_passes():
    code, payload = run_json(["cocycle", "--name", "gamma02", "--rho", "0", "--window", "6"])
    assert code == 0
    assert payload["details"]["identity"]["violation_count"] == 0


def test_cocycle_wrong_rho_is_a_parameter_error():
    code, _ = run_capture(["cocycle", "--name", "gamma11", "--rho", "0"])
    assert code == 2


# -- delta ----------------------------------------------------------------


def test_delta_print_emits_canonical_string():
    code, payload = run_json(["delta", "--print"])
    assert code == 0
    from virkit.classify import compute_delta
    from virkit.poly import canonical_string

    assert payload["details"]["delta"] == canonical_string(compute_delta())


def test_delta_reference_check_reports_the_third_coefficient():
    code, payload = run_json(["delta", "--check-paper"])
    assert code == 1
    det = payload["details"]
    assert det["divisible"] is True
    assert det["shape_ok"] is True
    assert det["delta1_match"] is True
    assert det["delta2_match"] is True
    assert det["delta3_match"] is False
    from virkit.golden import recorded_delta3_difference
    from virkit.poly import canonical_string

    assert det["delta3_difference"] == canonical_string(recorded_delta3_difference())


def test_delta_s0_check_reports_the_sign_flip():
    code, payload = run_json(["delta", "--specialize-s0", "--check-paper"])
    assert code == 1
    assert payload["details"]["matches_reference"] is False
    assert "difference" in payload["details"]


# -- classify ----------------------------------------------------------------


def test_classify_full_bounds_comparison_is_honest():
    code, payload = run_json(["classify", "--s", "1/2", "--expect-paper"])
    assert code == 1
    comparison = payload["details"]["comparison"]
    assert comparison["missing"] == [
        "rho=3/2: point (b=0, bp=1)",
        "rho=3/2: point (b=1, bp=0)",
    ]
    assert comparison["outside_bounds"] == []


def test_classify_s0_full_bounds_matches():
    code, payload = run_json(["classify", "--s", "0", "--expect-paper"])
    assert code == 0
    comparison = payload["details"]["comparison"]
    assert comparison["missing"] == []
    assert comparison["extra"] == []


def test_classify_small_bounds_moves_points_outside():
    code, payload = run_json(
        ["classify", "--s", "1/2", "--max-num", "1", "--max-den", "1", "--expect-paper"]
    )
    comparison = payload["details"]["comparison"]
    assert comparison["missing"] == []
    assert len(comparison["outside_bounds"]) == 6
    # the only failures are genuine extras, never the out-of-range points
    assert code == 1
    assert all("rho=3/2" in item for item in comparison["outside_bounds"])


def test_classify_rejects_unsupported_s():
    code, _ = run_capture(["classify", "--s", "1/3"])
    assert code == 2


# -- module-check and cyclicity ----------------------------------------------------------------


def test_module_check_passes_at_admissible_parameters():
    code, text = run_capture(
        ["module-check", "--kind", "Aabc", "--a", "1/3", "--b", "2",
         "--c", "5", "--rho", "0", "--window", "5"]
    )
    assert code == 0
    assert "passed: yes" in text


def test_module_check_reports_twisted_residuals():
    code, payload = run_json(
        ["module-check", "--kind", "Aabc", "--a", "1/3", "--b", "2",
         "--c", "5", "--rho", "1", "--window", "3"]
    )
    assert code == 1
    axiom = payload["details"]["axiom"]
    assert axiom["passed"] is False
    assert axiom["violation_count"] == 588
    by_inputs = {tuple(v["inputs"]): v["residual"] for v in axiom["violations"]}
    # residual scale is -m*rho*c = -5m here; the emitted list is capped at 50
    assert len(axiom["violations"]) == 50
    assert by_inputs[("L_-3", "Y_-3", "v_-3")] == "(15)*v_-9"
    assert by_inputs[("L_-3", "Y_3", "v_0")] == "(15)*v_0"


def test_module_check_cyclicity_flags_the_pinned_generator():
    code, payload = run_json(
        ["module-check", "--kind", "Aab", "--a", "0", "--b", "0",
         "--cyclicity", "--window", "6"]
    )
    assert code == 1
    assert payload["details"]["axiom"]["passed"] is True
    assert payload["details"]["simple"] is False
    cyc = payload["details"]["cyclicity"]
    assert cyc["violation_count"] == 1
    assert cyc["violations"][0]["inputs"] == ["v_0"]


def test_cyclicity_subcommand_full_orbit():
    code, payload = run_json(
        ["cyclicity", "--kind", "Aab", "--a", "1/2", "--b", "2", "--window", "6"]
    )
    assert code == 0
    assert payload["details"]["cyclicity"]["violation_count"] == 0


def test_cyclicity_subcommand_stuck_generator():
    code, payload = run_json(["cyclicity", "--kind", "Ba", "--a", "3", "--window", "6"])
    assert code == 1
    residual = payload["details"]["cyclicity"]["violations"][0]["residual"]
    assert residual.startswith("missing ")


def test_module_check_rejects_missing_parameters():
    code, _ = run_capture(["module-check", "--kind", "Aabc", "--a", "0", "--b", "0"])
    assert code == 2


# -- reproduce ----------------------------------------------------------------


def test_reproduce_single_group_passes():
    code, payload = run_json(["reproduce", "--only", "constant"])
    assert code == 0
    criteria = payload["details"]["criteria"]
    assert [c["number"] for c in criteria] == [9]
    assert criteria[0]["passed"] is True


def test_reproduce_delta_group_carries_the_known_discrepancy():
    code, payload = run_json(["reproduce", "--only", "delta"])
    assert code == 1
    by_number = {c["number"]: c["passed"] for c in payload["details"]["criteria"]}
    assert by_number == {1: True, 2: True, 3: False}


def test_reproduce_accepts_numeric_selectors():
    code, payload = run_json(["reproduce", "--only", "9", "--only", "10"])
    assert code == 0
    assert [c["number"] for c in payload["details"]["criteria"]] == [9, 10]


def test_reproduce_json_twice_is_byte_identical():
    argv = ["reproduce", "--only", "constant", "--output", "json", "--seed", "0"]
    assert run_capture(argv) == run_capture(argv)


def test_reproduce_rejects_unknown_selector():
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args(["reproduce", "--only", "bogus"])
    assert exc.value.code == 2


# -- process-level behaviour ----------------------------------------------------------------


def test_main_writes_to_stdout(capsys):
    code = main(["cocycle", "--name", "gamma0", "--rho", "0", "--window", "4"])
    captured = capsys.readouterr()
    assert code == 0
    assert "command: cocycle" in captured.out
    assert captured.err == ""


def test_main_writes_errors_to_stderr(capsys):
    code = main(["jacobi", "--algebra", "D", "--rho", "0"])
    captured = capsys.readouterr()
    assert code == 2
    assert captured.out == ""
    assert captured.err.startswith("error:")


def test_module_entry_point_runs_end_to_end():
    result = subprocess.run(
        [sys.executable, "-m", "virkit", "jacobi", "--algebra", "Vir",
         "--window", "4", "--output", "json"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["command"] == "jacobi"
    assert payload["passed"] is True

"""Command-line interface: payloads, exit codes, and determinism."""

from __future__ import annotations

import json
import math

import numpy as np
import pytest

from bentgroups import (
    character_table,
    from_coefficients,
    make_cyclic,
    save_class_function,
)
from bentgroups.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_chars_json(capsys):
    code, out, _ = run_cli(capsys, "chars", "Z3")
    assert code == 0
    payload = json.loads(out)
    assert payload["group"] == "Z3"
    assert len(payload["characters"]) == 3
    re, im = payload["characters"][1]["values"][1]
    assert abs(complex(re, im) - complex(-0.5, math.sqrt(3) / 2)) < 1e-12


def test_chars_csv(capsys):
    code, out, _ = run_cli(capsys, "chars", "Z3", "--format", "csv")
    assert code == 0
    assert "e^{2πi·1/3}" in out
    assert out.splitlines()[0].startswith("character,")


def test_chars_s3_is_integer_table(capsys):
    code, out, _ = run_cli(capsys, "chars", "S3")
    values = [
        [complex(re, im) for re, im in chi["values"]]
        for chi in json.loads(out)["characters"]
    ]
    assert np.allclose(values, [[1, 1, 1], [1, -1, 1], [2, 0, -1]], atol=1e-10)


def test_chars_z1(capsys):
    code, out, _ = run_cli(capsys, "chars", "Z1")
    payload = json.loads(out)
    assert code == 0
    assert payload["order"] == 1
    assert payload["characters"][0]["values"] == [[1.0, 0.0]]


def test_chars_unknown_group(capsys):
    code, _, err = run_cli(capsys, "chars", "E8")
    assert code == 2
    assert "error:" in err


def test_check_bent_file(capsys, tmp_path):
    path = tmp_path / "f.json"
    code, out, _ = run_cli(capsys, "construct", "zadoff-chu", "8", "3", "-o", str(path))
    assert code == 0
    saved = json.loads(path.read_text())
    assert saved["report"]["verdict"] == "BENT"
    code, out, _ = run_cli(capsys, "check", str(path))
    assert code == 0
    assert json.loads(out)["verdict"] == "BENT"


def test_check_constant_function_is_negative(capsys, tmp_path):
    table = character_table(make_cyclic(4))
    f = from_coefficients(table, np.array([1.0, 0, 0, 0]))
    path = tmp_path / "const.json"
    save_class_function(f, str(path))
    code, out, _ = run_cli(capsys, "check", str(path))
    assert code == 1
    assert json.loads(out)["verdict"] == "NOT_BENT"


def test_check_truncated_json(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"group": "Z4", "basis"')
    code, _, err = run_cli(capsys, "check", str(path))
    assert code == 2
    assert "error:" in err


def test_check_missing_file(capsys):
    code, _, err = run_cli(capsys, "check", "/nonexistent/f.json")
    assert code == 2
    assert "error:" in err


def test_construct_parity_error(capsys):
    code, _, err = run_cli(capsys, "construct", "chirp", "4")
    assert code == 2
    assert "odd" in err


def test_construct_invalid_root(capsys):
    code, _, err = run_cli(capsys, "construct", "zadoff-chu", "6", "3")
    assert code == 2
    assert "coprime" in err


def test_construct_writes_stdout_and_file(capsys, tmp_path):
    path = tmp_path / "f.json"
    code, out, _ = run_cli(capsys, "construct", "chirp", "9", "-o", str(path))
    assert code == 0
    assert json.loads(out) == json.loads(path.read_text())


def test_search_exit_zero_even_without_certificate(capsys):
    code, out, _ = run_cli(capsys, "search", "--group", "S3", "--budget", "100")
    assert code == 0
    payload = json.loads(out)
    assert payload["certified_bent"] is False
    assert payload["evaluations"] == 100


def test_search_certifies_z4(capsys):
    code, out, _ = run_cli(capsys, "search", "--group", "Z4", "--budget", "100")
    payload = json.loads(out)
    assert code == 0
    assert payload["certified_bent"] is True
    assert payload["report"]["verdict"] == "BENT"


def test_search_seed_changes_outcome(capsys):
    _, out1, _ = run_cli(capsys, "search", "--group", "S3", "--budget", "200", "--seed", "1")
    _, out2, _ = run_cli(capsys, "search", "--group", "S3", "--budget", "200", "--seed", "2")
    assert json.loads(out1)["best_objective"] != json.loads(out2)["best_objective"]


def test_verify_paper_default_passes(capsys):
    code, out, _ = run_cli(capsys, "verify-paper", "--budget", "200")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    statuses = {e["claim"]: e["status"] for e in payload["entries"]}
    assert statuses["s3-search-evidence"] == "EVIDENCE"
    assert statuses["q8-existence-evidence"] == "EVIDENCE"
    assert all(
        s in ("PASS", "EVIDENCE") for s in statuses.values()
    ), statuses


def test_verify_paper_absurd_tolerance_fails(capsys):
    code, out, _ = run_cli(capsys, "verify-paper", "--budget", "200", "--tol", "1e-30")
    assert code == 1
    payload = json.loads(out)
    assert payload["passed"] is False
    assert payload["summary"]["FAIL"] > 0


def test_verify_paper_budget_zero_skips_searches(capsys):
    code, out, _ = run_cli(capsys, "verify-paper", "--budget", "0")
    assert code == 0
    payload = json.loads(out)
    skipped = [e["claim"] for e in payload["entries"] if e["status"] == "SKIPPED"]
    assert skipped == ["s3-search-evidence", "q8-existence-evidence"]


def test_verify_paper_is_byte_deterministic(capsys, tmp_path):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    run_cli(capsys, "verify-paper", "--budget", "300", "-o", str(p1))
    run_cli(capsys, "verify-paper", "--budget", "300", "-o", str(p2))
    assert p1.read_bytes() == p2.read_bytes()


def test_csv_rejected_outside_chars(capsys, tmp_path):
    code, _, err = run_cli(capsys, "verify-paper", "--budget", "0", "--format", "csv")
    assert code == 2
    assert "chars" in err


def test_every_claim_appears_once(capsys):
    _, out, _ = run_cli(capsys, "verify-paper", "--budget", "0")
    claims = [e["claim"] for e in json.loads(out)["entries"]]
    assert len(claims) == len(set(claims)) == 12

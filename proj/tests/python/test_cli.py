"""End-to-end CLI tests. NKGAME_CLI points at the built binary."""

import csv
import io
import json
import os
import subprocess

import pytest

CLI = os.environ.get("NKGAME_CLI", "nkgame")


def run(*args, **kwargs):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kwargs)


def test_simulate_consentors_decide_immediately():
    r = run("simulate", "--pop", "3*consentor", "--k", "2", "--trials", "200", "--seed", "1")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["schema_version"] == 1
    assert doc["p_decision"] == 1.0
    assert doc["mean_decision_time"] == 0.0
    assert doc["ci99"][1] == 1.0


def test_simulate_matches_exact_value():
    r = run("simulate", "--pop", "1*rejector,2*random", "--k", "2", "--mode", "async",
            "--trials", "100000", "--seed", "7")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["ci99"][0] <= 5 / 12 <= doc["ci99"][1]


def test_simulate_is_reproducible_across_workers():
    args = ("simulate", "--pop", "1*rejector,2*random", "--k", "2", "--trials", "20000",
            "--seed", "42")
    a = run(*args, "--workers", "1")
    b = run(*args, "--workers", "4")
    c = run(*args)  # same run twice
    assert a.stdout == b.stdout == c.stdout
    assert a.returncode == 0


def test_invalid_population_exits_64_with_diagnostic():
    r = run("simulate", "--pop", "1*rejector,2*rndom", "--k", "2")
    assert r.returncode == 64
    assert "column 14" in r.stderr


def test_truncation_exit_code():
    # the threshold is unreachable and the neutralist never freezes
    r = run("simulate", "--pop", "1*rejector,1*neutralist", "--k", "2", "--trials", "50",
            "--max-steps", "100")
    assert r.returncode == 2
    doc = json.loads(r.stdout)
    assert doc["truncation_rate"] == 1.0


def test_exact_command_values():
    r = run("exact", "--pop", "1*rejector,2*random", "--k", "2")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["exact"]["p_decision"] == pytest.approx(5 / 12, abs=1e-10)
    r2 = run("exact", "--pop", "1*consentor,1*rejector,2*majority", "--k", "3")
    assert json.loads(r2.stdout)["exact"]["p_no_decision"] == pytest.approx(0.5, abs=1e-10)
    r3 = run("exact", "--pop", "2*consentor,1*random", "--k", "2")
    doc3 = json.loads(r3.stdout)
    assert doc3["exact"]["p_decision"] == 1.0
    assert doc3["exact"]["expected_steps"] == 0.0


def test_exact_rejects_sync_mode_and_small_caps():
    r = run("exact", "--pop", "2*neutralist", "--k", "2", "--mode", "sync")
    assert r.returncode == 65
    r2 = run("exact", "--pop", "8*neutralist", "--k", "8", "--cap", "4")
    assert r2.returncode == 3


def test_exact_chain_dump(tmp_path):
    dump = tmp_path / "chain.json"
    r = run("exact", "--pop", "1*rejector,2*random", "--k", "2", "--dump", str(dump))
    assert r.returncode == 0
    doc = json.loads(dump.read_text())
    assert doc["counts"]["random_followers"] == 2
    assert len(doc["states"]) == 3  # z in {0,1} plus the decision super-state
    probs = {(t["from"], t["to"]): t["prob"] for t in doc["transitions"]}
    assert probs[(1, 2)] == "1/6"  # z=1 -> decision


def test_bounds_majority_population():
    r = run("bounds", "--pop", "1*rejector,1*consentor,2*majority", "--k", "3")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    b = doc["bounds"]
    assert b["no_decision_upper"]["value"] == pytest.approx(14 / 12, abs=1e-10)
    assert b["no_decision_upper"]["vacuous"] is True
    assert "na" in b["decision_upper"]
    assert b["expected_initial_disagreement"] == 7.0


def test_bounds_random_follower_population():
    r = run("bounds", "--pop", "1*rejector,2*random", "--k", "2")
    doc = json.loads(r.stdout)
    b = doc["bounds"]
    assert b["decision_upper"]["value"] == pytest.approx(0.5, abs=1e-12)
    assert b["decision_upper"]["vacuous"] is False
    r2 = run("bounds", "--pop", "2*rejector,2*random", "--k", "3")
    assert "na" in json.loads(r2.stdout)["bounds"]["decision_upper"]


def test_bounds_sync_population():
    r = run("bounds", "--pop", "10*neutralist", "--k", "5", "--mode", "sync")
    doc = json.loads(r.stdout)
    sync = doc["bounds"]["sync"]
    assert sync["p"] == pytest.approx(319 / 512, abs=1e-10)
    assert sync["expected_rounds"] == pytest.approx(512 / 319, abs=1e-10)
    assert sync["p_max"] == pytest.approx(0.5, abs=1e-10)


def test_bounds_not_applicable_is_exit_zero():
    r = run("bounds", "--pop", "2*minority,1*rejector", "--k", "2")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert "na" in doc["bounds"]["decision_upper"]
    assert "na" in doc["bounds"]["no_decision_upper"]
    assert "na" in doc["bounds"]["sync"]


def test_csv_and_json_values_agree():
    args = ("simulate", "--pop", "1*rejector,2*random", "--k", "2", "--trials", "5000",
            "--seed", "3")
    j = json.loads(run(*args, "--format", "json").stdout)
    rows = list(csv.DictReader(io.StringIO(run(*args, "--format", "csv").stdout)))
    assert len(rows) == 1
    row = rows[0]
    assert float(row["p_decision"]) == j["p_decision"]
    assert float(row["ci99_lo"]) == j["ci99"][0]
    assert float(row["ci99_hi"]) == j["ci99"][1]
    assert float(row["truncation_rate"]) == j["truncation_rate"]
    assert row["pop"] == j["config"]["pop"]


def test_verify_battery_passes(tmp_path):
    out = tmp_path / "verify.csv"
    r = run("verify", "--trials", "5000", "--out", str(out))
    assert r.returncode == 0, r.stderr
    rows = list(csv.DictReader(out.read_text().splitlines()))
    assert all(row["pass"] == "true" for row in rows)
    checks = {row["check"] for row in rows}
    assert {"ones_drift_identity", "decision_bound", "no_decision_bound",
            "majority_zero_census", "mc_ci_covers_exact"} <= checks


def test_verify_grid(tmp_path):
    grid = tmp_path / "grid.json"
    grid.write_text(json.dumps([
        {"pop": "1*rejector,2*random", "k": 2, "trials": 20000},
        {"pop": "1*consentor,1*rejector,2*majority", "k": 3, "trials": 20000},
        {"pop": "2*consentor,2*random", "k": 2},
    ]))
    out = tmp_path / "report.csv"
    r = run("verify", "--grid", str(grid), "--out", str(out), "--seed", "5")
    assert r.returncode == 0, r.stderr
    rows = list(csv.DictReader(out.read_text().splitlines()))
    assert len(rows) == 3
    assert rows[0]["check"] == "decision_bound"
    assert rows[1]["check"] == "no_decision_bound"
    assert float(rows[0]["exact"]) == pytest.approx(5 / 12, abs=1e-10)


def test_records_output(tmp_path):
    rec = tmp_path / "trials.csv"
    r = run("simulate", "--pop", "2*rejector", "--k", "1", "--trials", "10",
            "--records", str(rec))
    assert r.returncode == 0
    rows = list(csv.DictReader(rec.read_text().splitlines()))
    assert len(rows) == 10
    assert all(row["frozen"] == "1" and row["decided"] == "0" for row in rows)

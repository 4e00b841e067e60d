"""Claim suite behavior, enumeration, cross-validation, determinism."""

from __future__ import annotations

import json

import pytest

from monoidlab import (
    VerifyConfig,
    cross_check_checkers,
    enumerate_small_rees,
    run_claims,
)
from monoidlab.identities import HOLDS, CheckOutcome
import monoidlab.verify as verify_mod


@pytest.fixture(scope="module")
def default_report():
    return run_claims(VerifyConfig())


def test_registry_order_and_ids(default_report):
    assert [c.id for c in default_report.claims] == [f"C{i}" for i in range(1, 15)]


def test_all_claims_pass(default_report):
    bad = [(c.id, c.status, c.witness) for c in default_report.claims if c.status != "PASS"]
    assert not bad, bad


def test_summary_counts(default_report):
    s = default_report.summary
    assert s == {"pass": 14, "fail": 0, "skipped": 0, "budget": 0}
    assert default_report.all_passed


def test_report_json_schema(default_report):
    data = json.loads(default_report.to_json())
    assert set(data) == {"config", "claims", "summary"}
    assert set(data["config"]) == {"max_n", "seed", "table_budget", "match_budget"}
    for claim in data["claims"]:
        assert set(claim) == {"id", "title", "status", "witness", "millis"}
    assert set(data["summary"]) == {"pass", "fail", "skipped", "budget"}


def test_max_n_one_skips_distinctness():
    report = run_claims(VerifyConfig(max_n=1))
    by_id = {c.id: c for c in report.claims}
    assert by_id["C9"].status == "SKIPPED"
    assert all(
        c.status in ("PASS", "SKIPPED") for c in report.claims
    ), report.to_text()


def test_run_claims_rejects_bad_config():
    with pytest.raises(ValueError):
        run_claims(VerifyConfig(max_n=0))


def test_determinism_modulo_millis():
    first = run_claims(VerifyConfig(max_n=1, seed=7)).to_dict()
    second = run_claims(VerifyConfig(max_n=1, seed=7)).to_dict()
    for report in (first, second):
        for claim in report["claims"]:
            claim["millis"] = 0
    assert first == second


def test_enumerate_defaults():
    assert [(str(w), o) for w, o in enumerate_small_rees()] == [
        ("aabb", 10),
        ("abab", 9),
        ("abba", 10),
    ]


def test_enumerate_tighter_order():
    assert [(str(w), o) for w, o in enumerate_small_rees(max_order=9)] == [("abab", 9)]


def test_enumerate_short_words():
    assert enumerate_small_rees(max_len=3) == []


def test_cross_check_small_run():
    result = cross_check_checkers(seed=42, count=30)
    assert result.ok
    assert result.checked == 30 * 7
    assert result.discrepancy is None


def test_cross_check_vacuous():
    result = cross_check_checkers(seed=1, count=0)
    assert result.ok and result.checked == 0


def test_cross_check_detects_broken_checker(monkeypatch):
    # simulate a matcher bug: the word-level checker blindly reports HOLDS
    monkeypatch.setattr(
        verify_mod, "check_rees", lambda ws, ident, budget: CheckOutcome(HOLDS, None, 0)
    )
    result = verify_mod.cross_check_checkers(seed=0, count=40)
    assert not result.ok
    assert result.discrepancy is not None
    assert result.discrepancy["rees"] != result.discrepancy["table"]

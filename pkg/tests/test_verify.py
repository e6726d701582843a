import json

import pytest

from planarcount.verify import (
    VerificationReport,
    audit_bijections,
    audit_involution,
    verify_gessel_identity,
    verify_matching_identity,
    verify_subgraph_identity,
    verify_walk_scaling,
)
from planarcount.walks import BudgetExceeded, Walk


def test_matching_identity_examples():
    for n, r, d, value in [(2, 2, 1, 1), (3, 1, 2, 5), (2, 2, 2, 3)]:
        report = verify_matching_identity(n, r, d)
        assert report.passed
        assert set(report.methods.values()) == {value}


def test_matching_identity_with_threads():
    report = verify_matching_identity(2, 2, 2, threads=4)
    assert report.passed and set(report.methods.values()) == {3}


def test_subgraph_identity_examples():
    report = verify_subgraph_identity(1, 2, 2)
    assert report.passed and set(report.methods.values()) == {1}
    # the n=2, r=2 subgraph sizes are 4, 3, 2
    for d, value in [(1, 0), (2, 1), (3, 2), (4, 3)]:
        report = verify_subgraph_identity(2, 2, d)
        assert report.passed
        assert set(report.methods.values()) == {value}
    report = verify_subgraph_identity(2, 1, 1)
    assert report.passed and set(report.methods.values()) == {1}


def test_walk_scaling_examples():
    for d in (1, 2, 3):
        report = verify_walk_scaling(1, d)
        assert report.passed and set(report.methods.values()) == {2}
    report = verify_walk_scaling(2, 2)
    assert report.passed and set(report.methods.values()) == {12}
    report = verify_walk_scaling(3, 2)
    assert report.passed and set(report.methods.values()) == {100}


def test_gessel_identity_small():
    report = verify_gessel_identity(1, 8)
    assert report.passed
    report = verify_gessel_identity(2, 10)
    assert report.passed
    coeffs = report.methods["determinant_coefficients"]
    assert str(coeffs[2]) == "1/2"
    with pytest.raises(ValueError):
        verify_gessel_identity(2, 7)
    with pytest.raises(ValueError):
        verify_gessel_identity(0, 4)


def test_budget_refusals():
    with pytest.raises(BudgetExceeded):
        verify_matching_identity(2, 2, 2, budget=3)
    with pytest.raises(BudgetExceeded):
        verify_walk_scaling(3, 3, budget=3)
    with pytest.raises(BudgetExceeded):
        verify_gessel_identity(3, 10, budget=3)
    with pytest.raises(BudgetExceeded):
        audit_involution(2, 2, 2, "second", budget=3)
    with pytest.raises(BudgetExceeded):
        audit_bijections(2, 2, 2, budget=3)


def test_involution_audit_examples():
    report = audit_involution(2, 1, 2, "second")
    assert report.passed
    assert report.methods["signed_total"] == 0
    assert report.methods["domain_size"] == 8
    report = audit_involution(1, 2, 2, "first")
    assert report.passed
    report = audit_involution(2, 1, 2, "first")
    assert report.passed


def test_involution_audit_catches_broken_map():
    # identity map: fails sign reversal (and fixed points)
    report = audit_involution(2, 1, 2, "second", involution=lambda w, r: w)
    assert not report.passed
    assert report.witness is not None
    assert report.methods["fixed_points"] > 0

    # constant map: fails self-inverse / closure
    def swap_to_first(w, r):
        return Walk(d=w.d, pos=w.pos, neg=w.pos)

    report = audit_involution(2, 1, 2, "second", involution=swap_to_first)
    assert not report.passed
    assert report.witness is not None


def test_bijection_audit_examples():
    report = audit_bijections(2, 2, 2)
    assert report.passed
    assert report.methods["configurations"] == 3
    assert report.methods["tableau_pairs"] == 3
    assert report.methods["region_walks"] == 3
    assert report.methods["profile_walks"] == 3

    report = audit_bijections(3, 1, 3)
    assert report.passed
    assert report.methods["configurations"] == 6

    report = audit_bijections(2, 2, 1)
    assert report.passed
    assert report.methods["configurations"] == 1

    report = audit_bijections(2, 2, 0)
    assert report.passed
    assert report.methods["configurations"] == 0


def test_report_json_schema_and_reproducibility():
    first = verify_matching_identity(2, 2, 2)
    second = verify_matching_identity(2, 2, 2)
    assert first.content() == second.content()
    payload = json.loads(first.to_json())
    assert list(payload) == ["identity", "params", "methods", "pass", "elapsed_ms"]
    assert payload["identity"] == "theorem1"
    assert payload["params"] == {"d": 2, "n": 2, "r": 2}
    assert payload["methods"] == {
        "graph_enumeration": "3",
        "tableau_pairs": "3",
        "walks_enumerated": "3",
        "walks_dp": "3",
    }
    assert payload["pass"] is True
    assert isinstance(payload["elapsed_ms"], float)


def test_failed_report_includes_witness():
    report = VerificationReport(
        identity="demo",
        params={"n": 1},
        methods={"a": 1, "b": 2},
        passed=False,
        witness="method disagreement: a=1, b=2",
        elapsed_ms=0.1,
    )
    payload = json.loads(report.to_json())
    assert payload["witness"].startswith("method disagreement")

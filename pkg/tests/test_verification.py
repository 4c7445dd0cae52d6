"""Tests for the invariant battery and its report schema."""

from fractions import Fraction

import pytest

from verification import (
    ALL_CHECKS,
    CheckParams,
    CheckResult,
    CheckStatus,
    Report,
    get_check,
    list_checks,
    run_check,
)

FAST_PARAMS = {
    "formats": CheckParams(n=6),
    "signed_catalan": CheckParams(),
    "factorial_bounds": CheckParams(n=20),
    "signatures": CheckParams(n=14),
    "hypercubes": CheckParams(n=5),
    "lattice_paths": CheckParams(n=6),
    "dynamics": CheckParams(n=60),
    "shapes": CheckParams(n=40),
    "operator_gap": CheckParams(n=60),
    "eigen": CheckParams(),
    "commuting_diagram": CheckParams(n=25),
    "angles": CheckParams(),
    "growth": CheckParams(),
    "norm_ratio": CheckParams(n=120),
}


def test_registry_lists_every_check():
    assert set(FAST_PARAMS) == set(ALL_CHECKS)
    listed = list_checks()
    assert [c["id"] for c in listed] == list(ALL_CHECKS)
    assert all(c["description"] for c in listed)


def test_unknown_check():
    with pytest.raises(KeyError):
        get_check("nope")


@pytest.mark.parametrize("name", sorted(FAST_PARAMS))
def test_check_passes(name):
    result = run_check(name, FAST_PARAMS[name])
    assert result.name == name
    assert result.passed, result.detail


def test_shapes_outside_domain_is_reported_not_raised():
    result = run_check("shapes", CheckParams(x=Fraction(1, 2), n=10))
    assert result.status is CheckStatus.FAIL
    assert result.detail.startswith("not run:")


def test_crashing_check_is_reported_not_raised(monkeypatch):
    def broken(params):
        raise TypeError("'int' object is not iterable")

    monkeypatch.setitem(ALL_CHECKS, "hypercubes", broken)
    result = run_check("hypercubes", CheckParams())
    assert result.status is CheckStatus.FAIL
    assert result.detail.startswith("error: TypeError")


def test_hypercubes_default_run_includes_edge_facts():
    result = run_check("hypercubes", CheckParams(n=4))
    assert result.passed, result.detail
    assert "H_1..H_4 facts" in result.detail


def test_enumeration_cap_limits_oracles():
    result = run_check("hypercubes", CheckParams(n=9, cap=4))
    assert result.passed
    assert "totals n <= 4" in result.detail


def test_from_failures_truncates():
    result = CheckResult.from_failures("demo", [f"f{i}" for i in range(8)], "unused")
    assert result.status is CheckStatus.FAIL
    assert result.detail == "f0; f1; f2; f3; f4 (+3 more)"
    assert CheckResult.from_failures("demo", [], "all good").detail == "all good"


def test_report_schema():
    report = Report(command="verify", params={"x": "-1/2"})
    report.checks.append(CheckResult("a", CheckStatus.PASS, "fine"))
    report.checks.append(CheckResult("b", CheckStatus.FAIL, "broken"))
    assert not report.ok
    assert [c.name for c in report.failed()] == ["b"]
    assert report.to_dict() == {
        "command": "verify",
        "params": {"x": "-1/2"},
        "checks": [
            {"name": "a", "status": "pass", "detail": "fine"},
            {"name": "b", "status": "fail", "detail": "broken"},
        ],
    }


def test_lattice_paths_honour_cap():
    result = run_check("lattice_paths", CheckParams(cap=5))
    assert result.passed, result.detail
    assert result.detail == "n <= 5"


@pytest.mark.slow
@pytest.mark.parametrize(
    "name, detail",
    [
        ("formats", "enumeration oracle n <= 10"),
        ("hypercubes", "totals n <= 10"),
        ("lattice_paths", "n <= 12"),
        ("operator_gap", "measure for n <= 1000"),
    ],
)
def test_default_sizes_reach_acceptance_ranges(name, detail):
    result = run_check(name, CheckParams())
    assert result.passed, result.detail
    assert detail in result.detail

import pytest

from parkpose.verify import (
    CHECKS, TIER_LIMITS, check_criterion_equivalence, mutated_reachability, run_verification,
)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_all_checks_pass(n):
    report = run_verification(n)
    assert report.ok, "\n".join(report.lines())
    assert {c.name for c in report.checks} == set(CHECKS)
    assert all(c.status == "pass" for c in report.checks)


def test_sixteen_named_checks():
    assert len(CHECKS) == 16


def test_mutated_rc_is_caught():
    result = check_criterion_equivalence(3, rc=mutated_reachability)
    assert result.status == "fail"
    assert "123" in result.counterexample and "132" in result.counterexample


def test_mutated_rc_fails_the_report():
    report = run_verification(3, rc=mutated_reachability)
    assert not report.ok
    failed = [c.name for c in report.checks if c.status == "fail"]
    assert failed == ["criterion_equivalence"]


def test_fiber_sum_detail():
    report = run_verification(3)
    fs = next(c for c in report.checks if c.name == "fiber_sum")
    assert "96" in fs.detail


def test_tier_bounds():
    with pytest.raises(ValueError):
        run_verification(6, "fast")
    with pytest.raises(ValueError):
        run_verification(7, "slow")
    with pytest.raises(ValueError):
        run_verification(3, "medium")
    assert TIER_LIMITS == {"fast": 5, "slow": 6}


def test_report_lines():
    lines = run_verification(2).lines()
    assert lines[0] == "verify n=2 tier=fast"
    assert lines[-1].startswith("16 passed, 0 failed, 0 skipped")


@pytest.mark.slow
def test_fast_tier_n5():
    assert run_verification(5).ok


@pytest.mark.slow
def test_slow_tier_n6():
    report = run_verification(6, "slow")
    assert report.ok, "\n".join(report.lines())
    skipped = {c.name for c in report.checks if c.status == "skip"}
    assert "sorting_coincidence" not in skipped

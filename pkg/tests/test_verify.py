import pytest
from sympy import divisor_sigma

from wittkit.errors import ConfigurationError
from wittkit.grouplambda import FgAbelianGroup
from wittkit.schemas import SuiteResult, VerifyReport
from wittkit.verify import (
    SUITES,
    ext_from_presentation,
    format_report,
    run_verify,
    subgroups_of_order,
    trial_count,
)


@pytest.mark.parametrize("suite", [s for s in SUITES if s != "all"])
def test_each_suite_passes(suite):
    report = run_verify(suite, seed=7, trials=2)
    assert report.ok, report.suites[0].first_failure
    assert [r.name for r in report.suites] == [suite]
    assert report.suites[0].checks > 0


def test_reports_are_reproducible():
    first = run_verify("all", seed=11, trials=1, workers=3)
    second = run_verify("all", seed=11, trials=1, workers=1)
    assert first == second
    assert format_report(first) == format_report(second)
    assert [r.name for r in first.suites] == ["cohom", "dual", "lambda", "witt", "wrat"]


def test_unknown_suite():
    with pytest.raises(ConfigurationError):
        run_verify("everything", seed=7)


def test_format_report_shows_first_failure():
    report = VerifyReport(
        seed=5,
        suites=[SuiteResult(name="witt", checks=3, passed=2, failed=1, first_failure="ghost: mismatch")],
        ok=False,
    )
    assert format_report(report).splitlines() == [
        "wittkit verify seed=5",
        "witt: 2/3 passed",
        "  first failure: ghost: mismatch",
        "result: FAILED",
    ]


@pytest.mark.parametrize(
    "check, expected",
    [("ring_axioms", 200), ("teichmuller", 100), ("closure", 100), ("commute", 100), ("congruence", 200),
     ("intertwine", 50)],
)
def test_default_trial_counts(check, expected):
    assert trial_count(check) == expected
    assert trial_count(check, 3) == 3


@pytest.mark.parametrize("n", [1, 4, 7, 12, 30])
def test_brute_force_subgroup_count(n):
    assert subgroups_of_order(n) == int(divisor_sigma(n))


def test_ext_from_a_presentation():
    assert ext_from_presentation([[2, 0], [0, 3]], 2) == FgAbelianGroup(0, (6,))
    ext = ext_from_presentation([[2, 4], [6, 8]], 2)
    assert (ext.rank, ext.torsion) == (0, (2, 4))
    ext = ext_from_presentation([[0, 2]], 2)
    assert (ext.rank, ext.torsion) == (0, (2,))
    assert ext_from_presentation([], 3).order == 1

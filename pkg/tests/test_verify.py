import pytest

from corespan.errors import PreconditionViolated
from corespan.multigraph import lambda_rsk
from corespan.verify import (
    VerifyReport,
    accumulation_windows,
    verify_bfn,
    verify_equidistribution,
    verify_example_extended,
    verify_main_theorem,
    verify_successor_lemmas,
)


def test_report_keeps_first_counterexample():
    report = VerifyReport("demo", {"n": 1})
    report.check(True, step=1)
    report.check(False, step=2)
    report.check(False, step=3)
    assert (report.attempted, report.passed, report.ok) == (3, 1, False)
    assert report.counterexample == {"step": 2}
    other = VerifyReport("demo")
    other.check(True)
    other.absorb(report)
    assert other.counterexample == {"step": 2} and other.attempted == 4


def test_report_json_timing_switch():
    report = verify_example_extended()
    assert "wall_time" in report.to_json()
    assert "wall_time" not in report.to_json(timing=False)


def test_small_campaigns():
    assert verify_equidistribution(7, (2,)).ok
    assert verify_equidistribution(0, (1,)).ok
    assert verify_main_theorem((1,), 2, 15, 15).ok
    assert verify_main_theorem((), 1, 15, 15).ok
    assert verify_bfn(2, 1, 3, 14).ok
    single = verify_successor_lemmas(1, ((1, 1),), (1,))
    assert single.ok and single.attempted > 0


def test_bfn_precondition():
    with pytest.raises(PreconditionViolated):
        verify_bfn(2, 1, 2)


def test_accumulation_windows_stay_in_budget():
    windows = accumulation_windows(30)
    assert windows
    for r, s, c, k in windows:
        assert k % (r * s * c) == 0
        assert lambda_rsk(r, s, k).size <= 30

import pytest

from ptopo.preservation import CHECKS, run_check


@pytest.mark.parametrize("check_id", sorted(CHECKS))
def test_check_holds_on_a_small_sample(check_id):
    rep = run_check(check_id, 60, seed=3)
    assert rep.violated == 0
    assert rep.held == 60
    assert rep.to_json()["check"] == check_id


def test_runs_are_reproducible():
    a = run_check("thm-4.6", 40, seed=9).to_json()
    b = run_check("thm-4.6", 40, seed=9).to_json()
    assert a == b


def test_draw_cap_limits_work():
    rep = run_check("cor-4.8", 10_000, seed=0, max_draws=30)
    assert rep.held + rep.violated + rep.vacuous == 30

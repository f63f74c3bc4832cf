import pytest

from ringlab import laws
from ringlab.builders import augmentation_ideal
from ringlab.laws import FAIL, PASS, SKIP, check_laws, is_nilpotent_set, nil_ideals, zn_law

from conftest import ring


def statuses(report):
    return {x.law: x.status for x in report.results}


@pytest.mark.parametrize("expr", ["Z8", "M2(Z2)", "T2(Z3)", "Z1"])
def test_suite_passes(expr):
    rep = check_laws(ring(expr))
    assert rep.ok, rep.failures
    assert set(statuses(rep)) == set(laws.LAW_STATEMENTS)


def test_group_ring_predicts_not_csnc():
    rep = check_laws(ring("GR(Z2,C3)"))
    assert rep.ok and statuses(rep)["L9"] == PASS
    from ringlab.classes import class_profile
    assert not class_profile(ring("GR(Z2,C3)"))["CSNC"]


def test_ks_predicts_csnc():
    rep = check_laws(ring("Ks(Z4,2)"), laws=["L8"])
    assert statuses(rep)["L8"] == PASS
    from ringlab.classes import class_profile
    assert class_profile(ring("Ks(Z4,2)"))["CSNC"]


def test_zero_ring_skips_group_ring_law():
    assert statuses(check_laws(ring("Z1"), laws=["L9"]))["L9"] == SKIP


def test_zn_law():
    assert zn_law(64) == []


def test_nilpotent_sets():
    r = ring("GR(Z2,C2xC2)")
    assert is_nilpotent_set(r, augmentation_ideal(r))
    assert is_nilpotent_set(r, {r.zero})
    assert not is_nilpotent_set(ring("Z4"), {1})


@pytest.mark.parametrize("expr", ["T2(Z4)", "Z16", "M2(Z4)", "GR(Z4,C2)"])
def test_sampled_ideals_are_nil(expr):
    r = ring(expr)
    ideals = nil_ideals(r)
    assert 1 <= len(ideals) <= laws.MAX_IDEALS
    assert r.derived.jacobson in ideals
    for I in ideals:
        assert I <= r.derived.nilpotents


def test_failure_is_reported(monkeypatch):
    # a decider that lies must be caught and pinpointed
    from ringlab import classes

    real = classes.is_csnc_criterion
    monkeypatch.setattr(laws, "csnc_deciders",
                        lambda r: {**classes.csnc_deciders(r), "a_minus_a_squared": not real(r)})
    rep = check_laws(ring("Z8"), laws=["L1"])
    assert statuses(rep)["L1"] == FAIL and "Z8" in rep.failures[0].detail


def test_skip_over_cap():
    rep = check_laws(ring("Z9"), laws=["L7"], derived_cap=10)
    assert statuses(rep)["L7"] == PASS  # T_1 fits, T_2 and T_3 skipped
    assert "skipped" in rep.results[0].detail

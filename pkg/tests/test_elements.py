import pytest
from hypothesis import given, strategies as st

from ringlab.elements import (
    classify_element,
    clean_witnesses,
    element_counts,
    lift_idempotent,
    nil_clean_witnesses,
    strongly_clean_from_nil_clean,
)
from ringlab.errors import NotAlmostIdempotent

import oracle as O
from conftest import ring

A = 14  # [[1,1],[1,0]] in M_2(Z_2)


def pairs(ws):
    return [(d.e, d.partner, d.commutes) for d in ws]


def test_clean_witnesses_z3():
    assert pairs(clean_witnesses(ring("Z3"), 2)) == [(0, 2, True), (1, 1, True)]


@pytest.mark.parametrize("expr", ["Z1", "Z5", "M2(Z2)", "T2(Z3)", "GR(Z2,gtable(S3))"])
def test_zero_is_one_plus_minus_one(expr):
    r = ring(expr)
    assert (r.one, r.neg(r.one)) in [(d.e, d.partner) for d in clean_witnesses(r, r.zero)]


def test_matrix_example_is_clean_not_strongly_nil_clean():
    r = ring("M2(Z2)")
    assert r.label(A) == "[[1,1],[1,0]]"
    assert clean_witnesses(r, A)
    nw = nil_clean_witnesses(r, A)
    assert nw and not any(d.commutes for d in nw)
    # A - A^2 = I
    assert r.sub(A, r.mul(A, A)) == r.one


def test_nil_clean_witnesses():
    assert pairs(nil_clean_witnesses(ring("Z4"), 2)) == [(0, 2, True)]
    assert nil_clean_witnesses(ring("Z3"), 2) == []


def test_classify_z3_two():
    p = classify_element(ring("Z3"), 2)
    assert p.clean and p.strongly_clean
    assert not p.uniquely_clean and not p.nil_clean


@pytest.mark.parametrize("expr", ["Z12", "T2(Z3)", "M2(Z2)", "T3(Z2)", "Ks(Z2,0)"])
def test_idempotents_and_nilpotents_uniquely_strongly_clean(expr):
    r = ring(expr)
    ds = r.derived
    for e in ds.idempotents:
        p = classify_element(r, e)
        assert p.uniquely_strongly_clean
        assert p.uniquely_clean == (e in ds.center)
    for q in ds.nilpotents:
        assert classify_element(r, q).uniquely_strongly_clean


@pytest.mark.parametrize("expr", sorted(O.ORACLE_RINGS))
def test_flags_match_oracle(expr):
    o = O.ORACLE_RINGS[expr]()
    r = ring(expr)
    for x in o.elements:
        assert classify_element(r, o.to_id(x)).flags() == O.element_flags(o, x)


@pytest.mark.parametrize("expr", ["T2(Z4)", "GR(Z2,C2xC2)", "FT(Z4,Z2,S)", "quot(M2(Z4),130)"])
def test_counts_agree_with_witness_lists(expr):
    r = ring(expr)
    c = element_counts(r)
    for a in range(r.order):
        p = classify_element(r, a)
        assert c.clean[a] == len(p.clean_witnesses)
        assert c.strongly_clean[a] == len(p.strongly_clean_witnesses)
        assert c.nil_clean[a] == len(p.nil_clean_witnesses)
        assert c.strongly_nil_clean[a] == p.commuting_nil_clean_count


@given(st.sampled_from(["Z8", "T2(Z4)", "M2(Z2)", "GR(Z4,C2)", "Ks(Z2,0)", "T3(Z2)"]),
       st.data())
def test_profile_invariants(expr, data):
    r = ring(expr)
    a = data.draw(st.integers(0, r.order - 1))
    p = classify_element(r, a)
    assert not p.strongly_nil_clean or p.strongly_clean
    for u, base in (("uniquely_clean", "clean"), ("uniquely_strongly_clean", "strongly_clean"),
                    ("uniquely_nil_clean", "nil_clean")):
        assert not getattr(p, u) or getattr(p, base)
    ds = r.derived
    for d in p.clean_witnesses + p.nil_clean_witnesses:
        assert d.e in ds.idempotents and r.add(d.e, d.partner) == a
    for d in p.strongly_nil_clean_witnesses:
        w = strongly_clean_from_nil_clean(r, d)
        assert w.e in ds.idempotents and w.partner in ds.units and w.commutes
        assert r.add(w.e, w.partner) == a


def test_lift_examples():
    assert lift_idempotent(ring("Z9"), 3) == 0
    assert lift_idempotent(ring("Z4"), 2) == 0
    for expr in ("Z12", "T2(Z3)", "M2(Z2)"):
        r = ring(expr)
        for e in r.derived.idempotents:
            assert lift_idempotent(r, e) == e


def test_lift_precondition():
    with pytest.raises(NotAlmostIdempotent):
        lift_idempotent(ring("Z3"), 2)


@given(st.sampled_from(["Z16", "T2(Z4)", "Ks(Z4,2)", "GR(Z4,C2)", "T3(Z2)", "Z2xT2(Z2)"]),
       st.data())
def test_lift_postconditions(expr, data):
    r = ring(expr)
    a = data.draw(st.integers(0, r.order - 1))
    if r.sub(a, r.mul(a, a)) not in r.derived.nilpotents:
        return
    e = lift_idempotent(r, a)
    assert r.mul(e, e) == e
    assert r.sub(a, e) in r.derived.nilpotents
    assert r.mul(e, a) == r.mul(a, e)

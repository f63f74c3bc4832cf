import numpy as np
import pytest
from hypothesis import given, strategies as st

from ringlab.core import (
    check_axioms,
    derived_sets,
    is_nilpotent,
    jacobson_radical,
    read_ring_table,
    validate_tables,
    write_ring_table,
)
from ringlab.errors import AxiomViolation, NoIdentity, OutOfRangeEntry, TableFormatError

import oracle as O
from conftest import ring


def zn_tables(n):
    i = np.arange(n)
    return (i[:, None] + i[None, :]) % n, (i[:, None] * i[None, :]) % n


def gf4_tables():
    # GF(4) = Z_2[x]/(x^2+x+1); element c1*x + c0 has id 2*c1 + c0
    def pmul(a, b):
        c = [0, 0, 0]
        for i in range(2):
            for j in range(2):
                c[i + j] ^= ((a >> i) & 1) & ((b >> j) & 1)
        if c[2]:
            c[1] ^= 1
            c[0] ^= 1
        return c[0] + 2 * c[1]
    add = [[a ^ b for b in range(4)] for a in range(4)]
    mul = [[pmul(a, b) for b in range(4)] for a in range(4)]
    return add, mul


def test_validate_z2():
    r = validate_tables(*zn_tables(2))
    assert r.order == 2 and (r.zero, r.one) == (0, 1)


def test_validate_flipped_entry():
    A, M = zn_tables(2)
    M = M.copy()
    M[0, 0] = 1  # the only entry whose flip keeps 1 a two-sided identity
    with pytest.raises(AxiomViolation):
        validate_tables(A, M)


def test_validate_gf4():
    r = validate_tables(*gf4_tables())
    assert len(r.derived.units) == 3
    assert r.derived.nilpotents == {0}


def test_validate_discovers_zero_and_one():
    # relabel Z_3 so that zero is id 2 and one is id 0
    perm = np.array([2, 0, 1])  # old id -> new id
    A, M = zn_tables(3)
    inv = np.argsort(perm)
    A2 = perm[A[inv][:, inv]]
    M2 = perm[M[inv][:, inv]]
    r = validate_tables(A2, M2)
    assert (r.zero, r.one) == (2, 0)


def test_validate_errors():
    A, M = zn_tables(3)
    with pytest.raises(OutOfRangeEntry):
        validate_tables(A, M + 1)
    with pytest.raises(NoIdentity):
        validate_tables(A, np.zeros_like(M))


def test_pow_examples():
    assert ring("Z8").pow(2, 3) == 0
    assert ring("Z9").pow(3, 2) == 0
    r = ring("M2(Z2)")
    assert all(r.pow(a, 0) == r.one for a in range(r.order))


def test_derived_zn():
    ds = derived_sets(ring("Z6"))
    assert ds.units == {1, 5}
    assert ds.idempotents == {0, 1, 3, 4}
    assert ds.nilpotents == {0}
    ds = ring("Z8").derived
    assert ds.nilpotents == {0, 2, 4, 6} and ds.nil_index[2] == 3


def test_derived_m2z2():
    r = ring("M2(Z2)")
    o = O.matrices(2, 2)
    assert len(r.derived.units) == 6 == len(O.units(o))
    assert r.derived.center == {0, 9} == o.ids(O.center(o))


def test_jacobson_examples():
    assert jacobson_radical(ring("Z8")) == {0, 2, 4, 6}
    assert jacobson_radical(ring("M2(Z2)")) == {0}
    o = O.triangular(2, 2)
    J = jacobson_radical(ring("T2(Z2)"))
    assert J == o.ids(O.jacobson(o)) == {0, 2}
    assert ring("T2(Z2)").label(2) == "[[0,1],[0,0]]"


@pytest.mark.parametrize("expr", sorted(O.ORACLE_RINGS))
def test_derived_sets_match_oracle(expr):
    o = O.ORACLE_RINGS[expr]()
    ds = ring(expr).derived
    assert ds.units == o.ids(O.units(o))
    assert ds.idempotents == o.ids(O.idempotents(o))
    assert ds.nilpotents == o.ids(O.nilpotents(o))
    assert ds.center == o.ids(O.center(o))
    assert ds.jacobson == o.ids(O.jacobson(o))
    for q in O.nilpotents(o):
        assert ds.nil_index[o.to_id(q)] == O.nil_index(o, q)


@pytest.mark.parametrize("expr", ["Z1", "Z12", "M2(Z3)", "T3(Z2)", "GR(Z2,gtable(S3))",
                                  "Ks(Z4,2)", "FT(Z4,Z2,S)", "quot(M2(Z4),130)"])
def test_derived_invariants(expr):
    r = ring(expr)
    ds = r.derived
    assert r.zero in ds.idempotents and r.one in ds.idempotents & ds.units
    assert ds.nil_index[r.zero] == 1
    if r.order > 1:
        assert not ds.units & ds.nilpotents
    assert ds.jacobson & ds.idempotents == {r.zero}
    assert ds.jacobson <= ds.nilpotents
    # units form a group and inversion is an involution
    for u in ds.units:
        v = ds.inverse_of[u]
        assert ds.inverse_of[v] == u and r.mul(u, v) == r.one
    U = np.array(sorted(ds.units))
    assert set(np.unique(r.tables().mul[U][:, U]).tolist()) == ds.units


def test_zero_ring():
    r = ring("Z1")
    ds = r.derived
    assert ds.units == ds.idempotents == ds.nilpotents == ds.center == ds.jacobson == {0}


@given(st.sampled_from(["Z9", "Z12", "T2(Z3)", "GR(Z2,C4)", "M2(Z2)"]), st.data())
def test_nilpotent_iff_power_orbit_hits_zero(expr, data):
    r = ring(expr)
    a = data.draw(st.integers(0, r.order - 1))
    assert (a in r.derived.nilpotents) == is_nilpotent(r, a) == (r.pow(a, r.order) == r.zero)


def test_table_file_roundtrip(tmp_path):
    r = ring("T2(Z2)")
    p = tmp_path / "t2.ring"
    write_ring_table(r, p)
    s = read_ring_table(p)
    assert s.order == 8
    assert (s.tables().mul == r.tables().mul).all()


def test_table_file_errors(tmp_path):
    p = tmp_path / "bad.ring"
    p.write_text("order 2\n0 1\n1 0\n0 0\n")
    with pytest.raises(TableFormatError):
        read_ring_table(p)
    p.write_text("order 0\n")
    with pytest.raises(TableFormatError):
        read_ring_table(p)


def test_bundled_f4():
    r = ring("table(F4)")
    assert r.order == 4 and len(r.derived.units) == 3
    A, M = gf4_tables()
    assert (r.tables().add == np.array(A)).all() and (r.tables().mul == np.array(M)).all()


@pytest.mark.parametrize("expr", ["M2(Z3)", "T2(Z4)", "GR(Z2,gtable(S3))", "Ks(Z4,2)",
                                  "FT(Z2,Z4,R)", "corner(T3(Z2),32)", "quot(T2(Z4),2)"])
def test_constructed_rings_pass_full_axiom_scan(expr):
    check_axioms(ring(expr))


def test_sampled_axiom_scan_above_limit():
    check_axioms(ring("M2(Z4)"), full_limit=16, samples=20000)

"""Finite unital rings on the carrier 0..n-1 and their derived element sets.

A :class:`FiniteRing` is defined by vectorized ``add``/``mul``/``neg``
callables over numpy integer arrays.  Cayley tables are materialized lazily
(up to ``TABLE_LIMIT`` elements) and every derived set is computed from them.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import (
    AxiomViolation,
    EngineError,
    NoIdentity,
    OrderCapExceeded,
    OutOfRangeEntry,
    TableFormatError,
)

ORDER_CAP = 65536
TABLE_LIMIT = 4096
FULL_AXIOM_LIMIT = 4096

# Cells per chunk when filling n x n tables; bounds peak memory.
_CHUNK_CELLS = 1 << 22


def check_cap(order, cap=None):
    cap = ORDER_CAP if cap is None else cap
    if order > cap:
        raise OrderCapExceeded(f"order {order} exceeds cap {cap}")
    return order


@dataclass(frozen=True)
class Tables:
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray


class FiniteRing:
    """A finite ring with identity on element ids ``0..order-1``.

    ``add``, ``mul`` and ``neg`` must accept broadcastable int64 arrays.
    ``info`` carries constructor metadata (e.g. the base ring and group of a
    group ring) that downstream helpers such as the augmentation ideal need.
    """

    def __init__(self, order, add, mul, neg, zero, one, *, labels=None,
                 source="table", info=None):
        if order < 1:
            raise ValueError("a ring has at least one element")
        self.order = int(order)
        self._add = add
        self._mul = mul
        self._neg = neg
        self.zero = int(zero)
        self.one = int(one)
        self._labels = labels
        self.source = source
        self.info = dict(info or {})
        self._tables = None
        # memo for analyses computed by other modules (keyed by name)
        self.memo = {}

    @classmethod
    def from_tables(cls, add_table, mul_table, zero, one, *, labels=None,
                    source="table", info=None):
        A = np.asarray(add_table, dtype=np.int32)
        M = np.asarray(mul_table, dtype=np.int32)
        n = A.shape[0]
        N = np.argmax(A == zero, axis=1).astype(np.int32)
        ring = cls(
            n,
            lambda a, b: A[a, b].astype(np.int64),
            lambda a, b: M[a, b].astype(np.int64),
            lambda a: N[a].astype(np.int64),
            zero, one, labels=labels, source=source, info=info,
        )
        ring._tables = Tables(A, M, N)
        return ring

    def __repr__(self):
        return f"FiniteRing(order={self.order}, source={self.source!r})"

    def __len__(self):
        return self.order

    # -- element arithmetic -------------------------------------------------

    def _binary(self, fn, tab, a, b):
        if self._tables is not None:
            out = tab[a, b]
        else:
            out = fn(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        return int(out) if np.ndim(out) == 0 else out

    def add(self, a, b):
        t = self._tables
        return self._binary(self._add, t.add if t else None, a, b)

    def mul(self, a, b):
        t = self._tables
        return self._binary(self._mul, t.mul if t else None, a, b)

    def neg(self, a):
        if self._tables is not None:
            out = self._tables.neg[a]
        else:
            out = self._neg(np.asarray(a, dtype=np.int64))
        return int(out) if np.ndim(out) == 0 else out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def pow(self, a, k):
        """``a**k`` by repeated squaring; ``a**0`` is one."""
        if k < 0:
            raise ValueError("negative exponent")
        result, base = self.one, int(a)
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def times(self, k, a):
        """The integer multiple ``k*a`` (``k >= 0``), via doubling."""
        result, base = self.zero, int(a)
        while k:
            if k & 1:
                result = self.add(result, base)
            base = self.add(base, base)
            k >>= 1
        return result

    @property
    def two(self):
        return self.add(self.one, self.one)

    def label(self, a):
        if self._labels is None:
            return str(int(a))
        return self._labels(int(a))

    def elements(self):
        return np.arange(self.order, dtype=np.int64)

    # -- tables and derived sets ----------------------------------------------

    def tables(self) -> Tables:
        if self._tables is None:
            if self.order > TABLE_LIMIT:
                raise OrderCapExceeded(
                    f"order {self.order} exceeds the table limit {TABLE_LIMIT}")
            self._tables = _fill_tables(self)
        return self._tables

    @functools.cached_property
    def derived(self) -> "DerivedSets":
        return _compute_derived(self)


def _fill_tables(r):
    n = r.order
    idx = np.arange(n, dtype=np.int64)
    A = np.empty((n, n), dtype=np.int32)
    M = np.empty((n, n), dtype=np.int32)
    step = max(1, _CHUNK_CELLS // n)
    for lo in range(0, n, step):
        rows = idx[lo:lo + step, None]
        A[lo:lo + step] = r._add(rows, idx[None, :])
        M[lo:lo + step] = r._mul(rows, idx[None, :])
    N = r._neg(idx).astype(np.int32)
    if A.min() < 0 or A.max() >= n or M.min() < 0 or M.max() >= n:
        raise EngineError("constructor produced ids outside the carrier")
    return Tables(A, M, N)


@dataclass(frozen=True, eq=False)
class DerivedSets:
    units: frozenset
    inverse_of: dict
    idempotents: frozenset
    nilpotents: frozenset
    nil_index: dict
    center: frozenset
    jacobson: frozenset
    # boolean masks / sorted id arrays mirroring the sets above
    unit_mask: np.ndarray = field(repr=False)
    nil_mask: np.ndarray = field(repr=False)
    center_mask: np.ndarray = field(repr=False)
    jacobson_mask: np.ndarray = field(repr=False)
    idempotent_ids: np.ndarray = field(repr=False)


def derived_sets(r: FiniteRing) -> DerivedSets:
    return r.derived


def jacobson_radical(r: FiniteRing) -> frozenset:
    """``{x : 1 - t*x is a unit for every t}``."""
    return r.derived.jacobson


def _compute_derived(r):
    n = r.order
    T = r.tables()
    A, M, N = T.add, T.mul, T.neg
    one, zero = r.one, r.zero
    idx = np.arange(n, dtype=np.int64)

    idem = np.flatnonzero(M[idx, idx] == idx)

    hits = M == one
    has_right = hits.any(axis=1)
    right_inv = hits.argmax(axis=1)
    cand = np.flatnonzero(has_right)
    left_ok = M[right_inv[cand], cand] == one
    if not left_ok.all():
        bad = int(cand[np.argmin(left_ok)])
        raise EngineError(f"element {bad} has a one-sided inverse only")
    unit_mask = np.zeros(n, dtype=bool)
    unit_mask[cand] = True
    inverse_of = dict(zip(cand.tolist(), right_inv[cand].tolist()))
    del hits

    # a is nilpotent iff a**n == 0: nilpotency index never exceeds n.
    result = np.full(n, one, dtype=np.int64)
    base = idx.copy()
    k = n
    while k:
        if k & 1:
            result = M[result, base]
        base = M[base, base]
        k >>= 1
    nil_mask = result == zero
    nil = np.flatnonzero(nil_mask)
    cur = nil.copy()
    index = np.where(cur == zero, 1, 0)
    step = 1
    while (index == 0).any():
        cur = M[cur, nil]
        step += 1
        index[(index == 0) & (cur == zero)] = step
    nil_index = dict(zip(nil.tolist(), index.tolist()))

    center_mask = (M == M.T).all(axis=1)

    one_plus = A[one]
    jac_mask = np.ones(n, dtype=bool)
    rows = max(1, _CHUNK_CELLS // n)
    for lo in range(0, n, rows):
        jac_mask &= unit_mask[one_plus[N[M[lo:lo + rows]]]].all(axis=0)

    def ids(mask):
        return frozenset(np.flatnonzero(mask).tolist())

    return DerivedSets(
        units=ids(unit_mask),
        inverse_of=inverse_of,
        idempotents=frozenset(idem.tolist()),
        nilpotents=frozenset(nil.tolist()),
        nil_index=nil_index,
        center=ids(center_mask),
        jacobson=ids(jac_mask),
        unit_mask=unit_mask,
        nil_mask=nil_mask,
        center_mask=center_mask,
        jacobson_mask=jac_mask,
        idempotent_ids=idem.astype(np.int64),
    )


def is_nilpotent(r, a):
    """Scalar nilpotency test by walking the power orbit of ``a``.

    Stops at zero or at the first repeated power; the orbit has at most
    ``order + 1`` terms.
    """
    seen = set()
    p = int(a)
    for _ in range(r.order + 1):
        if p == r.zero:
            return True
        if p in seen:
            return False
        seen.add(p)
        p = r.mul(p, a)
    raise EngineError("power orbit longer than the carrier")


# -- axiom checking ---------------------------------------------------------


def _first(mask):
    return tuple(int(v) for v in np.argwhere(mask)[0])


def _check_axioms_tables(A, M, zero, one):
    n = A.shape[0]
    idx = np.arange(n)
    if not (A[zero] == idx).all() or not (A[:, zero] == idx).all():
        raise AxiomViolation("additive identity", (zero,))
    bad = A != A.T
    if bad.any():
        raise AxiomViolation("additive commutativity", _first(bad))
    no_neg = ~(A == zero).any(axis=1)
    if no_neg.any():
        raise AxiomViolation("additive inverse", (int(np.argmax(no_neg)),))
    for a in range(n):
        Aa, Ma, Mc = A[a], M[a], M[:, a]
        bad = A[Aa] != Aa[A]
        if bad.any():
            raise AxiomViolation("additive associativity", (a, *_first(bad)))
        bad = M[Ma] != Ma[M]
        if bad.any():
            raise AxiomViolation("multiplicative associativity", (a, *_first(bad)))
        bad = Ma[A] != A[Ma[:, None], Ma[None, :]]
        if bad.any():
            raise AxiomViolation("left distributivity", (a, *_first(bad)))
        bad = Mc[A] != A[Mc[:, None], Mc[None, :]]
        if bad.any():
            raise AxiomViolation("right distributivity", (a, *_first(bad)))
    if not (M[one] == idx).all() or not (M[:, one] == idx).all():
        raise NoIdentity(f"{one} is not a two-sided identity")


def _find_identity(T):
    n = T.shape[0]
    idx = np.arange(n)
    rows = (T == idx[None, :]).all(axis=1)
    cols = (T == idx[:, None]).all(axis=0)
    both = np.flatnonzero(rows & cols)
    if len(both) == 0:
        return None
    return int(both[0])


def validate_tables(add_table, mul_table, *, source="table", labels=None):
    """Build a ring from Cayley tables after an exhaustive axiom scan.

    Zero and one are discovered, never declared.
    """
    A = np.asarray(add_table)
    M = np.asarray(mul_table)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or M.shape != A.shape:
        raise OutOfRangeEntry(f"tables must be square and equal-sized, got "
                              f"{A.shape} and {M.shape}")
    n = A.shape[0]
    if n < 1:
        raise OutOfRangeEntry("empty table")
    check_cap(n)
    for T in (A, M):
        if not np.issubdtype(T.dtype, np.integer):
            raise OutOfRangeEntry("table entries must be integers")
        if T.min() < 0 or T.max() >= n:
            bad = _first((T < 0) | (T >= n))
            raise OutOfRangeEntry(f"entry {T[bad]} at {bad} is outside 0..{n - 1}")
    A = A.astype(np.int32)
    M = M.astype(np.int32)
    zero = _find_identity(A)
    if zero is None:
        raise AxiomViolation("additive identity")
    one = _find_identity(M)
    if one is None:
        raise NoIdentity("multiplication has no two-sided identity")
    _check_axioms_tables(A, M, zero, one)
    return FiniteRing.from_tables(A, M, zero, one, source=source, labels=labels)


def check_axioms(r, *, full_limit=FULL_AXIOM_LIMIT, samples=10**6, seed=0):
    """Verify the ring axioms of ``r``.

    Exhaustive when ``order <= full_limit``, otherwise on ``samples`` random
    triples.  Raises :class:`AxiomViolation` on failure.
    """
    if r.order <= full_limit:
        T = r.tables()
        _check_axioms_tables(T.add, T.mul, r.zero, r.one)
        return
    rng = np.random.default_rng(seed)
    add, mul, neg = r._add, r._mul, r._neg
    for lo in range(0, samples, 1 << 16):
        m = min(1 << 16, samples - lo)
        a, b, c = rng.integers(0, r.order, size=(3, m))
        checks = [
            ("additive commutativity", add(a, b), add(b, a)),
            ("additive associativity", add(add(a, b), c), add(a, add(b, c))),
            ("additive identity", add(a, r.zero), a),
            ("additive inverse", add(a, neg(a)), np.full(m, r.zero)),
            ("multiplicative associativity", mul(mul(a, b), c), mul(a, mul(b, c))),
            ("left distributivity", mul(a, add(b, c)), add(mul(a, b), mul(a, c))),
            ("right distributivity", mul(add(b, c), a), add(mul(b, a), mul(c, a))),
            ("multiplicative identity", mul(a, r.one), a),
            ("multiplicative identity", mul(r.one, a), a),
        ]
        for name, lhs, rhs in checks:
            bad = np.flatnonzero(lhs != rhs)
            if len(bad):
                i = bad[0]
                raise AxiomViolation(name, (a[i], b[i], c[i]))


# -- table files -------------------------------------------------------------


def _read_blocks(path, blocks):
    text = Path(path).read_text().split("\n")
    lines = [ln.strip() for ln in text if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise TableFormatError(f"{path}: empty file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "order" or not head[1].isdigit():
        raise TableFormatError(f"{path}: first line must be 'order n'")
    n = int(head[1])
    if n < 1:
        raise TableFormatError(f"{path}: order must be positive")
    if len(lines) != 1 + blocks * n:
        raise TableFormatError(
            f"{path}: expected {blocks * n} table rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError as exc:
            raise TableFormatError(f"{path}: non-integer entry in {ln!r}") from exc
        if len(row) != n:
            raise TableFormatError(f"{path}: row {ln!r} does not have {n} entries")
        rows.append(row)
    arr = np.array(rows, dtype=np.int64).reshape(blocks, n, n)
    return [arr[i] for i in range(blocks)]


def read_ring_table(path, *, source=None):
    A, M = _read_blocks(path, 2)
    return validate_tables(A, M, source=source or "table")


def write_ring_table(r, path):
    T = r.tables()
    with open(path, "w") as fh:
        fh.write(f"order {r.order}\n")
        for block in (T.add, T.mul):
            for row in block:
                fh.write(" ".join(str(int(v)) for v in row) + "\n")

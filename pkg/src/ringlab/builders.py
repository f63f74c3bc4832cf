"""Ring constructors: Z_n, products, matrix and triangular rings, corners,
quotients, group rings, K_s(R) and formal triangular rings T(R, S, M).

Composite rings encode elements in mixed radix with the most significant
component first: product factors in order, matrix entries row-major,
group-ring coefficients by group element id, K_s quadruples as (a, x, y, b)
and formal triangular triples as (r, m, s).
"""

from __future__ import annotations

import numpy as np

from .core import TABLE_LIMIT, FiniteRing, check_cap
from .errors import (
    BimoduleAxiomViolation,
    NotAGroupRing,
    NotAnIdeal,
    NotCentral,
    NotIdempotent,
    ZeroModulus,
)


def _warm(r):
    if r.order <= TABLE_LIMIT:
        r.tables()
    return r


def _digits(a, radices):
    out = []
    for rad in reversed(radices):
        out.append(a % rad)
        a = a // rad
    return out[::-1]


def _encode(parts, radices):
    out = 0
    for p, rad in zip(parts, radices):
        out = out * rad + p
    return out


def _checked_order(radices, cap):
    order = 1
    for rad in radices:
        order *= rad
    return check_cap(order, cap)


def make_zn(n, *, cap=None):
    """Integers modulo ``n``; ``n = 1`` gives the zero ring."""
    if n < 1:
        raise ZeroModulus(f"modulus must be positive, got {n}")
    check_cap(n, cap)
    return FiniteRing(
        n,
        lambda a, b: (a + b) % n,
        lambda a, b: (a * b) % n,
        lambda a: (-a) % n,
        0, 1 % n,
        info={"kind": "zn", "n": n},
    )


def direct_product(rs, *, cap=None):
    rs = [_warm(r) for r in rs]
    if not rs:
        raise ValueError("direct product of an empty list")
    radices = [r.order for r in rs]
    order = _checked_order(radices, cap)

    def lift(op):
        def f(a, b):
            da, db = _digits(a, radices), _digits(b, radices)
            return _encode([op(r)(x, y) for r, x, y in zip(rs, da, db)], radices)
        return f

    def neg(a):
        return _encode([r.neg(x) for r, x in zip(rs, _digits(a, radices))], radices)

    def label(a):
        ds = _digits(a, radices)
        return "(" + ",".join(r.label(int(x)) for r, x in zip(rs, ds)) + ")"

    return FiniteRing(
        order,
        lift(lambda r: r.add),
        lift(lambda r: r.mul),
        neg,
        _encode([r.zero for r in rs], radices),
        _encode([r.one for r in rs], radices),
        labels=label,
        info={"kind": "product", "factors": rs},
    )


def _matrix_label(r, k, entry):
    rows = []
    for i in range(k):
        rows.append("[" + ",".join(r.label(entry(i, j)) for j in range(k)) + "]")
    return "[" + ",".join(rows) + "]"


def matrix_ring(r, k, *, cap=None):
    """All ``k x k`` matrices over ``r``; entries row-major."""
    if k < 1:
        raise ValueError("matrix size must be at least 1")
    r = _warm(r)
    radices = [r.order] * (k * k)
    order = _checked_order(radices, cap)

    def add(a, b):
        da, db = _digits(a, radices), _digits(b, radices)
        return _encode([r.add(x, y) for x, y in zip(da, db)], radices)

    def mul(a, b):
        da, db = _digits(a, radices), _digits(b, radices)
        out = []
        for i in range(k):
            for j in range(k):
                acc = r.mul(da[i * k], db[j])
                for l in range(1, k):
                    acc = r.add(acc, r.mul(da[i * k + l], db[l * k + j]))
                out.append(acc)
        return _encode(out, radices)

    def neg(a):
        return _encode([r.neg(x) for x in _digits(a, radices)], radices)

    def label(a):
        ds = _digits(a, radices)
        return _matrix_label(r, k, lambda i, j: int(ds[i * k + j]))

    one = _encode([r.one if i == j else r.zero for i in range(k) for j in range(k)], radices)
    return FiniteRing(order, add, mul, neg, _encode([r.zero] * (k * k), radices), one,
                      labels=label, info={"kind": "matrix", "base": r, "k": k})


def triangular_ring(r, k, *, cap=None):
    """Upper-triangular ``k x k`` matrices; entries (i <= j) row-major."""
    if k < 1:
        raise ValueError("matrix size must be at least 1")
    r = _warm(r)
    pos = [(i, j) for i in range(k) for j in range(i, k)]
    slot = {p: s for s, p in enumerate(pos)}
    radices = [r.order] * len(pos)
    order = _checked_order(radices, cap)

    def add(a, b):
        da, db = _digits(a, radices), _digits(b, radices)
        return _encode([r.add(x, y) for x, y in zip(da, db)], radices)

    def mul(a, b):
        da, db = _digits(a, radices), _digits(b, radices)
        out = []
        for i, j in pos:
            acc = r.mul(da[slot[i, i]], db[slot[i, j]])
            for l in range(i + 1, j + 1):
                acc = r.add(acc, r.mul(da[slot[i, l]], db[slot[l, j]]))
            out.append(acc)
        return _encode(out, radices)

    def neg(a):
        return _encode([r.neg(x) for x in _digits(a, radices)], radices)

    def label(a):
        ds = _digits(a, radices)
        return _matrix_label(r, k, lambda i, j: int(ds[slot[i, j]]) if i <= j else r.zero)

    one = _encode([r.one if i == j else r.zero for i, j in pos], radices)
    return FiniteRing(order, add, mul, neg, _encode([r.zero] * len(pos), radices), one,
                      labels=label, info={"kind": "triangular", "base": r, "k": k})


def _subcarrier_ring(parent, carrier, one, *, labels=None, info=None):
    """Ring on a sorted subset of ``parent`` closed under its operations."""
    carrier = np.asarray(sorted(carrier), dtype=np.int64)
    back = np.full(parent.order, -1, dtype=np.int64)
    back[carrier] = np.arange(len(carrier))
    T = parent.tables()

    def idx(x):
        return back[x]

    if labels is None:
        def labels(a):
            return parent.label(int(carrier[a]))

    return FiniteRing(
        len(carrier),
        lambda a, b: idx(T.add[carrier[a], carrier[b]]),
        lambda a, b: idx(T.mul[carrier[a], carrier[b]]),
        lambda a: idx(T.neg[carrier[a]]),
        int(back[parent.zero]), int(back[one]),
        labels=labels, info=info,
    )


def corner_ring(r, e):
    """The corner ``eRe`` with identity ``e``; ids follow parent id order."""
    T = r.tables()
    if T.mul[e, e] != e:
        raise NotIdempotent(f"{r.label(e)} is not idempotent")
    carrier = np.unique(T.mul[T.mul[e], e])
    return _subcarrier_ring(r, carrier, e, info={"kind": "corner", "parent": r, "e": int(e),
                                                  "embedding": carrier})


def ideal_closure(r, gens):
    """Smallest two-sided ideal containing ``gens`` (fixed-point iteration)."""
    T = r.tables()
    member = np.zeros(r.order, dtype=bool)
    member[r.zero] = True
    for g in gens:
        member[int(g)] = True
    while True:
        s = np.flatnonzero(member)
        new = member.copy()
        new[T.mul[s].ravel()] = True
        new[T.mul[:, s].ravel()] = True
        new[T.neg[s]] = True
        s = np.flatnonzero(new)
        new[T.add[s][:, s].ravel()] = True
        if (new == member).all():
            return frozenset(s.tolist())
        member = new


def quotient_ring(r, ideal):
    """``r / ideal``; each coset is represented by its smallest id."""
    ideal = frozenset(int(x) for x in ideal)
    if not ideal or ideal_closure(r, ideal) != ideal:
        raise NotAnIdeal("generator set is not closed under the ideal operations")
    T = r.tables()
    I = np.asarray(sorted(ideal), dtype=np.int64)
    rep = T.add[:, I].min(axis=1).astype(np.int64)
    reps = np.unique(rep)
    child = np.full(r.order, -1, dtype=np.int64)
    child[reps] = np.arange(len(reps))
    # coset ops are well defined iff cosets are stable and I absorbs R on both sides
    member = np.zeros(r.order, dtype=bool)
    member[I] = True
    if not (rep[T.add[:, I]] == rep[:, None]).all():
        raise NotAnIdeal("coset representatives are inconsistent")
    if not (member[T.mul[I]].all() and member[T.mul[:, I]].all()):
        raise NotAnIdeal("coset multiplication is not well defined")

    def to_child(x):
        return child[rep[x]]

    def label(a):
        return "[" + r.label(int(reps[a])) + "]"

    return FiniteRing(
        len(reps),
        lambda a, b: to_child(T.add[reps[a], reps[b]]),
        lambda a, b: to_child(T.mul[reps[a], reps[b]]),
        lambda a: to_child(T.neg[reps[a]]),
        int(to_child(r.zero)), int(to_child(r.one)),
        labels=label,
        info={"kind": "quotient", "parent": r, "ideal": ideal, "projection": to_child},
    )


def lower_nilradical(r):
    """Nil_*(R); for a finite ring this is J(R), which is nilpotent."""
    return r.derived.jacobson


def two_r(r):
    """The ideal ``2R`` generated by ``1 + 1``."""
    return ideal_closure(r, {r.two})


# -- group rings -------------------------------------------------------------


def group_ring(r, g, *, cap=None):
    """Formal sums of group elements over ``r`` with convolution product."""
    r = _warm(r)
    radices = [r.order] * g.order
    order = _checked_order(radices, cap)
    G = g.table
    pairs = [[(x, y) for x in range(g.order) for y in range(g.order) if G[x, y] == z]
             for z in range(g.order)]

    def add(a, b):
        da, db = _digits(a, radices), _digits(b, radices)
        return _encode([r.add(x, y) for x, y in zip(da, db)], radices)

    def mul(a, b):
        da, db = _digits(a, radices), _digits(b, radices)
        out = []
        for terms in pairs:
            acc = r.zero
            for x, y in terms:
                acc = r.add(acc, r.mul(da[x], db[y]))
            out.append(acc)
        return _encode(out, radices)

    def neg(a):
        return _encode([r.neg(x) for x in _digits(a, radices)], radices)

    def label(a):
        ds = _digits(a, radices)
        terms = []
        for h, c in enumerate(ds):
            c = int(c)
            if c == r.zero:
                continue
            gl = g.label(h)
            if h == g.identity:
                terms.append(r.label(c))
            elif c == r.one:
                terms.append(gl)
            else:
                terms.append(f"{r.label(c)}*{gl}")
        return "+".join(terms) if terms else r.label(r.zero)

    one = _encode([r.one if h == g.identity else r.zero for h in range(g.order)], radices)
    return FiniteRing(order, add, mul, neg, _encode([r.zero] * g.order, radices), one,
                      labels=label, info={"kind": "group_ring", "base": r, "group": g})


def group_element(rg, h):
    """The basis element ``1*h`` of a group ring."""
    r, g = rg.info["base"], rg.info["group"]
    return int(_encode([r.one if x == h else r.zero for x in range(g.order)],
                       [r.order] * g.order))


def augmentation(rg, a):
    """Coefficient sum of ``a`` in the base ring."""
    if rg.info.get("kind") != "group_ring":
        raise NotAGroupRing("augmentation needs a ring built by group_ring")
    r, g = rg.info["base"], rg.info["group"]
    ds = _digits(np.asarray(a, dtype=np.int64), [r.order] * g.order)
    acc = np.full(np.shape(a), r.zero, dtype=np.int64)
    for d in ds:
        acc = np.asarray(r.add(acc, d))
    return acc


def augmentation_ideal(rg):
    if rg.info.get("kind") != "group_ring":
        raise NotAGroupRing("augmentation ideal needs a ring built by group_ring")
    r = rg.info["base"]
    sums = augmentation(rg, rg.elements())
    return frozenset(np.flatnonzero(sums == r.zero).tolist())


# -- Morita-type constructions ---------------------------------------------------


def ks_ring(r, s, *, cap=None):
    """Generalized matrix ring K_s(R) with multiplication twisted by central ``s``.

    (a1,x1,y1,b1)(a2,x2,y2,b2) =
        (a1a2 + s x1y2, a1x2 + x1b2, y1a2 + b1y2, s y1x2 + b1b2)
    """
    r = _warm(r)
    if not 0 <= s < r.order or s not in r.derived.center:
        raise NotCentral(f"{s} is not a central element")
    radices = [r.order] * 4
    order = _checked_order(radices, cap)
    add_, mul_ = r.add, r.mul

    def add(a, b):
        da, db = _digits(a, radices), _digits(b, radices)
        return _encode([add_(x, y) for x, y in zip(da, db)], radices)

    def mul(a, b):
        a1, x1, y1, b1 = _digits(a, radices)
        a2, x2, y2, b2 = _digits(b, radices)
        return _encode([
            add_(mul_(a1, a2), mul_(s, mul_(x1, y2))),
            add_(mul_(a1, x2), mul_(x1, b2)),
            add_(mul_(y1, a2), mul_(b1, y2)),
            add_(mul_(s, mul_(y1, x2)), mul_(b1, b2)),
        ], radices)

    def neg(a):
        return _encode([r.neg(x) for x in _digits(a, radices)], radices)

    def label(a):
        ds = [int(x) for x in _digits(a, radices)]
        return _matrix_label(r, 2, lambda i, j: ds[2 * i + j])

    z, o = r.zero, r.one
    return FiniteRing(order, add, mul, neg, _encode([z] * 4, radices),
                      _encode([o, z, z, o], radices), labels=label,
                      info={"kind": "ks", "base": r, "s": int(s)})


class Bimodule:
    """A finite (R, S)-bimodule given by tables.

    ``add`` is the |M| x |M| addition table, ``left[r, m]`` the left action
    and ``right[m, s]`` the right action.
    """

    def __init__(self, R, S, add, zero, left, right, *, labels=None, name="M"):
        self.R, self.S = R, S
        self.add = np.asarray(add, dtype=np.int64)
        self.order = self.add.shape[0]
        self.zero = int(zero)
        self.left = np.asarray(left, dtype=np.int64)
        self.right = np.asarray(right, dtype=np.int64)
        self.neg = np.argmax(self.add == self.zero, axis=1)
        self._labels = labels
        self.name = name
        verify_bimodule(self)

    def label(self, m):
        return str(int(m)) if self._labels is None else self._labels(int(m))


def _fail(axiom, mask, *prefix):
    if mask.any():
        raise BimoduleAxiomViolation(axiom, (*prefix, *np.argwhere(mask)[0]))


def verify_bimodule(M):
    R, S = _warm(M.R), _warm(M.S)
    A, L, Rt, z = M.add, M.left, M.right, M.zero
    n = M.order
    idx = np.arange(n)
    if L.shape != (R.order, n) or Rt.shape != (n, S.order) or A.shape != (n, n):
        raise BimoduleAxiomViolation("table shapes")
    for T in (A, L, Rt):
        if T.min() < 0 or T.max() >= n:
            raise BimoduleAxiomViolation("closure")
    _fail("additive identity", A[z] != idx)
    _fail("additive commutativity", A != A.T)
    _fail("additive inverse", ~(A == z).any(axis=1))
    for m in range(n):
        _fail("additive associativity", A[A[m]] != A[m][A], m)
    RA, RM = R.tables().add, R.tables().mul
    SA, SM = S.tables().add, S.tables().mul
    # r(m1 + m2) = rm1 + rm2 and (m1 + m2)s = m1s + m2s
    for x in range(R.order):
        _fail("left action additive in module", L[x][A] != A[L[x][:, None], L[x][None, :]], x)
    for y in range(S.order):
        c = Rt[:, y]
        _fail("right action additive in module", c[A] != A[c[:, None], c[None, :]], y)
    for m in range(n):
        col = L[:, m]
        _fail("left action additive in ring", col[RA] != A[col[:, None], col[None, :]], m)
        _fail("left action associative", col[RM] != L[:, col], m)
        row = Rt[m]
        _fail("right action additive in ring", row[SA] != A[row[:, None], row[None, :]], m)
        _fail("right action associative", row[SM] != Rt[row, :], m)
    _fail("left unital", L[R.one] != idx)
    _fail("right unital", Rt[:, S.one] != idx)
    # (r m) s = r (m s)
    for x in range(R.order):
        _fail("bimodule compatibility", Rt[L[x], :] != L[x][Rt], x)


def zero_bimodule(R, S):
    return Bimodule(R, S, [[0]], 0, np.zeros((R.order, 1)), np.zeros((1, S.order)),
                    name="0")


def regular_bimodule(R):
    """R as an (R, R)-bimodule through its own multiplication."""
    T = _warm(R).tables()
    return Bimodule(R, R, T.add, R.zero, T.mul, T.mul, labels=R.label, name="R")


def _require_zn(ring):
    if ring.info.get("kind") != "zn":
        raise BimoduleAxiomViolation("integer action needs a Z_n ring")


def integer_left_bimodule(R, S):
    """S as an (R, S)-bimodule: R = Z_m acts on the left by integer multiples."""
    _require_zn(R)
    T = _warm(S).tables()
    left = np.array([[S.times(x, m) for m in range(S.order)] for x in range(R.order)])
    return Bimodule(R, S, T.add, S.zero, left, T.mul, labels=S.label, name="S")


def integer_right_bimodule(R, S):
    """R as an (R, S)-bimodule: S = Z_m acts on the right by integer multiples."""
    _require_zn(S)
    T = _warm(R).tables()
    right = np.array([[R.times(y, m) for y in range(S.order)] for m in range(R.order)])
    return Bimodule(R, S, T.add, R.zero, T.mul, right, labels=R.label, name="R")


def formal_triangular(rR, rS, m, *, cap=None):
    """T(R, S, M): triples (r, m, s) with (r1r2, r1m2 + m1s2, s1s2)."""
    rR, rS = _warm(rR), _warm(rS)
    if m.R is not rR or m.S is not rS:
        raise BimoduleAxiomViolation("bimodule rings do not match")
    radices = [rR.order, m.order, rS.order]
    order = _checked_order(radices, cap)
    MA, L, Rt = m.add, m.left, m.right

    def add(a, b):
        (r1, m1, s1), (r2, m2, s2) = _digits(a, radices), _digits(b, radices)
        return _encode([rR.add(r1, r2), MA[m1, m2], rS.add(s1, s2)], radices)

    def mul(a, b):
        (r1, m1, s1), (r2, m2, s2) = _digits(a, radices), _digits(b, radices)
        return _encode([rR.mul(r1, r2), MA[L[r1, m2], Rt[m1, s2]], rS.mul(s1, s2)], radices)

    def neg(a):
        r1, m1, s1 = _digits(a, radices)
        return _encode([rR.neg(r1), m.neg[m1], rS.neg(s1)], radices)

    def label(a):
        r1, m1, s1 = (int(x) for x in _digits(a, radices))
        return f"[[{rR.label(r1)},{m.label(m1)}],[0,{rS.label(s1)}]]"

    return FiniteRing(order, add, mul, neg,
                      _encode([rR.zero, m.zero, rS.zero], radices),
                      _encode([rR.one, m.zero, rS.one], radices),
                      labels=label, info={"kind": "formal_triangular", "R": rR, "S": rS,
                                          "M": m})

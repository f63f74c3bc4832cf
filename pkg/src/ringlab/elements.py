"""Clean and nil-clean decompositions of single elements."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from .errors import FormulaDivergence, NotAlmostIdempotent

CLEAN = "clean"
NIL_CLEAN = "nil_clean"

ELEMENT_FLAGS = (
    "clean",
    "strongly_clean",
    "uniquely_clean",
    "uniquely_strongly_clean",
    "nil_clean",
    "strongly_nil_clean",
    "uniquely_nil_clean",
)


@dataclass(frozen=True)
class Decomposition:
    """``a = e + partner`` with ``e`` idempotent and ``partner`` a unit
    (kind ``clean``) or a nilpotent (kind ``nil_clean``)."""

    kind: str
    e: int
    partner: int
    commutes: bool

    def describe(self, r):
        sep = "u" if self.kind == CLEAN else "q"
        tag = ", commuting" if self.commutes else ""
        return f"(e={r.label(self.e)}, {sep}={r.label(self.partner)}{tag})"


@dataclass
class ElementProfile:
    element: int
    clean: bool
    strongly_clean: bool
    uniquely_clean: bool
    uniquely_strongly_clean: bool
    nil_clean: bool
    strongly_nil_clean: bool
    uniquely_nil_clean: bool
    clean_witnesses: list = field(default_factory=list)
    nil_clean_witnesses: list = field(default_factory=list)

    @property
    def strongly_clean_witnesses(self):
        return [d for d in self.clean_witnesses if d.commutes]

    @property
    def strongly_nil_clean_witnesses(self):
        return [d for d in self.nil_clean_witnesses if d.commutes]

    @property
    def commuting_nil_clean_count(self):
        # kept so either reading of "uniquely nil-clean" can be asserted
        return len(self.strongly_nil_clean_witnesses)

    def flags(self):
        return {name: getattr(self, name) for name in ELEMENT_FLAGS}


def _witnesses(r, a, kind):
    T = r.tables()
    ds = r.derived
    E = ds.idempotent_ids
    partner = T.add[a, T.neg[E]]
    mask = ds.unit_mask[partner] if kind == CLEAN else ds.nil_mask[partner]
    commutes = T.mul[a, E] == T.mul[E, a]
    return [Decomposition(kind, int(e), int(p), bool(c))
            for e, p, c, ok in zip(E, partner, commutes, mask) if ok]


def clean_witnesses(r, a):
    """All ``(e, a - e)`` with ``a - e`` a unit, ordered by idempotent id."""
    return _witnesses(r, int(a), CLEAN)


def nil_clean_witnesses(r, a):
    """All ``(e, a - e)`` with ``a - e`` nilpotent, ordered by idempotent id."""
    return _witnesses(r, int(a), NIL_CLEAN)


def classify_element(r, a):
    cw = clean_witnesses(r, a)
    nw = nil_clean_witnesses(r, a)
    sc = sum(d.commutes for d in cw)
    snc = sum(d.commutes for d in nw)
    return ElementProfile(
        element=int(a),
        clean=bool(cw),
        strongly_clean=sc > 0,
        uniquely_clean=len(cw) == 1,
        uniquely_strongly_clean=sc == 1,
        nil_clean=bool(nw),
        strongly_nil_clean=snc > 0,
        uniquely_nil_clean=len(nw) == 1,
        clean_witnesses=cw,
        nil_clean_witnesses=nw,
    )


@dataclass(frozen=True, eq=False)
class ElementCounts:
    """Per-element decomposition counts for the whole ring (index = element id)."""

    clean: np.ndarray
    strongly_clean: np.ndarray
    nil_clean: np.ndarray
    strongly_nil_clean: np.ndarray


def element_counts(r) -> ElementCounts:
    """Vectorized witness counts for every element; memoized on the ring."""
    if "element_counts" in r.memo:
        return r.memo["element_counts"]
    T = r.tables()
    ds = r.derived
    E = ds.idempotent_ids
    negE = T.neg[E]
    n = r.order
    out = [np.zeros(n, dtype=np.int64) for _ in range(4)]
    step = max(1, (1 << 22) // max(1, len(E)))
    for lo in range(0, n, step):
        a = np.arange(lo, min(n, lo + step))
        diff = T.add[a[:, None], negE[None, :]]
        comm = T.mul[a[:, None], E[None, :]] == T.mul[E[None, :], a[:, None]]
        u = ds.unit_mask[diff]
        q = ds.nil_mask[diff]
        out[0][a] = u.sum(axis=1)
        out[1][a] = (u & comm).sum(axis=1)
        out[2][a] = q.sum(axis=1)
        out[3][a] = (q & comm).sum(axis=1)
    counts = ElementCounts(*out)
    r.memo["element_counts"] = counts
    return counts


def lift_idempotent(r, a):
    """Idempotent ``e`` with ``a - e`` nilpotent and ``ea = ae``, for ``a - a^2`` nilpotent.

    Uses e = sum_{i=0}^{n} C(2n, i) a^(2n-i) (1-a)^i with n the nilpotency
    index of a - a^2, retrying with larger n if the checks fail.
    """
    a = int(a)
    ds = r.derived
    d = r.sub(a, r.mul(a, a))
    if d not in ds.nilpotents:
        raise NotAlmostIdempotent(f"{r.label(a)} - {r.label(a)}^2 is not nilpotent")
    b = r.sub(r.one, a)
    for n in range(ds.nil_index[d], r.order + 2):
        e = r.zero
        for i in range(n + 1):
            coeff = r.times(comb(2 * n, i), r.one)
            term = r.mul(coeff, r.mul(r.pow(a, 2 * n - i), r.pow(b, i)))
            e = r.add(e, term)
        if (r.mul(e, e) == e and r.sub(a, e) in ds.nilpotents
                and r.mul(e, a) == r.mul(a, e)):
            return e
    raise FormulaDivergence(f"no idempotent lift found for {r.label(a)}")


def strongly_clean_from_nil_clean(r, d):
    """From a commuting nil-clean decomposition ``a = e + q`` build the
    strongly clean one ``a = (1 - e) + ((2e - 1) + q)``."""
    f = r.sub(r.one, d.e)
    u = r.add(r.sub(r.add(d.e, d.e), r.one), d.partner)
    return Decomposition(CLEAN, f, u, r.mul(f, u) == r.mul(u, f))

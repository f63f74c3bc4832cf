"""Ring-class verdicts by brute force, plus the independent CSNC/NCUC deciders."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import ceil, log2

import numpy as np

from .elements import classify_element, element_counts

CLASS_NAMES = (
    "CSNC",
    "NCUC",
    "CUNC",
    "NCSUC",
    "NCC",
    "NCUNC",
    "UU",
    "abelian",
    "boolean",
    "reduced",
    "local",
    "clean_ring",
    "nil_clean_ring",
    "strongly_nil_clean_ring",
    "uniquely_clean_ring",
)

# Column order of the reference classification table.
TABLE_CLASSES = ("CUNC", "NCUC", "CSNC", "NCSUC", "NCC")


@dataclass
class Witness:
    element: int
    label: str
    detail: str
    decompositions: list = field(default_factory=list)


@dataclass
class RingProfile:
    order: int
    verdicts: dict
    witnesses: dict

    def __getitem__(self, name):
        return self.verdicts[name]


def _first(mask):
    hits = np.flatnonzero(mask)
    return int(hits[0]) if len(hits) else None


def class_profile(r) -> RingProfile:
    """Decide every ring class by scanning all elements and decompositions."""
    if "profile" in r.memo:
        return r.memo["profile"]
    T = r.tables()
    ds = r.derived
    c = element_counts(r)
    n = r.order
    idx = np.arange(n)
    clean = c.clean > 0
    nil = c.nil_clean > 0
    snc = c.strongly_nil_clean > 0

    # each entry: violating-element mask and a detail function for the witness
    sq = T.mul[idx, idx]
    a_minus_sq = T.add[idx, T.neg[sq]]
    one_plus_nil = np.zeros(n, dtype=bool)
    one_plus_nil[T.add[r.one, np.flatnonzero(ds.nil_mask)]] = True
    nonunits = np.flatnonzero(~ds.unit_mask)
    local_bad = np.zeros(n, dtype=bool)
    local_partner = {}
    if len(nonunits):
        sums = T.add[nonunits[:, None], nonunits[None, :]]
        bad = ds.unit_mask[sums]
        rows = bad.any(axis=1)
        local_bad[nonunits[rows]] = True
        for i in np.flatnonzero(rows)[:1]:
            local_partner[int(nonunits[i])] = int(nonunits[np.argmax(bad[i])])
    idem = np.zeros(n, dtype=bool)
    idem[ds.idempotent_ids] = True

    def lab(x):
        return r.label(int(x))

    checks = {
        "CSNC": (clean & ~snc, lambda a: "clean but not strongly nil-clean; a-a^2 = "
                 f"{lab(a_minus_sq[a])} is "
                 f"{'nilpotent' if ds.nil_mask[a_minus_sq[a]] else 'not nilpotent'}"),
        "NCUC": (nil & (c.clean != 1),
                 lambda a: f"nil-clean with {c.clean[a]} clean decompositions"),
        "CUNC": (clean & (c.nil_clean != 1),
                 lambda a: f"clean with {c.nil_clean[a]} nil-clean decompositions"),
        "NCSUC": (nil & (c.strongly_clean != 1),
                  lambda a: f"nil-clean with {c.strongly_clean[a]} strongly clean decompositions"),
        "NCC": (nil & ~clean, lambda a: "nil-clean but not clean"),
        "NCUNC": (nil & (c.nil_clean != 1),
                  lambda a: f"nil-clean with {c.nil_clean[a]} nil-clean decompositions"),
        "UU": (ds.unit_mask != one_plus_nil, lambda a: "unit with a-1 not nilpotent"),
        "abelian": (idem & ~ds.center_mask, lambda a: "idempotent not central"),
        "boolean": (sq != idx, lambda a: f"a^2 = {lab(sq[a])}"),
        "reduced": (ds.nil_mask & (idx != r.zero),
                    lambda a: f"nonzero nilpotent of index {ds.nil_index[a]}"),
        "local": (local_bad, lambda a: f"non-unit whose sum with non-unit "
                  f"{lab(local_partner[a])} is a unit"),
        "clean_ring": (~clean, lambda a: "not clean"),
        "nil_clean_ring": (~nil, lambda a: "not nil-clean"),
        "strongly_nil_clean_ring": (~snc, lambda a: "not strongly nil-clean"),
        "uniquely_clean_ring": (c.clean != 1,
                                lambda a: f"{c.clean[a]} clean decompositions"),
    }
    verdicts, witnesses = {}, {}
    for name in CLASS_NAMES:
        mask, detail = checks[name]
        a = _first(mask)
        verdicts[name] = a is None
        if a is not None:
            prof = classify_element(r, a)
            witnesses[name] = Witness(a, r.label(a), detail(a),
                                      prof.clean_witnesses + prof.nil_clean_witnesses)
    profile = RingProfile(n, verdicts, witnesses)
    r.memo["profile"] = profile
    return profile


# -- independent deciders ------------------------------------------------------


def _clean_ids(r):
    return np.flatnonzero(element_counts(r).clean > 0)


def csnc_criterion_witness(r):
    """Smallest clean ``a`` with ``a - a^2`` not nilpotent, or None."""
    ds = r.derived
    for a in _clean_ids(r):
        if r.sub(int(a), r.mul(int(a), int(a))) not in ds.nilpotents:
            return int(a)
    return None


def is_csnc_criterion(r):
    """Every clean element satisfies ``a - a^2`` nilpotent."""
    return csnc_criterion_witness(r) is None


def is_uu(r):
    ds = r.derived
    shifted = {r.add(r.one, q) for q in ds.nilpotents}
    return shifted == set(ds.units)


def is_csnc_uu_criterion(r):
    """Every clean element is strongly clean and U(R) = 1 + Nil(R)."""
    c = element_counts(r)
    clean = c.clean > 0
    return bool((c.strongly_clean[clean] > 0).all()) and is_uu(r)


def _power_bound(r):
    return ceil(log2(r.order)) if r.order > 1 else 0


def power_criterion_exponents(r):
    """For each clean ``a``, the least ``k`` (up to ceil(log2 n)) with
    ``a^(2^k) - a^(2^(k+1))`` nilpotent, or None if there is none."""
    ds = r.derived
    out = {}
    for a in _clean_ids(r):
        p = int(a)
        out[int(a)] = None
        for k in range(_power_bound(r) + 1):
            p2 = r.mul(p, p)
            if r.sub(p, p2) in ds.nilpotents:
                out[int(a)] = k
                break
            p = p2
    return out


def is_csnc_power_criterion(r):
    """2 nilpotent, and each clean a has some a^(2^k) - a^(2^(k+1)) nilpotent."""
    if r.two not in r.derived.nilpotents:
        return False
    return all(k is not None for k in power_criterion_exponents(r).values())


def is_csnc_power_snc_criterion(r):
    """2 nilpotent, and each clean a has some a^(2^k) strongly nil-clean."""
    if r.two not in r.derived.nilpotents:
        return False
    snc = element_counts(r).strongly_nil_clean > 0
    for a in _clean_ids(r):
        p = int(a)
        for _ in range(_power_bound(r) + 1):
            if snc[p]:
                break
            p = r.mul(p, p)
        else:
            return False
    return True


def is_ncuc_criterion(r):
    """Abelian: every idempotent is central."""
    return r.derived.idempotents <= r.derived.center


def csnc_deciders(r):
    return {
        "brute_force": class_profile(r)["CSNC"],
        "a_minus_a_squared": is_csnc_criterion(r),
        "strongly_clean_uu": is_csnc_uu_criterion(r),
        "power": is_csnc_power_criterion(r),
        "power_strongly_nil_clean": is_csnc_power_snc_criterion(r),
    }


def ncuc_deciders(r):
    prof = class_profile(r)
    return {
        "brute_force": prof["NCUC"],
        "abelian": is_ncuc_criterion(r),
        "ncunc": prof["NCUNC"],
    }


def table_row(r):
    prof = class_profile(r)
    return tuple(prof[name] for name in TABLE_CLASSES)

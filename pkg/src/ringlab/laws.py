"""Executable law suite: each law is an implication or equivalence between
ring-class verdicts, checked on one concrete ring (and rings derived from it)."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import builders as B
from .classes import (
    class_profile,
    csnc_deciders,
    ncuc_deciders,
)
from .elements import (
    classify_element,
    element_counts,
    lift_idempotent,
    strongly_clean_from_nil_clean,
)
from .expr import Cn, GProd, GTable, make_group, to_string
from .errors import OrderCapExceeded

PASS, FAIL, SKIP = "pass", "fail", "skip"

# Derived rings (products, T_n, K_s, group rings, ...) are only built up to this order.
DERIVED_CAP = 1024

LAW_STATEMENTS = {
    "L1": "CSNC by brute force = a-a^2 criterion = strongly-clean+UU criterion = power criteria",
    "L2": "NCUC by brute force = abelian = NCUNC",
    "L3": "CSNC implies 2 nilpotent and J(R) inside Nil(R)",
    "L4": "CSNC iff strongly nil-clean ring (finite rings are semi-potent)",
    "L5": "corner rings of a CSNC ring are CSNC",
    "L6": "R x P is CSNC iff R and P are CSNC",
    "L7": "T_n(R) is CSNC iff R is CSNC",
    "L8": "K_s(R) is CSNC iff R is CSNC, for central nilpotent s",
    "L9": "R[G] is CSNC iff R is CSNC and G is a 2-group",
    "L10": "R is CSNC iff R/I is CSNC for nil ideals I (incl. J = Nil_*); iff 2 nilpotent and R/2R CSNC",
    "L11": "Z_n is CSNC iff n is a power of 2",
    "L12": "a local ring is CSNC iff R/J(R) has two elements",
    "L13": "reduced rings and local rings are NCSUC",
    "L14": "over a finite field K, T_2(K) is NCSUC and M_2(K) is not",
    "L15": "CUNC => NCUC, CSNC => NCSUC, NCSUC => NCC, NCUC => abelian",
    "L16": "CUNC iff abelian and CSNC",
    "L17": "augmentation ideal of R[G] is nilpotent for CSNC R and a 2-group G",
    "E1": "idempotents are uniquely strongly clean; uniquely clean iff central",
    "E2": "nilpotents are uniquely strongly clean",
    "E3": "strongly nil-clean a = e+q gives strongly clean a = (1-e)+((2e-1)+q)",
    "E4": "a-a^2 nilpotent: the lifted idempotent is a commuting nil-clean witness",
    "E5": "NCUC: (Nil+U) meets Id only in 1, and nilpotents are uniquely nil-clean",
}

PARTNERS = ("Z2", "Z3", "Z4", "T2(Z2)")
GROUPS = (Cn(1), Cn(2), Cn(3), Cn(4), GProd((Cn(2), Cn(2))), GTable("S3"))
TWO_GROUPS = (Cn(1), Cn(2), Cn(4), GProd((Cn(2), Cn(2))))
MAX_CORNERS = 64
MAX_IDEALS = 8
MAX_KS = 4


@dataclass
class LawResult:
    law: str
    statement: str
    status: str
    detail: str = ""


@dataclass
class LawReport:
    ring: str
    results: list = field(default_factory=list)

    @property
    def failures(self):
        return [x for x in self.results if x.status == FAIL]

    @property
    def ok(self):
        return not self.failures


class _Case:
    """Accumulates sub-checks for one law."""

    def __init__(self):
        self.ran = 0
        self.skipped = 0
        self.fails = []
        self.notes = []

    def check(self, ok, msg):
        self.ran += 1
        if not ok:
            self.fails.append(msg)

    def skip(self, msg):
        self.skipped += 1
        self.notes.append(msg)

    def result(self, law):
        if self.fails:
            status, detail = FAIL, "; ".join(self.fails)
        elif self.ran:
            status = PASS
            detail = f"{self.ran} checks" + (f", {self.skipped} skipped" if self.skipped else "")
        else:
            status, detail = SKIP, "; ".join(self.notes) or "not applicable"
        return LawResult(law, LAW_STATEMENTS[law], status, detail)


def _csnc(r):
    return class_profile(r)["CSNC"]


def _small(order, cap):
    return order <= cap


def is_nilpotent_set(r, subset):
    """True iff some k-fold product of elements of ``subset`` is always zero."""
    S = np.asarray(sorted(subset), dtype=np.int64)
    if len(S) == 0:
        return True
    M = r.tables().mul
    P = S
    for _ in range(len(S) + 1):
        if len(P) == 1 and P[0] == r.zero:
            return True
        P = np.unique(M[P][:, S])
    return bool(len(P) == 1 and P[0] == r.zero)


def _is_field(r):
    ds = r.derived
    return (r.order > 1 and len(ds.center) == r.order
            and len(ds.units) == r.order - 1)


def _is_power_of_two(n):
    return n >= 1 and n & (n - 1) == 0


def check_laws(r, *, name=None, derived_cap=DERIVED_CAP, laws=None):
    """Evaluate every applicable law on ``r``; return a :class:`LawReport`."""
    name = name or (to_string(r.source) if not isinstance(r.source, str) else r.source)
    report = LawReport(name)
    for law in laws or LAW_STATEMENTS:
        case = _Case()
        try:
            _LAWS[law](r, case, derived_cap)
        except OrderCapExceeded as exc:
            case.skip(str(exc))
        report.results.append(case.result(law))
    return report


def _l1(r, case, cap):
    d = csnc_deciders(r)
    case.check(len(set(d.values())) == 1, f"{name_of(r)}: deciders disagree {d}")


def _l2(r, case, cap):
    d = ncuc_deciders(r)
    case.check(len(set(d.values())) == 1, f"{name_of(r)}: deciders disagree {d}")


def _l3(r, case, cap):
    if not _csnc(r):
        return case.skip("ring is not CSNC")
    ds = r.derived
    case.check(r.two in ds.nilpotents, f"{name_of(r)}: 2 is not nilpotent")
    bad = sorted(ds.jacobson - ds.nilpotents)
    case.check(not bad, f"{name_of(r)}: J(R) element {bad[:1]} not nilpotent")
    case.check(is_nilpotent_set(r, B.ideal_closure(r, ds.jacobson)),
               f"{name_of(r)}: J(R) is not a nilpotent ideal")


def _l4(r, case, cap):
    p = class_profile(r)
    case.check(p["CSNC"] == p["strongly_nil_clean_ring"],
               f"{name_of(r)}: CSNC={p['CSNC']} but strongly nil-clean ring="
               f"{p['strongly_nil_clean_ring']}")


def _l5(r, case, cap):
    if _kind(r) == "corner" and _csnc(r.info["parent"]):
        case.check(_csnc(r), f"{name_of(r)} is a corner of a CSNC ring but not CSNC")
    if not _csnc(r):
        if case.ran:
            return
        return case.skip("ring is not CSNC")
    idem = sorted(r.derived.idempotents)
    if len(idem) > MAX_CORNERS:
        step = len(idem) / MAX_CORNERS
        idem = sorted({idem[int(i * step)] for i in range(MAX_CORNERS)})
    for e in idem:
        c = B.corner_ring(r, e)
        case.check(_csnc(c), f"{name_of(r)}: corner at e={e} ({r.label(e)}) is not CSNC")


def _kind(r):
    return r.info.get("kind") if r.info else None


def _l6(r, case, cap):
    from .expr import build

    if _kind(r) == "product":
        fs = r.info["factors"]
        case.check(_csnc(r) == all(_csnc(f) for f in fs),
                   f"{name_of(r)} as a product: CSNC={_csnc(r)}")

    for p_expr in PARTNERS:
        p = build(p_expr)
        if not _small(r.order * p.order, cap):
            case.skip(f"{p_expr} product over cap")
            continue
        prod = B.direct_product([r, p])
        expect = _csnc(r) and _csnc(p)
        case.check(_csnc(prod) == expect, f"{name_of(r)} x {p_expr}: CSNC={_csnc(prod)}")


def _l7(r, case, cap):
    if _kind(r) == "triangular":
        base = r.info["base"]
        case.check(_csnc(r) == _csnc(base), f"{name_of(r)} over its base: CSNC={_csnc(r)}")
    for n in (1, 2, 3):
        if not _small(r.order ** (n * (n + 1) // 2), cap):
            case.skip(f"T_{n} over cap")
            continue
        t = B.triangular_ring(r, n)
        case.check(_csnc(t) == _csnc(r), f"T_{n}({name_of(r)}): CSNC={_csnc(t)}")


def _l8(r, case, cap):
    if _kind(r) == "ks":
        base, s = r.info["base"], r.info["s"]
        if s in base.derived.nilpotents:
            case.check(_csnc(r) == _csnc(base), f"{name_of(r)} over its base: CSNC={_csnc(r)}")
    if not _small(r.order ** 4, cap):
        return case.skip("K_s over cap")
    ds = r.derived
    svals = sorted(ds.center & ds.nilpotents)[:MAX_KS]
    for s in svals:
        k = B.ks_ring(r, s)
        case.check(_csnc(k) == _csnc(r), f"K_{s}({name_of(r)}): CSNC={_csnc(k)}")


def _l9(r, case, cap):
    if _kind(r) == "group_ring" and r.info["base"].order > 1:
        base, g = r.info["base"], r.info["group"]
        expect = _csnc(base) and g.is_two_group()
        case.check(_csnc(r) == expect,
                   f"{name_of(r)} as a group ring: CSNC={_csnc(r)}, expected {expect}")
    if r.order == 1:
        return case.skip("zero ring: every group ring is zero")
    for gx in GROUPS:
        g = make_group(gx)
        if not _small(r.order ** g.order, cap):
            case.skip(f"group ring over {to_string(gx)} over cap")
            continue
        rg = B.group_ring(r, g)
        expect = _csnc(r) and g.is_two_group()
        case.check(_csnc(rg) == expect,
                   f"{name_of(r)}[{to_string(gx)}]: CSNC={_csnc(rg)}, expected {expect}")


def nil_ideals(r, limit=MAX_IDEALS, attempts=4 * MAX_IDEALS):
    """J(R) plus nil ideals generated by single nilpotents (smallest ids first)."""
    ds = r.derived
    out = [frozenset(ds.jacobson)]
    for q in sorted(ds.nilpotents - {r.zero})[:attempts]:
        if len(out) >= limit:
            break
        ideal = B.ideal_closure(r, {q})
        if ideal <= ds.nilpotents and ideal not in out:
            out.append(ideal)
    return out


def _l10(r, case, cap):
    if _kind(r) == "quotient":
        parent, ideal = r.info["parent"], r.info["ideal"]
        if set(ideal) <= parent.derived.nilpotents:
            case.check(_csnc(r) == _csnc(parent),
                       f"{name_of(r)} over its parent: CSNC={_csnc(r)}")
    for ideal in nil_ideals(r):
        q = B.quotient_ring(r, ideal)
        case.check(_csnc(q) == _csnc(r),
                   f"{name_of(r)}/I with I={sorted(ideal)[:6]}: CSNC={_csnc(q)}")
    # 2R form: CSNC iff 2 is nilpotent and R/2R is CSNC
    two_nil = r.two in r.derived.nilpotents
    q = B.quotient_ring(r, B.two_r(r))
    case.check(_csnc(r) == (two_nil and _csnc(q)),
               f"{name_of(r)}: CSNC={_csnc(r)}, 2 nilpotent={two_nil}, CSNC(R/2R)={_csnc(q)}")


def _l11(r, case, cap):
    if r.info.get("kind") != "zn":
        return case.skip("not a Z_n ring")
    n = r.info["n"]
    case.check(_csnc(r) == _is_power_of_two(n), f"Z_{n}: CSNC={_csnc(r)}")


def _l12(r, case, cap):
    p = class_profile(r)
    if not p["local"] or r.order == 1:
        return case.skip("not a nonzero local ring")
    residue = r.order // len(r.derived.jacobson)
    case.check(p["CSNC"] == (residue == 2),
               f"{name_of(r)}: CSNC={p['CSNC']} with |R/J|={residue}")


def _l13(r, case, cap):
    p = class_profile(r)
    if p["reduced"]:
        case.check(p["NCSUC"], f"{name_of(r)}: reduced but not NCSUC")
    if p["local"] and r.order > 1:
        case.check(p["NCSUC"], f"{name_of(r)}: local but not NCSUC")
    if not case.ran:
        case.skip("neither reduced nor local")


def _l14(r, case, cap):
    if not _is_field(r):
        return case.skip("not a finite field")
    if _small(r.order ** 3, cap):
        t = B.triangular_ring(r, 2)
        case.check(class_profile(t)["NCSUC"], f"T_2({name_of(r)}) is not NCSUC")
    else:
        case.skip("T_2 over cap")
    if _small(r.order ** 4, cap):
        m = B.matrix_ring(r, 2)
        case.check(not class_profile(m)["NCSUC"], f"M_2({name_of(r)}) is NCSUC")
    else:
        case.skip("M_2 over cap")


def _l15(r, case, cap):
    p = class_profile(r)
    for a, b in (("CUNC", "NCUC"), ("CSNC", "NCSUC"), ("NCSUC", "NCC"), ("NCUC", "abelian")):
        case.check(not p[a] or p[b], f"{name_of(r)}: {a} holds but {b} fails")


def _l16(r, case, cap):
    p = class_profile(r)
    case.check(p["CUNC"] == (p["abelian"] and p["CSNC"]),
               f"{name_of(r)}: CUNC={p['CUNC']}, abelian={p['abelian']}, CSNC={p['CSNC']}")


def _l17(r, case, cap):
    if not _csnc(r):
        return case.skip("ring is not CSNC")
    for gx in TWO_GROUPS:
        g = make_group(gx)
        if not _small(r.order ** g.order, cap):
            case.skip(f"group ring over {to_string(gx)} over cap")
            continue
        rg = B.group_ring(r, g)
        case.check(is_nilpotent_set(rg, B.augmentation_ideal(rg)),
                   f"{name_of(r)}[{to_string(gx)}]: augmentation ideal not nilpotent")


def _e1(r, case, cap):
    ds = r.derived
    for e in sorted(ds.idempotents):
        prof = classify_element(r, e)
        case.check(prof.uniquely_strongly_clean,
                   f"{name_of(r)}: idempotent {e} not uniquely strongly clean")
        case.check(prof.uniquely_clean == (e in ds.center),
                   f"{name_of(r)}: idempotent {e} uniquely clean={prof.uniquely_clean}, "
                   f"central={e in ds.center}")


def _e2(r, case, cap):
    c = element_counts(r)
    for q in sorted(r.derived.nilpotents):
        case.check(c.strongly_clean[q] == 1,
                   f"{name_of(r)}: nilpotent {q} has {c.strongly_clean[q]} strongly clean "
                   "decompositions")


def _e3(r, case, cap):
    ds = r.derived
    c = element_counts(r)
    for a in np.flatnonzero(c.strongly_nil_clean > 0):
        prof = classify_element(r, a)
        d = prof.strongly_nil_clean_witnesses[0]
        w = strongly_clean_from_nil_clean(r, d)
        ok = (w.e in ds.idempotents and w.partner in ds.units and w.commutes
              and r.add(w.e, w.partner) == int(a))
        case.check(ok, f"{name_of(r)}: element {a} strongly nil-clean but derived "
                       "decomposition is not strongly clean")


def _e4(r, case, cap):
    ds = r.derived
    c = element_counts(r)
    for a in np.flatnonzero(c.clean > 0):
        a = int(a)
        if r.sub(a, r.mul(a, a)) not in ds.nilpotents:
            continue
        e = lift_idempotent(r, a)
        hits = [d for d in classify_element(r, a).nil_clean_witnesses
                if d.e == e and d.commutes]
        case.check(bool(hits), f"{name_of(r)}: lift of {a} is not a commuting nil-clean witness")


def _e5(r, case, cap):
    p = class_profile(r)
    if not p["NCUC"]:
        return case.skip("ring is not NCUC")
    ds = r.derived
    T = r.tables()
    nil = np.asarray(sorted(ds.nilpotents))
    units = np.asarray(sorted(ds.units))
    sums = set(np.unique(T.add[nil[:, None], units[None, :]]).tolist())
    hit = sums & ds.idempotents
    case.check(hit == {r.one}, f"{name_of(r)}: (Nil+U) meets Id in {sorted(hit)}")
    c = element_counts(r)
    bad = [int(q) for q in nil if c.nil_clean[q] != 1]
    case.check(not bad, f"{name_of(r)}: nilpotent {bad[:1]} not uniquely nil-clean")


def name_of(r):
    return r.source if isinstance(r.source, str) else to_string(r.source)


_LAWS = {
    "L1": _l1, "L2": _l2, "L3": _l3, "L4": _l4, "L5": _l5, "L6": _l6, "L7": _l7,
    "L8": _l8, "L9": _l9, "L10": _l10, "L11": _l11, "L12": _l12, "L13": _l13,
    "L14": _l14, "L15": _l15, "L16": _l16, "L17": _l17,
    "E1": _e1, "E2": _e2, "E3": _e3, "E4": _e4, "E5": _e5,
}


def zn_law(max_n=64):
    """Z_n is CSNC exactly for powers of two, n = 1..max_n; returns mismatches."""
    from .builders import make_zn

    return [n for n in range(1, max_n + 1)
            if _csnc(make_zn(n)) != _is_power_of_two(n)]


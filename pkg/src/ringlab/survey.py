"""Deterministic survey of small constructor expressions with a JSONL cache."""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .classes import class_profile
from .errors import CacheWriteError
from .expr import Cn, GProd, GroupRing, GTable, Ks, Mat, Prod, Tri, Zn, build, make_group, to_string
from .record import make_record, validate_record

SURVEY_GROUPS = (Cn(2), Cn(3), Cn(4), GProd((Cn(2), Cn(2))), GTable("S3"))
MATRIX_SIZES = (2, 3)


def group_order(node):
    if isinstance(node, Cn):
        return node.n
    if isinstance(node, GProd):
        out = 1
        for f in node.factors:
            out *= group_order(f)
        return out
    return len(make_group(node).table)


def expr_order(node):
    """Order of the ring an expression denotes, without building it."""
    if isinstance(node, Zn):
        return node.n
    if isinstance(node, Prod):
        out = 1
        for f in node.factors:
            out *= expr_order(f)
        return out
    if isinstance(node, Mat):
        return expr_order(node.base) ** (node.k * node.k)
    if isinstance(node, Tri):
        return expr_order(node.base) ** (node.k * (node.k + 1) // 2)
    if isinstance(node, GroupRing):
        return expr_order(node.base) ** group_order(node.group)
    if isinstance(node, Ks):
        return expr_order(node.base) ** 4
    raise TypeError(f"no order formula for {to_string(node)}")


def _unary(node, max_order):
    """Matrix, triangular, group-ring and K_s rings over ``node`` within bound."""
    out = []
    for k in MATRIX_SIZES:
        out += [Mat(k, node), Tri(k, node)]
    out += [GroupRing(node, g) for g in SURVEY_GROUPS]
    if isinstance(node, Zn):
        out += [Ks(node, s) for s in range(node.n)]
    return [x for x in out if expr_order(x) <= max_order]


def enumerate_exprs(max_order, depth=2):
    """Canonical expressions of result order <= max_order, sorted by (order, text).

    Level 0 is Z_1..Z_max.  Each further level applies the unary constructors
    to the previous level and forms products of two nontrivial earlier rings.
    """
    levels = [[Zn(n) for n in range(1, max_order + 1)]]
    seen = {to_string(x): x for x in levels[0]}
    for _ in range(depth):
        pool = [x for lvl in levels for x in lvl if expr_order(x) > 1]
        fresh = []
        for x in levels[-1]:
            if expr_order(x) > 1:
                fresh += _unary(x, max_order)
        for i, a in enumerate(pool):
            for b in pool[i:]:
                if expr_order(a) * expr_order(b) <= max_order:
                    fresh.append(Prod((a, b)))
        level = []
        for x in fresh:
            key = to_string(x)
            if key not in seen:
                seen[key] = x
                level.append(x)
        levels.append(level)
    return sorted(seen, key=lambda s: (expr_order(seen[s]), s))


def classify_expr(expr, cap=None):
    """Build and classify one expression; returns a schema record."""
    t0 = time.perf_counter()
    r = build(expr, cap=cap)
    t1 = time.perf_counter()
    r.derived
    t2 = time.perf_counter()
    profile = class_profile(r)
    t3 = time.perf_counter()
    ms = {"build": t1 - t0, "derived": t2 - t1, "classify": t3 - t2}
    return make_record(to_string(r.source), profile, {k: int(v * 1000) for k, v in ms.items()})


def read_cache(path):
    """Records already in the cache, keyed by expression (later lines win)."""
    out = {}
    p = Path(path)
    if not p.exists():
        return out
    with p.open(encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                rec = validate_record(json.loads(line))
                out[rec["expr"]] = rec
    return out


class CacheWriter:
    """Single writer appending JSONL records; one line per record, flushed."""

    def __init__(self, path):
        self.path = Path(path)
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self.fh = self.path.open("a", encoding="utf-8")
        except OSError as exc:
            raise CacheWriteError(f"cannot open cache {self.path}: {exc}") from exc

    def append(self, rec):
        try:
            self.fh.write(json.dumps(rec, sort_keys=True, ensure_ascii=False) + "\n")
            self.fh.flush()
        except OSError as exc:
            raise CacheWriteError(f"cannot write cache {self.path}: {exc}") from exc

    def close(self):
        self.fh.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


def run_survey(max_order, *, cache_path=None, jobs=1, cap=None, depth=2, stats=None):
    """Yield ``(expr, record)`` in enumeration order.

    Cached expressions are not recomputed.  New records are appended to the
    cache by this process only, in enumeration order.
    """
    exprs = enumerate_exprs(max_order, depth)
    cached = read_cache(cache_path) if cache_path else {}
    todo = [e for e in exprs if e not in cached]
    if stats is not None:
        stats["cached"] = len(exprs) - len(todo)
        stats["computed"] = len(todo)
    writer = CacheWriter(cache_path) if cache_path else None
    pool = ProcessPoolExecutor(jobs) if jobs > 1 and len(todo) > 1 else None
    try:
        if pool is not None:
            fresh = pool.map(classify_expr, todo, [cap] * len(todo), chunksize=4)
        else:
            fresh = (classify_expr(e, cap) for e in todo)
        fresh = iter(fresh)
        for e in exprs:
            if e in cached:
                rec = cached[e]
            else:
                rec = next(fresh)
                if writer is not None:
                    writer.append(rec)
            yield e, rec
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
        if writer is not None:
            writer.close()


def default_cache_path(explicit=None):
    return explicit or os.environ.get("RINGLAB_CACHE") or None

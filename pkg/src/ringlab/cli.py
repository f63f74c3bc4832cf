"""``ringlab`` command-line front end.

Exit codes: 0 ok, 2 parse error (or bad element id), 3 build error,
4 table mismatch or law failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from .classes import TABLE_CLASSES, class_profile
from .core import ORDER_CAP
from .elements import ELEMENT_FLAGS, classify_element
from .errors import CacheWriteError, RingError
from .expr import ExprSyntaxError, build, to_string
from .laws import DERIVED_CAP, check_laws
from .record import dumps, make_record, mark, render_record, render_summary
from .survey import default_cache_path, run_survey

EXIT_OK, EXIT_PARSE, EXIT_BUILD, EXIT_MISMATCH = 0, 2, 3, 4

# reference grid, columns in TABLE_CLASSES order (CUNC, NCUC, CSNC, NCSUC, NCC)
TABLE1 = (
    ("M2(Z2)", (False, False, False, False, True)),
    ("T2(Z3)", (False, False, False, True, True)),
    ("T2(Z2)", (False, False, True, True, True)),
    ("Z3", (False, True, False, True, True)),
)


@dataclass
class CliConfig:
    order_cap: int = ORDER_CAP
    output: str = "text"
    cache_path: str | None = None
    parallelism: int = 1

    def __post_init__(self):
        if self.order_cap < 1:
            raise ValueError("order_cap must be at least 1")
        if self.parallelism < 1:
            raise ValueError("parallelism must be at least 1")
        if self.output not in ("text", "json"):
            raise ValueError(f"unknown output format {self.output!r}")


class _Fail(Exception):
    def __init__(self, code, message):
        self.code = code
        super().__init__(message)


def _build(expr, cfg):
    try:
        return build(expr, cap=cfg.order_cap)
    except ExprSyntaxError as exc:
        raise _Fail(EXIT_PARSE, f"parse error: {exc}") from exc
    except (RingError, OSError) as exc:
        raise _Fail(EXIT_BUILD, f"build error: {type(exc).__name__}: {exc}") from exc


def profile_record(r, *, timed=False):
    t0 = time.perf_counter()
    r.derived
    t1 = time.perf_counter()
    prof = class_profile(r)
    t2 = time.perf_counter()
    timings = {"derived": int((t1 - t0) * 1000), "classify": int((t2 - t1) * 1000)} if timed else {}
    return make_record(to_string(r.source), prof, timings)


def cmd_classify(args, cfg, out):
    r = _build(args.expr, cfg)
    rec = profile_record(r, timed=args.timings)
    if cfg.output == "json":
        print(dumps(rec), file=out)
    else:
        print(render_record(rec, timings=args.timings), file=out)
    return EXIT_OK


def cmd_element(args, cfg, out):
    r = _build(args.expr, cfg)
    if not 0 <= args.id < r.order:
        raise _Fail(EXIT_PARSE, f"element id {args.id} outside 0..{r.order - 1}")
    p = classify_element(r, args.id)
    if cfg.output == "json":
        rec = {
            "expr": to_string(r.source),
            "element": r.label(args.id),
            "flags": p.flags(),
            "clean_witnesses": [_dec_json(r, d) for d in p.clean_witnesses],
            "nil_clean_witnesses": [_dec_json(r, d) for d in p.nil_clean_witnesses],
        }
        print(json.dumps(rec, sort_keys=True, ensure_ascii=False), file=out)
        return EXIT_OK
    print(f"element {r.label(args.id)} of {to_string(r.source)}", file=out)
    width = max(map(len, ELEMENT_FLAGS))
    for name, flag in p.flags().items():
        print(f"  {name:<{width}}  {mark(flag)}", file=out)
    for title, ws in (("clean", p.clean_witnesses), ("nil-clean", p.nil_clean_witnesses)):
        print(f"  {title} witnesses ({len(ws)}):", file=out)
        for d in ws:
            print(f"    {d.describe(r)}", file=out)
    return EXIT_OK


def _dec_json(r, d):
    return {"e": r.label(d.e), "partner": r.label(d.partner), "commutes": d.commutes}


def table1_rows(cap=None):
    """Reproduce the 4x5 grid; returns (rows, mismatches)."""
    rows, bad = [], []
    for expr, expected in TABLE1:
        prof = class_profile(build(expr, cap=cap))
        got = tuple(prof[c] for c in TABLE_CLASSES)
        rows.append((expr, got))
        for col, g, e in zip(TABLE_CLASSES, got, expected):
            if g != e:
                bad.append((expr, col, e, g))
    return rows, bad


def cmd_table1(args, cfg, out):
    rows, bad = table1_rows(cfg.order_cap)
    if cfg.output == "json":
        print(json.dumps({
            "columns": list(TABLE_CLASSES),
            "rows": {expr: dict(zip(TABLE_CLASSES, got)) for expr, got in rows},
            "mismatches": [{"ring": e, "class": c, "expected": x, "got": g}
                           for e, c, x, g in bad],
        }, ensure_ascii=False), file=out)
    else:
        print(f"{'':<8}" + "".join(f"{c:>7}" for c in TABLE_CLASSES), file=out)
        for expr, got in rows:
            print(f"{expr:<8}" + "".join(f"{mark(g):>7}" for g in got), file=out)
    if bad:
        for e, c, x, g in bad:
            print(f"TableMismatch: {e} {c} expected {mark(x)} got {mark(g)}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_laws(args, cfg, out):
    r = _build(args.expr, cfg)
    report = check_laws(r, derived_cap=min(DERIVED_CAP, cfg.order_cap))
    if cfg.output == "json":
        print(json.dumps({
            "expr": report.ring,
            "order": r.order,
            "ok": report.ok,
            "results": [vars(x) for x in report.results],
        }, ensure_ascii=False), file=out)
    else:
        print(f"laws for {report.ring}  order {r.order}", file=out)
        for x in report.results:
            print(f"  {x.law:<4} {x.status:<4}  {x.statement}  [{x.detail}]", file=out)
    for x in report.failures:
        print(f"LawFailure {x.law} on {report.ring}: {x.detail}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_survey(args, cfg, out):
    if args.max_order > cfg.order_cap:
        raise _Fail(EXIT_BUILD, f"max order {args.max_order} exceeds order cap {cfg.order_cap}")
    stats = {}
    try:
        for _, rec in run_survey(args.max_order, cache_path=cfg.cache_path,
                                 jobs=cfg.parallelism, cap=cfg.order_cap,
                                 depth=args.depth, stats=stats):
            print(dumps(rec) if cfg.output == "json" else render_summary(rec), file=out)
    except CacheWriteError as exc:
        raise _Fail(EXIT_BUILD, f"cache error: {exc}") from exc
    print(f"{stats['computed']} computed, {stats['cached']} from cache", file=sys.stderr)
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--order-cap", type=int, default=ORDER_CAP, metavar="N")
    common.add_argument("--jobs", type=int, default=1, metavar="N")

    p = argparse.ArgumentParser(prog="ringlab", parents=[common],
                                description="Clean / nil-clean classification of finite rings.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", parents=[common], help="decide every ring class")
    s.add_argument("expr")
    s.add_argument("--timings", action="store_true", help="report stage timings")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("element", parents=[common], help="decompositions of one element")
    s.add_argument("expr")
    s.add_argument("id", type=int)
    s.set_defaults(func=cmd_element)

    s = sub.add_parser("table1", parents=[common], help="reproduce the reference 4x5 grid")
    s.set_defaults(func=cmd_table1)

    s = sub.add_parser("laws", parents=[common], help="run the law suite on one ring")
    s.add_argument("expr")
    s.set_defaults(func=cmd_laws)

    s = sub.add_parser("survey", parents=[common], help="classify all small expressions")
    s.add_argument("--max-order", type=int, required=True, metavar="N")
    s.add_argument("--cache", metavar="PATH", help="JSONL cache (default: $RINGLAB_CACHE)")
    s.add_argument("--depth", type=int, default=2, help="constructor nesting depth")
    s.set_defaults(func=cmd_survey)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        cfg = CliConfig(order_cap=args.order_cap,
                        output="json" if args.json else "text",
                        cache_path=default_cache_path(getattr(args, "cache", None)),
                        parallelism=args.jobs)
    except ValueError as exc:
        print(f"ringlab: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args, cfg, out)
    except _Fail as exc:
        print(f"ringlab: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())

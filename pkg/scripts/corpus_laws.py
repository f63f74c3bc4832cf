"""Run the law suite over the shipped corpus and print a status matrix."""

import argparse
import sys
import time

from ringlab.corpus import CORPUS
from ringlab.expr import build
from ringlab.laws import FAIL, LAW_STATEMENTS, check_laws

SYMBOL = {"pass": ".", "fail": "F", "skip": "-"}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("exprs", nargs="*", default=list(CORPUS))
    args = ap.parse_args()
    laws = list(LAW_STATEMENTS)
    print(f"{'ring':<22} {'order':>5}  " + " ".join(f"{x:>3}" for x in laws) + "   secs")
    failures = []
    for expr in args.exprs:
        t0 = time.perf_counter()
        r = build(expr)
        rep = check_laws(r)
        dt = time.perf_counter() - t0
        cells = " ".join(f"{SYMBOL[x.status]:>3}" for x in rep.results)
        print(f"{expr:<22} {r.order:>5}  {cells}  {dt:5.1f}")
        failures += [(expr, x) for x in rep.results if x.status == FAIL]
    for expr, x in failures:
        print(f"FAIL {x.law} {expr}: {x.detail}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

"""Print the 4x5 classification grid and the witness behind every false cell."""

import sys
import time

from ringlab.classes import TABLE_CLASSES, class_profile
from ringlab.cli import TABLE1, table1_rows
from ringlab.expr import build
from ringlab.record import mark


def main():
    t0 = time.perf_counter()
    rows, bad = table1_rows()
    elapsed = time.perf_counter() - t0
    print(f"{'':<8}" + "".join(f"{c:>7}" for c in TABLE_CLASSES))
    for expr, got in rows:
        print(f"{expr:<8}" + "".join(f"{mark(g):>7}" for g in got))
    print()
    for expr, _ in TABLE1:
        prof = class_profile(build(expr))
        for c in TABLE_CLASSES:
            w = prof.witnesses.get(c)
            if w is not None:
                print(f"{expr:<8} {c:<6} {w.label}: {w.detail}")
    print(f"\n{20 - len(bad)}/20 cells match, {elapsed:.2f} s")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())

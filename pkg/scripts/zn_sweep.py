"""Z_n sweep: CSNC should hold exactly when n is a power of two."""

import argparse

import numpy as np

from ringlab.builders import make_zn
from ringlab.classes import class_profile, csnc_deciders


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=128)
    args = ap.parse_args()
    ns = np.arange(1, args.max_n + 1)
    csnc = np.array([class_profile(make_zn(int(n)))["CSNC"] for n in ns])
    pow2 = (ns & (ns - 1)) == 0
    agree = np.array([len(set(csnc_deciders(make_zn(int(n))).values())) == 1 for n in ns])
    print("CSNC n:", " ".join(map(str, ns[csnc])))
    print(f"mismatches vs powers of two: {ns[csnc != pow2].tolist()}")
    print(f"decider disagreements: {ns[~agree].tolist()}")


if __name__ == "__main__":
    main()

"""Regenerate the bundled Cayley-table assets in src/ringlab/data/.

F4.ring : GF(4) = Z_2[x]/(x^2 + x + 1), element id = 2*c1 + c0 for c1*x + c0.
S3.group: symmetric group on 3 points, permutations in lexicographic order.
"""

from pathlib import Path

import numpy as np

from ringlab.core import validate_tables, write_ring_table
from ringlab.groups import symmetric_group_table, verify_group

DATA = Path(__file__).resolve().parents[1] / "src" / "ringlab" / "data"


def poly_mul_mod2(a, b, modulus=0b111, degree=2):
    out = 0
    for i in range(degree):
        if (b >> i) & 1:
            out ^= a << i
    for i in range(2 * degree - 2, degree - 1, -1):
        if (out >> i) & 1:
            out ^= modulus << (i - degree)
    return out


def gf4_tables():
    add = np.array([[a ^ b for b in range(4)] for a in range(4)])
    mul = np.array([[poly_mul_mod2(a, b) for b in range(4)] for a in range(4)])
    return add, mul


def main():
    f4 = validate_tables(*gf4_tables())
    write_ring_table(f4, DATA / "F4.ring")
    s3 = symmetric_group_table(3)
    verify_group(s3)
    with open(DATA / "S3.group", "w") as fh:
        fh.write("order 6\n")
        for row in s3:
            fh.write(" ".join(map(str, row)) + "\n")
    print("wrote", DATA / "F4.ring", DATA / "S3.group")


if __name__ == "__main__":
    main()

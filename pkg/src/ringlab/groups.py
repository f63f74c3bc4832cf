"""Finite groups on element ids ``0..order-1`` (identity discovered or given)."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

import numpy as np

from .core import _read_blocks, check_cap
from .errors import AxiomViolation

BUNDLED_GROUPS = ("S3",)


class FiniteGroup:
    def __init__(self, table, identity, *, labels=None, name="G"):
        self.table = np.asarray(table, dtype=np.int64)
        self.order = self.table.shape[0]
        self.identity = int(identity)
        self._labels = labels
        self.name = name

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"

    def op(self, g, h):
        return int(self.table[g, h])

    def label(self, g):
        if self._labels is None:
            return "1" if g == self.identity else f"g{g}"
        return self._labels(int(g))

    def element_order(self, g):
        k, x = 1, int(g)
        while x != self.identity:
            x = self.op(x, g)
            k += 1
        return k

    def is_abelian(self):
        return bool((self.table == self.table.T).all())

    def is_two_group(self):
        n = self.order
        return n & (n - 1) == 0


def verify_group(table):
    """Exhaustive associativity/identity/inverse scan; returns the identity."""
    T = np.asarray(table, dtype=np.int64)
    if T.ndim != 2 or T.shape[0] != T.shape[1]:
        raise AxiomViolation("square table")
    n = T.shape[0]
    if T.min() < 0 or T.max() >= n:
        raise AxiomViolation("closure")
    idx = np.arange(n)
    ident = np.flatnonzero((T == idx[None, :]).all(axis=1) & (T == idx[:, None]).all(axis=0))
    if len(ident) == 0:
        raise AxiomViolation("group identity")
    e = int(ident[0])
    for g in range(n):
        bad = T[T[g]] != T[g][T]
        if bad.any():
            h, k = np.argwhere(bad)[0]
            raise AxiomViolation("group associativity", (g, h, k))
    no_inv = ~((T == e).any(axis=1) & (T == e).any(axis=0))
    if no_inv.any():
        raise AxiomViolation("group inverse", (int(np.argmax(no_inv)),))
    return e


def cyclic_group(n):
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    check_cap(n)
    idx = np.arange(n)

    def label(g):
        return "1" if g == 0 else ("g" if g == 1 else f"g^{g}")

    return FiniteGroup((idx[:, None] + idx[None, :]) % n, 0, labels=label, name=f"C{n}")


def group_product(groups):
    """Direct product; ids are mixed-radix, first factor most significant."""
    groups = list(groups)
    if len(groups) == 1:
        return groups[0]
    order = 1
    for g in groups:
        order *= g.order
    check_cap(order)
    radices = [g.order for g in groups]
    idx = np.arange(order)
    digits = _digits(idx, radices)
    table = np.zeros((order, order), dtype=np.int64)
    for g, d in zip(groups, digits):
        table = table * g.order + g.table[d[:, None], d[None, :]]
    ident = 0
    for g in groups:
        ident = ident * g.order + g.identity

    def label(x):
        ds = [int(d[x]) for d in digits]
        return "(" + ",".join(g.label(v) for g, v in zip(groups, ds)) + ")"

    name = "x".join(g.name for g in groups)
    return FiniteGroup(table, ident, labels=label, name=name)


def _digits(a, radices):
    out = []
    for r in reversed(radices):
        out.append(a % r)
        a = a // r
    return out[::-1]


def read_group_table(path, *, name=None):
    (T,) = _read_blocks(path, 1)
    check_cap(T.shape[0])
    e = verify_group(T)
    return FiniteGroup(T, e, name=name or Path(path).stem)


def load_group(path_or_name):
    """Read a group table file, falling back to the bundled assets by name."""
    p = Path(path_or_name)
    if p.is_file():
        return read_group_table(p, name=str(path_or_name))
    if path_or_name in BUNDLED_GROUPS:
        ref = resources.files("ringlab.data").joinpath(f"{path_or_name}.group")
        with resources.as_file(ref) as fp:
            return read_group_table(fp, name=path_or_name)
    raise FileNotFoundError(f"no group table at {path_or_name!r}")


def symmetric_group_table(k):
    """Cayley table of S_k on permutations in lexicographic order."""
    from itertools import permutations

    perms = list(permutations(range(k)))
    pos = {p: i for i, p in enumerate(perms)}
    # (p*q)(i) = p(q(i))
    return np.array([[pos[tuple(p[q[i]] for i in range(k))] for q in perms] for p in perms])

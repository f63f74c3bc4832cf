"""Ring-expression DSL: AST, recursive-descent parser, canonical printer, builder.

Grammar (whitespace-insensitive)::

    expr   := term ("x" term)*
    term   := "Z" int | "M" int "(" expr ")" | "T" int "(" expr ")"
            | "corner(" expr "," int ")" | "quot(" expr "," int ("," int)* ")"
            | "GR(" expr "," grp ")" | "Ks(" expr "," int ")"
            | "FT(" expr "," expr "," bimod ")" | "table(" path ")"
    grp    := gterm ("x" gterm)*
    gterm  := "C" int | "gtable(" path ")"
    bimod  := "0" | "R" | "S"

``FT(R,S,0)`` is the zero bimodule; ``R`` takes M = R (right action by
integers when S is some Z_m, by multiplication when S = R); ``S`` takes
M = S symmetrically.  Product factors are kept sorted by their printed
form, so the printer is canonical and ``parse(print(x)) == x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import builders as B
from .core import read_ring_table
from .errors import BimoduleAxiomViolation, RingError
from .groups import cyclic_group, group_product, load_group


class ExprSyntaxError(ValueError):
    """Malformed ring expression; ``offset`` is a byte offset into the input."""

    def __init__(self, message, offset):
        self.offset = offset
        super().__init__(f"{message} at byte {offset}")


class UnknownConstructor(ExprSyntaxError):
    pass


# -- AST -------------------------------------------------------------------


@dataclass(frozen=True)
class Zn:
    n: int


@dataclass(frozen=True)
class Table:
    path: str


@dataclass(frozen=True)
class Prod:
    factors: tuple

    def __post_init__(self):
        flat = []
        for f in self.factors:
            flat.extend(f.factors if isinstance(f, Prod) else [f])
        if len(flat) < 2:
            raise ValueError("a product needs at least two factors")
        object.__setattr__(self, "factors", tuple(sorted(flat, key=to_string)))


@dataclass(frozen=True)
class Mat:
    k: int
    base: object


@dataclass(frozen=True)
class Tri:
    k: int
    base: object


@dataclass(frozen=True)
class Corner:
    base: object
    idem: int


@dataclass(frozen=True)
class Quot:
    base: object
    gens: tuple

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(sorted(set(self.gens))))


@dataclass(frozen=True)
class GroupRing:
    base: object
    group: object


@dataclass(frozen=True)
class Ks:
    base: object
    s: int


@dataclass(frozen=True)
class FormalTri:
    left: object
    right: object
    bimodule: str


@dataclass(frozen=True)
class Cn:
    n: int


@dataclass(frozen=True)
class GProd:
    factors: tuple

    def __post_init__(self):
        flat = []
        for f in self.factors:
            flat.extend(f.factors if isinstance(f, GProd) else [f])
        if len(flat) < 2:
            raise ValueError("a product needs at least two factors")
        object.__setattr__(self, "factors", tuple(sorted(flat, key=to_string)))


@dataclass(frozen=True)
class GTable:
    path: str


BIMODULES = ("0", "R", "S")


def to_string(node) -> str:
    """Canonical printed form (no whitespace, sorted product factors)."""
    if isinstance(node, Zn):
        return f"Z{node.n}"
    if isinstance(node, Table):
        return f"table({node.path})"
    if isinstance(node, (Prod, GProd)):
        return "x".join(to_string(f) for f in node.factors)
    if isinstance(node, Mat):
        return f"M{node.k}({to_string(node.base)})"
    if isinstance(node, Tri):
        return f"T{node.k}({to_string(node.base)})"
    if isinstance(node, Corner):
        return f"corner({to_string(node.base)},{node.idem})"
    if isinstance(node, Quot):
        return f"quot({to_string(node.base)},{','.join(map(str, node.gens))})"
    if isinstance(node, GroupRing):
        return f"GR({to_string(node.base)},{to_string(node.group)})"
    if isinstance(node, Ks):
        return f"Ks({to_string(node.base)},{node.s})"
    if isinstance(node, FormalTri):
        return f"FT({to_string(node.left)},{to_string(node.right)},{node.bimodule})"
    if isinstance(node, Cn):
        return f"C{node.n}"
    if isinstance(node, GTable):
        return f"gtable({node.path})"
    raise TypeError(f"not a ring expression: {node!r}")


# -- parser -----------------------------------------------------------------


class _Parser:
    def __init__(self, text):
        self.text = text
        self.i = 0

    def error(self, msg, at=None, cls=ExprSyntaxError):
        at = self.i if at is None else at
        raise cls(msg, len(self.text[:at].encode("utf-8")))

    def skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self):
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            got = repr(self.peek()) if self.peek() else "end of input"
            self.error(f"expected {ch!r}, found {got}")
        self.i += 1

    def word(self):
        self.skip()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isalpha():
            self.i += 1
        return self.text[start:self.i], start

    def integer(self, minimum=0):
        self.skip()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if start == self.i:
            self.error("expected an integer")
        value = int(self.text[start:self.i])
        if value < minimum:
            self.error(f"integer must be at least {minimum}", at=start)
        return value

    def path(self):
        self.skip()
        start = self.i
        while self.i < len(self.text) and self.text[self.i] not in "),":
            self.i += 1
        p = self.text[start:self.i].strip()
        if not p:
            self.error("expected a file path", at=start)
        return p

    def parse(self):
        node = self.expr()
        if self.peek():
            self.error(f"unexpected character {self.peek()!r}")
        return node

    def expr(self):
        factors = [self.term()]
        while self.peek() == "x":
            self.i += 1
            factors.append(self.term())
        return factors[0] if len(factors) == 1 else Prod(tuple(factors))

    def term(self):
        name, start = self.word()
        if not name:
            got = repr(self.peek()) if self.peek() else "end of input"
            self.error(f"expected a ring constructor, found {got}")
        if name == "Z":
            return Zn(self.integer())
        if name in ("M", "T"):
            k = self.integer(minimum=1)
            self.expect("(")
            base = self.expr()
            self.expect(")")
            return Mat(k, base) if name == "M" else Tri(k, base)
        if name == "table":
            self.expect("(")
            p = self.path()
            self.expect(")")
            return Table(p)
        if name == "corner":
            self.expect("(")
            base = self.expr()
            self.expect(",")
            e = self.integer()
            self.expect(")")
            return Corner(base, e)
        if name == "quot":
            self.expect("(")
            base = self.expr()
            gens = []
            while self.peek() == ",":
                self.i += 1
                gens.append(self.integer())
            if not gens:
                self.error("quot needs at least one generator")
            self.expect(")")
            return Quot(base, tuple(gens))
        if name == "GR":
            self.expect("(")
            base = self.expr()
            self.expect(",")
            g = self.group()
            self.expect(")")
            return GroupRing(base, g)
        if name == "Ks":
            self.expect("(")
            base = self.expr()
            self.expect(",")
            s = self.integer()
            self.expect(")")
            return Ks(base, s)
        if name == "FT":
            self.expect("(")
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect(",")
            self.skip()
            at = self.i
            tok = self.text[self.i:self.i + 1]
            if tok not in BIMODULES:
                self.error("bimodule must be one of 0, R, S", at=at)
            self.i += 1
            self.expect(")")
            return FormalTri(left, right, tok)
        self.error(f"unknown ring constructor {name!r}", at=start, cls=UnknownConstructor)

    def group(self):
        factors = [self.gterm()]
        while self.peek() == "x":
            self.i += 1
            factors.append(self.gterm())
        return factors[0] if len(factors) == 1 else GProd(tuple(factors))

    def gterm(self):
        name, start = self.word()
        if name == "C":
            return Cn(self.integer(minimum=1))
        if name == "gtable":
            self.expect("(")
            p = self.path()
            self.expect(")")
            return GTable(p)
        if not name:
            self.error("expected a group constructor")
        self.error(f"unknown group constructor {name!r}", at=start, cls=UnknownConstructor)


def parse_ring_expr(text: str):
    return _Parser(text).parse()


def canonical(text: str) -> str:
    return to_string(parse_ring_expr(text))


# -- builder ------------------------------------------------------------------

BUNDLED_RINGS = ("F4",)


def load_ring_table(path):
    p = Path(path)
    if p.is_file():
        return read_ring_table(p)
    if path in BUNDLED_RINGS:
        ref = resources.files("ringlab.data").joinpath(f"{path}.ring")
        with resources.as_file(ref) as fp:
            return read_ring_table(fp)
    raise FileNotFoundError(f"no ring table at {path!r}")


def make_group(node, *, cap=None):
    if isinstance(node, Cn):
        return cyclic_group(node.n)
    if isinstance(node, GProd):
        return group_product([make_group(f, cap=cap) for f in node.factors])
    if isinstance(node, GTable):
        return load_group(node.path)
    raise TypeError(f"not a group expression: {node!r}")


def build(node, *, cap=None):
    """Construct the ring described by ``node`` (an AST or a string)."""
    if isinstance(node, str):
        node = parse_ring_expr(node)
    r = _build(node, cap)
    r.source = node
    return r


def _build(node, cap):
    if isinstance(node, Zn):
        return B.make_zn(node.n, cap=cap)
    if isinstance(node, Table):
        return load_ring_table(node.path)
    if isinstance(node, Prod):
        return B.direct_product([build(f, cap=cap) for f in node.factors], cap=cap)
    if isinstance(node, Mat):
        return B.matrix_ring(build(node.base, cap=cap), node.k, cap=cap)
    if isinstance(node, Tri):
        return B.triangular_ring(build(node.base, cap=cap), node.k, cap=cap)
    if isinstance(node, Corner):
        r = build(node.base, cap=cap)
        _in_range(r, node.idem)
        return B.corner_ring(r, node.idem)
    if isinstance(node, Quot):
        r = build(node.base, cap=cap)
        for g in node.gens:
            _in_range(r, g)
        return B.quotient_ring(r, B.ideal_closure(r, node.gens))
    if isinstance(node, GroupRing):
        return B.group_ring(build(node.base, cap=cap), make_group(node.group, cap=cap), cap=cap)
    if isinstance(node, Ks):
        r = build(node.base, cap=cap)
        _in_range(r, node.s)
        return B.ks_ring(r, node.s, cap=cap)
    if isinstance(node, FormalTri):
        return _build_formal(node, cap)
    raise TypeError(f"not a ring expression: {node!r}")


def _in_range(r, a):
    if not 0 <= a < r.order:
        raise RingError(f"element id {a} outside 0..{r.order - 1}")


def _build_formal(node, cap):
    rR = build(node.left, cap=cap)
    same = node.left == node.right
    rS = rR if same else build(node.right, cap=cap)
    if node.bimodule == "0":
        m = B.zero_bimodule(rR, rS)
    elif same:
        m = B.regular_bimodule(rR)
    elif node.bimodule == "R":
        m = B.integer_right_bimodule(rR, rS)
    elif node.bimodule == "S":
        m = B.integer_left_bimodule(rR, rS)
    else:
        raise BimoduleAxiomViolation(f"unknown bimodule {node.bimodule!r}")
    return B.formal_triangular(rR, rS, m, cap=cap)

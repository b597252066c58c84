"""Surface syntax for homeomorphisms.

::

    expr    := atom { "." atom }
    atom    := base [ "^-1" ]
    base    := "id" | "conj"
             | "translate(" complex ")" | "rotate(" real ")" | "scale(" real ")"
             | "bump(center=" complex ",rho=" real ",delta=" real ",eta=" real ")"
             | "planebump(center=" complex ",rho=" real ",delta=" real ",eta=" real ")"
             | "(" expr ")"
    complex := real [ ("+" | "-") ureal "i" ]

``f . g`` is ``f o g`` (``g`` applied first) and chains fold to the left.
``bump`` is the cell bump ``h_delta`` with the identity chart; ``planebump``
is the same radial bump transported to the plane through ``u``. Whitespace
between tokens is ignored.
"""

from __future__ import annotations

import math
import re

from .errors import DomainError, PlaneHomeoError
from .homeo import (
    Cell2,
    CellBump,
    Compose,
    Conjugation,
    DiskConjugate,
    Identity,
    Inverse,
    RadialBump,
    Rotation,
    Scaling,
    Translation,
)

_REAL = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")
_UREAL = re.compile(r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")
_WORD = re.compile(r"[A-Za-z_]+")

BASE_TOKENS = ("(", "bump", "conj", "id", "planebump", "rotate", "scale", "translate")


class ParseError(PlaneHomeoError, ValueError):
    """Syntax error; ``offset`` is a byte offset into the UTF-8 source."""

    def __init__(self, message, offset, expected=()):
        self.message = message
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        exp = ", ".join(repr(e) for e in self.expected)
        super().__init__(f"{message} at byte {offset}" + (f"; expected one of {exp}" if exp else ""))


class ExprDomainError(DomainError):
    def __init__(self, message, offset):
        self.message = message
        self.offset = offset
        super().__init__(f"{message} (at byte {offset})")


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def byte_offset(self, pos=None):
        pos = self.pos if pos is None else pos
        return len(self.text[:pos].encode("utf-8"))

    def fail(self, message, expected, pos=None):
        raise ParseError(message, self.byte_offset(pos), expected)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, lit):
        self.skip()
        return self.text.startswith(lit, self.pos)

    def accept(self, lit):
        if self.peek(lit):
            self.pos += len(lit)
            return True
        return False

    def expect(self, lit):
        if not self.accept(lit):
            self.fail(self._found(), (lit,))

    def _found(self):
        if self.pos >= len(self.text):
            return "unexpected end of input"
        return f"unexpected {self.text[self.pos]!r}"

    def number(self, pattern=_REAL, what="number"):
        self.skip()
        m = pattern.match(self.text, self.pos)
        if not m:
            self.fail(self._found(), (what,))
        self.pos = m.end()
        return float(m.group())

    def complex_literal(self):
        re_part = self.number()
        self.skip()
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            sign = -1.0 if self.text[self.pos] == "-" else 1.0
            self.pos += 1
            im = self.number(_UREAL, "unsigned number")
            self.expect("i")
            return complex(re_part, sign * im)
        return complex(re_part, 0.0)

    # expr := atom { "." atom }
    def expr(self):
        node = self.atom()
        while self.accept("."):
            node = Compose(node, self.atom())
        return node

    def atom(self):
        node = self.base()
        if self.accept("^-1"):
            node = Inverse(node)
        return node

    def base(self):
        self.skip()
        start = self.pos
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        m = _WORD.match(self.text, self.pos)
        word = m.group() if m else None
        if word not in BASE_TOKENS:
            self.fail(self._found() if word is None else f"unknown name {word!r}", BASE_TOKENS)
        self.pos = m.end()
        try:
            return self._build(word)
        except DomainError as exc:
            if isinstance(exc, ExprDomainError):
                raise
            raise ExprDomainError(str(exc), self.byte_offset(start)) from None

    def _build(self, word):
        if word == "id":
            return Identity()
        if word == "conj":
            return Conjugation()
        self.expect("(")
        if word == "translate":
            val = self.complex_literal()
            self.expect(")")
            return Translation(val)
        if word in ("rotate", "scale"):
            val = self.number()
            self.expect(")")
            return Rotation(val) if word == "rotate" else Scaling(val)
        params = {}
        for i, key in enumerate(("center", "rho", "delta", "eta")):
            if i:
                self.expect(",")
            self.expect(key)
            self.expect("=")
            params[key] = self.complex_literal() if key == "center" else self.number()
        self.expect(")")
        if word == "bump":
            if not 0.0 <= params["delta"] <= params["eta"]:
                raise DomainError(f"bump delta must lie in [0, eta], got {params['delta']!r}")
            cell = Cell2(Identity(), params["center"], params["rho"], params["eta"])
            return CellBump(cell, params["delta"])
        return DiskConjugate(RadialBump(params["center"], params["rho"], params["delta"], params["eta"]))


def parse_expr(text):
    """Parse an expression into a :class:`~planehomeo.homeo.Homeo` tree."""
    p = _Parser(text)
    node = p.expr()
    p.skip()
    if p.pos != len(p.text):
        p.fail(p._found(), (".", "^-1", "end of input"))
    return node


def parse_complex(text):
    p = _Parser(text)
    val = p.complex_literal()
    p.skip()
    if p.pos != len(p.text):
        p.fail(p._found(), ("end of input",))
    return val


# ----------------------------------------------------------------------- print

class NotExpressible(PlaneHomeoError, ValueError):
    """The tree uses nodes that have no surface syntax."""


def format_real(x):
    x = float(x)
    if not math.isfinite(x):
        raise NotExpressible(f"non-finite number {x!r}")
    return repr(x)


def format_complex(z):
    z = complex(z)
    if z.imag == 0.0 and math.copysign(1.0, z.imag) > 0:
        return format_real(z.real)
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    return f"{format_real(z.real)}{sign}{format_real(abs(z.imag))}i"


def _bump_args(alpha, rho, delta, eta):
    return (
        f"center={format_complex(alpha)},rho={format_real(rho)},"
        f"delta={format_real(delta)},eta={format_real(eta)}"
    )


def to_text(h):
    """Print ``h`` in the surface syntax; ``parse_expr(to_text(h)) == h``."""
    if isinstance(h, Compose):
        right = to_text(h.right)
        if isinstance(h.right, Compose):
            right = f"({right})"
        return f"{to_text(h.left)} . {right}"
    if isinstance(h, Inverse):
        inner = to_text(h.child)
        if isinstance(h.child, (Compose, Inverse)):
            inner = f"({inner})"
        return f"{inner}^-1"
    if isinstance(h, Identity):
        return "id"
    if isinstance(h, Conjugation):
        return "conj"
    if isinstance(h, Translation):
        return f"translate({format_complex(h.a)})"
    if isinstance(h, Rotation):
        return f"rotate({format_real(h.theta)})"
    if isinstance(h, Scaling):
        return f"scale({format_real(h.s)})"
    if isinstance(h, CellBump) and isinstance(h.cell.chart, Identity):
        c = h.cell
        return f"bump({_bump_args(c.alpha, c.rho, h.delta, c.eta)})"
    if isinstance(h, DiskConjugate) and isinstance(h.disk_map, RadialBump):
        b = h.disk_map
        return f"planebump({_bump_args(b.alpha, b.rho, b.delta, b.eta)})"
    raise NotExpressible(f"no surface syntax for {type(h).__name__} node")

"""Reading and writing polynomials, module elements and system files.

Polynomials use ordinary infix text such as ``x^3*y - 1/2*z``.  Module
elements additionally use basis symbols ``e_1, e_2, ...`` (1-based), e.g.
``z*e_1 - x^2*e_2``.

A system file is UTF-8 text made of ``key: value`` header lines followed by a
``polys:`` block with one polynomial per line; ``#`` starts a comment::

    field: QQ
    vars: x, y, z
    order: grlex
    polys:
      x^3*y - z
      x*y*z - 2*y
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .ring import GF, QQ, ModInt, Polynomial, PolynomialRing, TermOrder


class ParseError(ValueError):
    """Malformed input; ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


# --------------------------------------------------------------------------
# formatting
# --------------------------------------------------------------------------

def _format_coeff(c) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return str(c)


def _join_terms(pieces) -> str:
    """``pieces`` are (coefficient, monomial-text or '') pairs, largest first."""
    if not pieces:
        return "0"
    out = []
    for k, (c, mono) in enumerate(pieces):
        negative = isinstance(c, Fraction) and c < 0
        mag = -c if negative else c
        if mono:
            body = mono if mag == 1 else f"{_format_coeff(mag)}*{mono}"
        else:
            body = _format_coeff(mag)
        if k == 0:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)


def format_polynomial(f: Polynomial) -> str:
    ring = f.ring
    pieces = []
    for m in f.monomials():
        mono = ring.format_monomial(m)
        pieces.append((f.terms[m], "" if mono == "1" else mono))
    return _join_terms(pieces)


def format_module_monomial(mm, ring: PolynomialRing) -> str:
    i, alpha = mm
    mono = ring.format_monomial(alpha)
    return f"e_{i + 1}" if mono == "1" else f"{mono}*e_{i + 1}"


def format_module_element(terms: dict, ring: PolynomialRing, order=None) -> str:
    if order is None:
        keys = sorted(terms, key=lambda mm: (mm[0], ring.key(mm[1])), reverse=True)
        keys.sort(key=lambda mm: mm[0])
    else:
        keys = sorted(terms, key=order.key, reverse=True)
    return _join_terms([(terms[mm], format_module_monomial(mm, ring)) for mm in keys])


# --------------------------------------------------------------------------
# expression parsing
# --------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")
_BASIS = re.compile(r"e_(\d+)$")


class _Parser:
    def __init__(self, text, ring, allow_basis, line, col0):
        self.text = text
        self.ring = ring
        self.allow_basis = allow_basis
        self.line = line
        self.col0 = col0
        self.tokens = self._tokenize()
        self.pos = 0
        self.index = {v: i for i, v in enumerate(ring.variables)}

    def error(self, msg, offset=None):
        if offset is None:
            offset = self.tokens[self.pos][2] if self.pos < len(self.tokens) else len(self.text)
        raise ParseError(msg, self.line, self.col0 + offset)

    def _tokenize(self):
        out = []
        i = 0
        text = self.text
        while i < len(text):
            if text[i].isspace():
                i += 1
                continue
            m = _TOKEN.match(text, i)
            if not m:
                raise ParseError(f"unexpected character {text[i]!r}", self.line, self.col0 + i)
            start = m.start(m.lastindex)
            num, name, op = m.groups()
            if num is not None:
                out.append(("num", int(num), start))
            elif name is not None:
                out.append(("name", name, start))
            else:
                out.append(("op", "^" if op == "**" else op, start))
            i = m.end()
        return out

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self):
        if not self.tokens:
            self.error("empty expression", 0)
        value = self.expr()
        if self.peek() is not None:
            self.error(f"unexpected token {self.peek()[1]!r}")
        return value

    # values are (kind, payload): ("poly", dict) or ("mod", dict)
    def expr(self):
        value = self.term()
        while (tok := self.peek()) is not None and tok[0] == "op" and tok[1] in "+-":
            self.take()
            rhs = self.term()
            value = self.combine(value, rhs, 1 if tok[1] == "+" else -1, tok)
        return value

    def term(self):
        value = self.unary()
        while (tok := self.peek()) is not None and tok[0] == "op" and tok[1] in "*/":
            self.take()
            rhs = self.unary()
            if tok[1] == "*":
                value = self.multiply(value, rhs, tok)
            else:
                value = self.divide(value, rhs, tok)
        return value

    def unary(self):
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] in "+-":
            self.take()
            value = self.unary()
            if tok[1] == "-":
                kind, d = value
                value = (kind, {k: -c for k, c in d.items()})
            return value
        return self.power()

    def power(self):
        base = self.atom()
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] == "^":
            self.take()
            exp = self.take()
            if exp is None or exp[0] != "num":
                self.error("exponent must be a non-negative integer",
                           exp[2] if exp else None)
            if base[0] == "mod" and exp[1] != 1:
                self.error("cannot raise a basis element to a power", exp[2])
            result = ("poly", {self.ring.zero_mono: self.ring.field.one})
            for _ in range(exp[1]):
                result = self.multiply(result, base, exp)
            return result
        return base

    def atom(self):
        tok = self.take()
        if tok is None:
            self.error("unexpected end of expression", len(self.text))
        kind, val, off = tok
        field = self.ring.field
        if kind == "num":
            c = field(val)
            return ("poly", {self.ring.zero_mono: c} if c else {})
        if kind == "name":
            if val in self.index:
                e = [0] * self.ring.nvars
                e[self.index[val]] = 1
                return ("poly", {tuple(e): field.one})
            m = _BASIS.match(val)
            if m and self.allow_basis:
                i = int(m.group(1))
                if i < 1:
                    self.error("basis indices start at e_1", off)
                return ("mod", {(i - 1, self.ring.zero_mono): field.one})
            self.error(f"unknown symbol {val!r}", off)
        if val == "(":
            value = self.expr()
            close = self.take()
            if close is None or close[1] != ")":
                self.error("expected ')'", close[2] if close else len(self.text))
            return value
        self.error(f"unexpected token {val!r}", off)

    def combine(self, a, b, sign, tok):
        if a[0] != b[0]:
            if not a[1] or not b[1]:
                kind = a[0] if a[1] else b[0]
            else:
                self.error("cannot add a polynomial and a module element", tok[2])
        else:
            kind = a[0]
        out = dict(a[1])
        for k, c in b[1].items():
            v = out.get(k)
            v = sign * c if v is None else v + sign * c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return (kind, out)

    def multiply(self, a, b, tok):
        if a[0] == "mod" and b[0] == "mod":
            self.error("cannot multiply two module elements", tok[2])
        if a[0] == "mod":
            a, b = b, a
        out = {}
        for ma, ca in a[1].items():
            for kb, cb in b[1].items():
                if b[0] == "mod":
                    k = (kb[0], tuple(x + y for x, y in zip(ma, kb[1])))
                else:
                    k = tuple(x + y for x, y in zip(ma, kb))
                v = out.get(k)
                v = ca * cb if v is None else v + ca * cb
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return (b[0] if b[0] == "mod" else a[0], out)

    def divide(self, a, b, tok):
        if b[0] != "poly" or set(b[1]) - {self.ring.zero_mono}:
            self.error("can only divide by a nonzero constant", tok[2])
        c = b[1].get(self.ring.zero_mono)
        if not c:
            self.error("division by zero", tok[2])
        return (a[0], {k: v / c for k, v in a[1].items()})


def parse_polynomial(text: str, ring: PolynomialRing, line: int = 1, column: int = 1) -> Polynomial:
    kind, terms = _Parser(text, ring, False, line, column).parse()
    return Polynomial(ring, terms)


def parse_module_element(text: str, ring: PolynomialRing, line: int = 1, column: int = 1):
    """Parse ``text`` into a raw ``{(index, exps): coeff}`` dict (0-based indices)."""
    kind, terms = _Parser(text, ring, True, line, column).parse()
    if kind == "poly" and terms:
        raise ParseError("expected a module element (missing e_i)", line, column)
    return terms


def parse_module_monomial(text: str, ring: PolynomialRing):
    terms = parse_module_element(text, ring)
    if len(terms) != 1:
        raise ParseError(f"{text!r} is not a module monomial")
    (mm, c), = terms.items()
    if c != 1:
        raise ParseError(f"{text!r} is not a module monomial")
    return mm


# --------------------------------------------------------------------------
# system files
# --------------------------------------------------------------------------

@dataclass
class SystemFile:
    ring: PolynomialRing
    polys: list
    field_spec: str
    order_spec: str
    name: str | None = None


_WEIGHT = re.compile(r"weight\s*\(([^)]*)\)$")


def parse_field(spec: str, line: int = 1, column: int = 1):
    s = spec.strip()
    if s in ("QQ", "Q"):
        return QQ
    m = re.fullmatch(r"GF\(\s*(\d+)\s*\)", s)
    if m:
        try:
            return GF(int(m.group(1)))
        except ValueError as exc:
            raise ParseError(str(exc), line, column) from None
    raise ParseError(f"unsupported field {s!r} (use QQ or GF(p))", line, column)


def parse_order(spec: str, nvars: int, line: int = 1, column: int = 1) -> TermOrder:
    s = spec.strip()
    if s in ("lex", "grlex", "deglex", "grevlex", "degrevlex"):
        return TermOrder("grevlex" if s == "degrevlex" else s)
    m = _WEIGHT.fullmatch(s)
    if m:
        try:
            w = [int(x) for x in m.group(1).split(",")]
        except ValueError:
            raise ParseError(f"bad weight vector {m.group(1)!r}", line, column) from None
        if len(w) != nvars or any(x <= 0 for x in w):
            raise ParseError(f"weight vector must have {nvars} positive entries", line, column)
        return TermOrder("weight", w)
    raise ParseError(f"unsupported order spec {s!r}", line, column)


def parse_system(text: str, name: str | None = None) -> SystemFile:
    header = {}
    polys_lines = []
    in_polys = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        if not content.strip():
            continue
        if in_polys:
            col = len(content) - len(content.lstrip()) + 1
            polys_lines.append((content.strip(), lineno, col))
            continue
        if ":" not in content:
            raise ParseError("expected 'key: value'", lineno, 1)
        key, value = content.split(":", 1)
        key = key.strip().lower()
        col = content.index(":") + 2 + (len(value) - len(value.lstrip()))
        if key == "polys":
            in_polys = True
            if value.strip():
                polys_lines.append((value.strip(), lineno, col))
            continue
        if key not in ("field", "vars", "variables", "order"):
            raise ParseError(f"unknown header key {key!r}", lineno, 1)
        header["vars" if key == "variables" else key] = (value.strip(), lineno, col)
    for key in ("field", "vars", "order"):
        if key not in header:
            raise ParseError(f"missing header '{key}:'", 1, 1)
    field = parse_field(*header["field"])
    vtext, vline, vcol = header["vars"]
    variables = [v.strip() for v in vtext.split(",") if v.strip()]
    for v in variables:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v) or _BASIS.match(v):
            raise ParseError(f"invalid variable name {v!r}", vline, vcol)
    if len(set(variables)) != len(variables):
        raise ParseError("variables must be distinct", vline, vcol)
    otext, oline, ocol = header["order"]
    order = parse_order(otext, len(variables), oline, ocol)
    ring = PolynomialRing(variables, order, field)
    if not polys_lines:
        raise ParseError("no polynomials given", 1, 1)
    polys = []
    for body, lineno, col in polys_lines:
        f = parse_polynomial(body, ring, lineno, col)
        if not f.terms:
            raise ParseError("zero polynomial in input", lineno, col)
        polys.append(f)
    return SystemFile(ring, polys, header["field"][0], otext, name)


def format_system(ring: PolynomialRing, polys, order_spec: str | None = None) -> str:
    field = "QQ" if ring.field == QQ else f"GF({ring.field.p})"
    lines = [f"field: {field}", f"vars: {', '.join(ring.variables)}",
             f"order: {order_spec or repr(ring.order)}", "polys:"]
    lines += [f"  {f}" for f in polys]
    return "\n".join(lines) + "\n"


def coeff_text(c) -> str:
    if isinstance(c, ModInt):
        return str(c.v)
    return _format_coeff(c)

"""Text formats for fields, field elements, and Ore polynomials.

Grammar (shared by all polynomial inputs; whitespace is insignificant):

    expr    := term (("+" | "-") term)*
    term    := factor ("*" factor)*
    factor  := "-" factor | atom ["^" INT]
    atom    := INT | NAME | "(" expr ")"

Multiplication must be written with "*"; the factor order is preserved, which
matters because the indeterminates do not commute with coefficients.
Reserved names: ``t`` (field generator), ``x`` (univariate), ``x1``/``x2``
(bivariate).  Field specs look like ``GF(2^2; modulus = 1 + t + t^2)``; the
modulus may be omitted to pick the deterministic default.  Errors carry the
1-based column of the offending token.

Printing is handled by the value types themselves (`FieldElem.__str__`,
`OrePoly.text`, `BivarOrePoly.text`); parse(print(v)) == v on canonical forms.
"""

from __future__ import annotations

from .errors import ParseError
from .field import Automorphism, field_new
from .ore_bivar import BivarRing
from .ore_uni import OreRing

_SYMBOLS = "+-*^();="


def _tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _SYMBOLS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("INT", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("NAME", text[i:j], i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", column=i + 1)
    tokens.append(("END", None, n))
    return tokens


class _Parser:
    def __init__(self, text, names, const):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.names = names
        self.const = const

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", column=tok[2] + 1)
        return tok

    def parse_expr(self):
        value = self.parse_term()
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            rhs = self.parse_term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def parse_term(self):
        value = self.parse_factor()
        while self.peek()[0] == "*":
            self.next()
            value = value * self.parse_factor()
        return value

    def parse_factor(self):
        if self.peek()[0] == "-":
            self.next()
            return -self.parse_factor()
        value = self.parse_atom()
        if self.peek()[0] == "^":
            self.next()
            tok = self.expect("INT")
            value = value ** tok[1]
        return value

    def parse_atom(self):
        kind, val, pos = self.next()
        if kind == "INT":
            return self.const(val)
        if kind == "NAME":
            if val not in self.names:
                raise ParseError(f"unknown name {val!r}", column=pos + 1)
            return self.names[val]
        if kind == "(":
            value = self.parse_expr()
            self.expect(")")
            return value
        raise ParseError(f"unexpected token {val!r}", column=pos + 1)

    def finish(self, value):
        tok = self.peek()
        if tok[0] != "END":
            raise ParseError(f"trailing input {tok[1]!r}", column=tok[2] + 1)
        return value


def parse_element(text, ctx):
    """A field element written as a polynomial in t, e.g. ``t + 1``."""
    if ctx.m > 1:
        t_elem = ctx.elem(ctx.p)
    else:
        t_elem = ctx.from_int(-ctx.modulus[0])  # t is a root of the modulus
    parser = _Parser(text, {"t": t_elem}, ctx.from_int)
    return parser.finish(parser.parse_expr())


def parse_ore_poly(text, ring, var="x"):
    """A univariate skew polynomial, e.g. ``(t+1)*x^2 + t*x + 1``."""
    ctx = ring.ctx
    names = {var: ring.x(), "t": ring.constant(parse_element("t", ctx))}
    parser = _Parser(text, names, ring.constant)
    return parser.finish(parser.parse_expr())


def parse_bivar_poly(text, ring):
    """A bivariate Ore polynomial with reserved names x1, x2, t."""
    ctx = ring.ctx
    names = {
        "x1": ring.x1(),
        "x2": ring.x2(),
        "t": ring.constant(parse_element("t", ctx)),
    }
    parser = _Parser(text, names, ring.constant)
    return parser.finish(parser.parse_expr())


def parse_field_spec(text):
    """``GF(p)``, ``GF(p^m)`` or ``GF(p^m; modulus = c0 + c1*t + ... + t^m)``."""
    tokens = _tokenize(text)
    pos = 0

    def take(kind):
        nonlocal pos
        tok = tokens[pos]
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r} in field spec", column=tok[2] + 1)
        pos += 1
        return tok

    name = take("NAME")
    if name[1] != "GF":
        raise ParseError("field spec must start with GF", column=name[2] + 1)
    take("(")
    p = take("INT")[1]
    m = 1
    if tokens[pos][0] == "^":
        pos += 1
        m = take("INT")[1]
    modulus = None
    if tokens[pos][0] == ";":
        pos += 1
        key = take("NAME")
        if key[1] != "modulus":
            raise ParseError("expected 'modulus' after ';'", column=key[2] + 1)
        take("=")
        # the modulus is an ordinary polynomial over GF(p) in t
        depth = 0
        start = pos
        while tokens[pos][0] != "END" and not (tokens[pos][0] == ")" and depth == 0):
            if tokens[pos][0] == "(":
                depth += 1
            elif tokens[pos][0] == ")":
                depth -= 1
            pos += 1
        body = " ".join(_token_text(t) for t in tokens[start:pos])
        prime = field_new(p, 1)
        ring = OreRing(prime, Automorphism(prime, 0))
        parser = _Parser(body, {"t": ring.x()}, ring.constant)
        poly = parser.finish(parser.parse_expr())
        modulus = [c for c in poly.coeffs]
    take(")")
    tok = tokens[pos]
    if tok[0] != "END":
        raise ParseError(f"trailing input {tok[1]!r}", column=tok[2] + 1)
    return field_new(p, m, modulus=modulus)


def _token_text(tok):
    kind, val, _ = tok
    if kind in ("INT", "NAME"):
        return str(val)
    return kind


def make_rings(ctx, e1, e2):
    """The bivariate ring (and its inner ring) for Frobenius exponents e1, e2."""
    return BivarRing(ctx, Automorphism(ctx, e1), Automorphism(ctx, e2))

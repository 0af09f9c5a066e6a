"""Text grammar for polynomials and rational functions.

Grammar (whitespace ignored): integer literals, names matching
``[a-zA-Z][a-zA-Z0-9]*``, operators ``+ - * / ^`` and parentheses.  The same
grammar is used for input documents and for report output, e.g.
``(t^2-1)/(t-1)`` or ``(1/t)*x21``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .poly import Poly
from .ratfunc import RatFunc

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([a-zA-Z][a-zA-Z0-9]*)|([()+\-*/^]))")


def tokenize(text):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            rest = text[pos:].lstrip()
            if not rest:
                break
            raise ParseError(f"unexpected character {rest[0]!r}", pos)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), pos))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), pos))
        else:
            tokens.append(("op", m.group(3), pos))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    """Recursive descent over an evaluation context.

    The context supplies const(int), name(str), and the arithmetic, so the
    same parser produces RatFunc or MPoly values depending on use.
    """

    def __init__(self, tokens, ctx):
        self.tokens = tokens
        self.ctx = ctx
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.peek()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)
        self.advance()

    def parse(self):
        value = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected trailing input {val!r}", pos)
        return value

    def expr(self):
        value = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.advance()
                rhs = self.term()
                value = self.ctx.add(value, rhs) if val == "+" else self.ctx.sub(value, rhs)
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "*/":
                self.advance()
                rhs = self.factor()
                if val == "*":
                    value = self.ctx.mul(value, rhs)
                else:
                    value = self.ctx.div(value, rhs, pos)
            else:
                return value

    def factor(self):
        kind, val, pos = self.peek()
        if kind == "op" and val in "+-":
            self.advance()
            inner = self.factor()
            return inner if val == "+" else self.ctx.neg(inner)
        return self.power()

    def power(self):
        base = self.atom()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.advance()
            kind2, exp, pos2 = self.peek()
            if kind2 != "int":
                raise ParseError("exponent must be a nonnegative integer", pos2)
            self.advance()
            return self.ctx.pow(base, exp)
        return base

    def atom(self):
        kind, val, pos = self.advance()
        if kind == "int":
            return self.ctx.const(val)
        if kind == "name":
            return self.ctx.name(val, pos)
        if kind == "op" and val == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        raise ParseError(f"expected a value, found {val!r}", pos)


class _RatFuncContext:
    """Evaluates the grammar into RatFunc over a constant field.

    Besides t, additional constant symbols (e.g. the generator of a constants
    extension) may be bound.
    """

    def __init__(self, field, constants=None):
        self.field = field
        self.constants = constants or {}

    def const(self, n):
        return RatFunc.from_const(self.field, n)

    def name(self, nm, pos):
        if nm == "t":
            return RatFunc.t(self.field)
        if nm in self.constants:
            return RatFunc.from_const(self.field, self.constants[nm])
        raise ParseError(f"unknown symbol {nm!r} in rational-function context", pos)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b, pos):
        if b.is_zero():
            raise ParseError("division by zero", pos)
        return a / b

    def neg(self, a):
        return -a

    def pow(self, a, n):
        return a ** n


class _MPolyContext:
    """Evaluates the grammar into MPoly over a given polynomial ring."""

    def __init__(self, ring):
        self.ring = ring

    def const(self, n):
        return self.ring.constant(RatFunc.from_const(self.ring.field, n))

    def name(self, nm, pos):
        if nm in self.ring.index:
            return self.ring.variable(nm)
        if nm == "t":
            return self.ring.constant(RatFunc.t(self.ring.field))
        extra = self.ring.coefficient_symbols
        if nm in extra:
            return self.ring.constant(RatFunc.from_const(self.ring.field, extra[nm]))
        raise ParseError(f"unknown symbol {nm!r}", pos)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b, pos):
        coeff = b.constant_coefficient_or_none()
        if coeff is None:
            raise ParseError("division by a polynomial in ring variables", pos)
        if coeff.is_zero():
            raise ParseError("division by zero", pos)
        return a.coeff_scale(coeff.inverse())

    def neg(self, a):
        return -a

    def pow(self, a, n):
        return a ** n


def parse_ratfunc(text, field, constants=None) -> RatFunc:
    return _Parser(tokenize(text), _RatFuncContext(field, constants)).parse()


def parse_mpoly(text, ring):
    return _Parser(tokenize(text), _MPolyContext(ring)).parse()


def parse_univariate(text, symbol) -> tuple:
    """Parse a polynomial in one named symbol into Fraction coefficients."""
    rf = _Parser(
        tokenize(text.replace(symbol, "t") if symbol != "t" else text),
        _RatFuncContext(__import__("pvkit.fields", fromlist=["QQ"]).QQ),
    ).parse()
    if not rf.is_polynomial():
        raise ParseError("expected a polynomial, found a proper fraction")
    return rf.num.coeffs


def grammar_names(text):
    """All names occurring in a grammar string (validates tokenization)."""
    return sorted({val for kind, val, _ in tokenize(text) if kind == "name"})


# ---------------------------------------------------------------------------
# formatting (deterministic; output re-parses to the same value)


def _format_const(c):
    s = str(c)
    return s


def format_poly(p: Poly) -> str:
    if not p:
        return "0"
    parts = []
    for e in range(p.degree, -1, -1):
        c = p.coeffs[e]
        if not c:
            continue
        cs = _format_const(c)
        needs_parens = ("+" in cs[1:]) or ("-" in cs[1:]) or ("/" in cs)
        if e == 0:
            term = f"({cs})" if needs_parens and parts else cs
        else:
            base = "t" if e == 1 else f"t^{e}"
            if cs == "1":
                term = base
            elif cs == "-1":
                term = f"-{base}"
            elif needs_parens:
                term = f"({cs})*{base}"
            else:
                term = f"{cs}*{base}"
        if parts and not term.startswith("-"):
            parts.append("+" + term)
        else:
            parts.append(term)
    return "".join(parts)


def format_ratfunc(r: RatFunc) -> str:
    num = format_poly(r.num)
    if r.den.degree == 0:
        return num
    den = format_poly(r.den)
    if len([c for c in r.num.coeffs if c]) > 1 or "*" in num or "(" in num:
        num = f"({num})"
    if len([c for c in r.den.coeffs if c]) > 1 or "*" in den:
        den = f"({den})"
    return f"{num}/{den}"


def _monomial_str(ring, exps):
    parts = []
    for name, e in zip(ring.variables, exps):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def format_mpoly(f) -> str:
    if not f:
        return "0"
    ring = f.ring
    items = sorted(f.terms.items(), key=lambda kv: ring.order.key(kv[0]), reverse=True)
    parts = []
    minus_one = RatFunc.from_const(ring.field, -1)
    one = RatFunc.from_const(ring.field, 1)
    for exps, coeff in items:
        mono = _monomial_str(ring, exps)
        cs = format_ratfunc(coeff)
        if not mono:
            # the constant term is last in a graded order, so a bare sum is fine
            term = cs
        elif coeff == one:
            term = mono
        elif coeff == minus_one:
            term = f"-{mono}"
        else:
            atomic = re.fullmatch(r"-?\d+", cs)
            term = f"{cs}*{mono}" if atomic else f"({cs})*{mono}"
        if parts and not term.startswith("-"):
            parts.append("+" + term)
        else:
            parts.append(term)
    return "".join(parts)

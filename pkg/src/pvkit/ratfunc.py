"""Rational functions in t: canonical fractions of univariate polynomials.

Canonical form: the denominator is monic and coprime to the numerator; zero
is 0/1.  Two equal values therefore have identical representations.
"""

from __future__ import annotations

from .errors import DivisionByZero
from .poly import Poly, poly_gcd


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if not num:
            self.num = Poly.zero(num.field)
            self.den = Poly.one(num.field)
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num // g
            den = den // g
        lead = den.lead
        if lead != den.field.one:
            num = num.scale(den.field.one / lead)
            den = den.monic()
        self.num = num
        self.den = den

    @classmethod
    def from_const(cls, field, value):
        return cls(Poly.const(field, value), Poly.one(field))

    @classmethod
    def from_poly(cls, p: Poly):
        return cls(p, Poly.one(p.field))

    @classmethod
    def t(cls, field):
        return cls(Poly.t(field), Poly.one(field))

    @property
    def field(self):
        return self.num.field

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("rational function is not constant")
        return self.num.constant_value()

    def is_polynomial(self):
        return self.den.degree == 0

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num.coeffs, self.den.coeffs))

    def __add__(self, other):
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        # cancel crosswise first to limit coefficient growth
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        a = self.num // g1 if g1.degree > 0 else self.num
        d2 = other.den // g1 if g1.degree > 0 else other.den
        b = other.num // g2 if g2.degree > 0 else other.num
        d1 = self.den // g2 if g2.degree > 0 else self.den
        return RatFunc(a * b, d1 * d2)

    def scale(self, c):
        return RatFunc(self.num.scale(c), self.den)

    def inverse(self):
        if not self.num:
            raise DivisionByZero("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = RatFunc.from_const(self.field, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derivative(self):
        """d/dt by the quotient rule, renormalized."""
        n, d = self.num, self.den
        return RatFunc(n.derivative() * d - n * d.derivative(), d * d)

    def shift(self, j=1):
        """Substitute t -> t + j."""
        return RatFunc(self.num.shift(j), self.den.shift(j))

    def map_coeffs(self, field, fn):
        return RatFunc(self.num.map_coeffs(field, fn), self.den.map_coeffs(field, fn))

    def __repr__(self):
        from .parsing import format_ratfunc

        return format_ratfunc(self)


def ratfunc(num: Poly, den: Poly) -> RatFunc:
    """Canonicalize a fraction of polynomials (zero denominator raises)."""
    return RatFunc(num, den)

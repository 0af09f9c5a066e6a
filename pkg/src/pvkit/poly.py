"""Dense univariate polynomials in t over an exact constant field."""

from __future__ import annotations

from .errors import DivisionByZero


class Poly:
    """Polynomial with ascending coefficient tuple; zero is the empty tuple."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, field, value):
        return cls(field, (field.coerce(value),))

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (field.one,))

    @classmethod
    def t(cls, field):
        return cls(field, (field.zero, field.one))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_constant(self):
        return len(self.coeffs) <= 1

    def constant_value(self):
        return self.coeffs[0] if self.coeffs else self.field.zero

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        out = [self.field.zero] * n
        for i, c in enumerate(self.coeffs):
            out[i] = out[i] + c
        for i, c in enumerate(other.coeffs):
            out[i] = out[i] + c
        return Poly(self.field, out)

    def __neg__(self):
        return Poly(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return Poly.zero(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    def scale(self, c):
        c = self.field.coerce(c)
        return Poly(self.field, tuple(a * c for a in self.coeffs))

    def __pow__(self, n):
        out = Poly.one(self.field)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other):
        if not other:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        deg_b = other.degree
        lead_b = other.lead
        q = [self.field.zero] * max(len(rem) - deg_b, 0)
        while len(rem) - 1 >= deg_b and rem:
            if not rem[-1]:
                rem.pop()
                continue
            shift = len(rem) - 1 - deg_b
            factor = rem[-1] / lead_b
            q[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - factor * c
            rem.pop()
        return Poly(self.field, q), Poly(self.field, rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self):
        if not self.coeffs:
            return self
        lead = self.lead
        if lead == self.field.one:
            return self
        return Poly(self.field, tuple(c / lead for c in self.coeffs))

    def derivative(self):
        if len(self.coeffs) <= 1:
            return Poly.zero(self.field)
        return Poly(
            self.field,
            tuple(self.coeffs[k] * k for k in range(1, len(self.coeffs))),
        )

    def shift(self, j=1):
        """Compose with t + j for an integer j (Horner evaluation)."""
        tj = Poly(self.field, (self.field.coerce(j), self.field.one))
        out = Poly.zero(self.field)
        for c in reversed(self.coeffs):
            out = out * tj + Poly.const(self.field, c)
        return out

    def evaluate(self, value):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def map_coeffs(self, field, fn):
        return Poly(field, tuple(fn(c) for c in self.coeffs))

    def __repr__(self):
        from .parsing import format_poly

        return format_poly(self)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, a % b
    return a.monic() if a else a


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return Poly.zero(a.field)
    g = poly_gcd(a, b)
    return ((a * b) // g).monic()

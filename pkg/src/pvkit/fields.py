"""Exact constant fields: the rationals and simple algebraic extensions of them.

The base constants are plain ``fractions.Fraction`` values.  A constants
extension (needed when a Picard-Vessiot ring only exists after enlarging the
constants) is modelled as QQ[alpha]/(m(alpha)) for a monic irreducible m, with
elements stored as coefficient tuples in the power basis of alpha.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, NotAFieldExtension


class RationalField:
    """The rational numbers; elements are Fraction instances."""

    degree = 1

    @property
    def name(self):
        return "QQ"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into QQ")

    def describe(self):
        return {"name": "QQ"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


def _tuple_trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


def _tuple_divmod(a, b):
    """Euclidean division of Fraction coefficient tuples (ascending)."""
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and any(a):
        if not a[-1]:
            a.pop()
            continue
        shift = len(a) - len(b)
        factor = a[-1] / lead
        q[shift] = factor
        for i, c in enumerate(b):
            a[shift + i] -= factor * c
        a.pop()
    return _tuple_trim(q), _tuple_trim(a)


def _tuple_mul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _tuple_trim(out)


def _tuple_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _tuple_trim(out)


def rational_roots(coeffs):
    """All rational roots of a Fraction-coefficient polynomial (ascending)."""
    coeffs = _tuple_trim(coeffs)
    if len(coeffs) <= 1:
        return []
    den_lcm = 1
    for c in coeffs:
        den_lcm = den_lcm * c.denominator // _gcd_int(den_lcm, c.denominator)
    ints = [int(c * den_lcm) for c in coeffs]
    roots = []
    if ints[0] == 0:
        roots.append(Fraction(0))
        while ints and ints[0] == 0:
            ints = ints[1:]
    if len(ints) <= 1:
        return roots
    for p in _divisors(abs(ints[0])):
        for q in _divisors(abs(ints[-1])):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in roots:
                    continue
                acc = Fraction(0)
                for c in reversed(ints):
                    acc = acc * cand + c
                if acc == 0:
                    roots.append(cand)
    return roots


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


class NumberField:
    """QQ[alpha]/(m(alpha)) with m monic of degree >= 2.

    Irreducibility is certified by absence of rational roots for degree 2 and
    3; higher-degree polynomials are trusted as declared.
    """

    def __init__(self, generator: str, min_poly):
        coeffs = _tuple_trim(Fraction(c) for c in min_poly)
        if len(coeffs) < 3:
            raise NotAFieldExtension(
                f"minimal polynomial for {generator!r} must have degree >= 2"
            )
        lead = coeffs[-1]
        coeffs = tuple(c / lead for c in coeffs)
        if len(coeffs) <= 4 and rational_roots(coeffs):
            raise NotAFieldExtension(
                f"minimal polynomial for {generator!r} has a rational root"
            )
        self.generator = generator
        self.min_poly = coeffs
        self.degree = len(coeffs) - 1

    @property
    def name(self):
        return f"QQ({self.generator})"

    @property
    def zero(self):
        return NumberFieldElement(self, ())

    @property
    def one(self):
        return NumberFieldElement(self, (Fraction(1),))

    @property
    def alpha(self):
        return NumberFieldElement(self, (Fraction(0), Fraction(1)))

    def element(self, coeffs):
        coeffs = _tuple_trim(Fraction(c) for c in coeffs)
        if len(coeffs) > self.degree:
            _, coeffs = _tuple_divmod(coeffs, self.min_poly)
        return NumberFieldElement(self, coeffs)

    def coerce(self, value):
        if isinstance(value, NumberFieldElement):
            if value.field == self:
                return value
            raise TypeError("element of a different number field")
        if isinstance(value, (int, Fraction)):
            return self.element((Fraction(value),))
        raise TypeError(f"cannot coerce {value!r} into {self.name}")

    def describe(self):
        return {
            "name": self.name,
            "generator": self.generator,
            "min_poly": list(str(c) for c in self.min_poly),
        }

    def __eq__(self, other):
        return (
            isinstance(other, NumberField)
            and self.generator == other.generator
            and self.min_poly == other.min_poly
        )

    def __hash__(self):
        return hash((self.generator, self.min_poly))

    def __repr__(self):
        return self.name


class NumberFieldElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = _tuple_trim(coeffs)

    def _lift(self, other):
        if isinstance(other, NumberFieldElement):
            if other.field != self.field:
                raise TypeError("mixed number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.coerce(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        out = [Fraction(0)] * max(len(self.coeffs), len(other.coeffs))
        for i, c in enumerate(self.coeffs):
            out[i] += c
        for i, c in enumerate(other.coeffs):
            out[i] += c
        return NumberFieldElement(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return NumberFieldElement(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        prod = _tuple_mul(self.coeffs, other.coeffs)
        _, rem = _tuple_divmod(prod, self.field.min_poly)
        return NumberFieldElement(self.field, rem)

    __rmul__ = __mul__

    def inverse(self):
        if not self.coeffs:
            raise DivisionByZero("inverse of zero in number field")
        # extended Euclid: u*self + v*min_poly = gcd (a nonzero constant)
        r0, r1 = self.field.min_poly, self.coeffs
        s0, s1 = (), (Fraction(1),)
        while r1:
            q, r = _tuple_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _tuple_sub(s0, _tuple_mul(q, s1))
        if len(r0) != 1:
            raise DivisionByZero("minimal polynomial is not irreducible")
        inv_lead = Fraction(1) / r0[0]
        return NumberFieldElement(self.field, tuple(c * inv_lead for c in s0))

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.coerce(other)
        if not isinstance(other, NumberFieldElement):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash((self.field, self.coeffs))

    def is_rational(self):
        return len(self.coeffs) <= 1

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __repr__(self):
        return f"NF({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            if e == 0:
                term = str(c)
            else:
                base = self.field.generator if e == 1 else f"{self.field.generator}^{e}"
                if c == 1:
                    term = base
                elif c == -1:
                    term = f"-{base}"
                else:
                    term = f"{c}*{base}"
            if parts and not term.startswith("-"):
                parts.append("+" + term)
            else:
                parts.append(term)
        return "".join(parts)


def field_sqrt(field, value):
    """Exact square root of a constant in QQ or a quadratic extension.

    Returns None when no square root exists in the field.  Only the cases
    needed at desk scale are supported (rationals, and quadratic fields for
    elements expressed in the power basis).
    """
    if isinstance(field, RationalField):
        return _fraction_sqrt(Fraction(value))
    if isinstance(field, NumberField) and field.degree == 2:
        val = field.coerce(value)
        c = list(val.coeffs) + [Fraction(0)] * (2 - len(val.coeffs))
        a, b = c[0], c[1]
        # alpha^2 = r with r rational (power basis, monic min_poly x^2 - r)
        r = -field.min_poly[0]
        if field.min_poly[1]:
            return None
        # (u + v*alpha)^2 = u^2 + v^2 r + 2uv alpha
        if not b:
            u = _fraction_sqrt(a)
            if u is not None:
                return field.element((u,))
            if r:
                v2 = a / r
                v = _fraction_sqrt(v2)
                if v is not None:
                    return field.element((Fraction(0), v))
            return None
        # 2uv = b, u^2 + r v^2 = a  =>  u^2 solves x^2 - a x + r b^2/4 = 0
        disc = a * a - r * b * b
        d = _fraction_sqrt(disc)
        if d is None:
            return None
        for u2 in ((a + d) / 2, (a - d) / 2):
            u = _fraction_sqrt(u2)
            if u is not None and u != 0:
                v = b / (2 * u)
                cand = field.element((u, v))
                if cand * cand == val:
                    return cand
        return None
    return None


def _fraction_sqrt(x):
    if x < 0:
        return None
    if x == 0:
        return Fraction(0)
    num = _int_sqrt(x.numerator)
    den = _int_sqrt(x.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _int_sqrt(n):
    import math

    r = math.isqrt(n)
    return r if r * r == n else None

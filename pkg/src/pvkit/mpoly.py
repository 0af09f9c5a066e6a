"""Multivariate polynomials over Q(t) with graded monomial orders.

Coefficients are RatFunc values, so Groebner theory over a field applies
directly.  Monomials are exponent tuples aligned with the ring's declared
variable order; the default order is graded reverse lexicographic.
"""

from __future__ import annotations

from .errors import VariableSetMismatch
from .ratfunc import RatFunc


class GrevlexOrder:
    descriptor = "grevlex"

    def key(self, exps):
        return (sum(exps), tuple(-e for e in reversed(exps)))

    def __eq__(self, other):
        return isinstance(other, GrevlexOrder)

    def __hash__(self):
        return hash(self.descriptor)


class BlockOrder:
    """Eliminates the first `split` variables (block grevlex > block grevlex)."""

    def __init__(self, split):
        self.split = split
        self.descriptor = f"elim({split})"

    def key(self, exps):
        a, b = exps[: self.split], exps[self.split :]
        return (
            sum(a),
            tuple(-e for e in reversed(a)),
            sum(b),
            tuple(-e for e in reversed(b)),
        )

    def __eq__(self, other):
        return isinstance(other, BlockOrder) and self.split == other.split

    def __hash__(self):
        return hash(self.descriptor)


GREVLEX = GrevlexOrder()


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class PolyRing:
    """Variable list + coefficient field + monomial order."""

    __slots__ = ("variables", "field", "order", "index", "coefficient_symbols")

    def __init__(self, variables, field, order=GREVLEX, coefficient_symbols=None):
        self.variables = tuple(variables)
        self.field = field
        self.order = order
        self.index = {v: i for i, v in enumerate(self.variables)}
        self.coefficient_symbols = dict(coefficient_symbols or {})
        if len(self.index) != len(self.variables):
            raise ValueError("duplicate variable names")

    @property
    def nvars(self):
        return len(self.variables)

    def zero_monomial(self):
        return (0,) * self.nvars

    def zero(self):
        return MPoly(self, {})

    def one(self):
        return self.constant(RatFunc.from_const(self.field, 1))

    def constant(self, coeff):
        if isinstance(coeff, RatFunc):
            c = coeff
        else:
            c = RatFunc.from_const(self.field, coeff)
        if c.is_zero():
            return MPoly(self, {})
        return MPoly(self, {self.zero_monomial(): c})

    def variable(self, name):
        if name not in self.index:
            raise VariableSetMismatch(f"{name!r} is not a variable of this ring")
        exps = [0] * self.nvars
        exps[self.index[name]] = 1
        return MPoly(self, {tuple(exps): RatFunc.from_const(self.field, 1)})

    def monomial(self, exps, coeff=None):
        coeff = coeff if coeff is not None else RatFunc.from_const(self.field, 1)
        if coeff.is_zero():
            return self.zero()
        return MPoly(self, {tuple(exps): coeff})

    def with_order(self, order):
        return PolyRing(self.variables, self.field, order, self.coefficient_symbols)

    def monomials_up_to_degree(self, bound, variables=None):
        """All monomials of total degree <= bound, ascending in the order."""
        idxs = (
            range(self.nvars)
            if variables is None
            else [self.index[v] for v in variables]
        )
        out = [self.zero_monomial()]
        frontier = [self.zero_monomial()]
        for _ in range(bound):
            nxt = []
            seen = set()
            for m in frontier:
                for i in idxs:
                    e = list(m)
                    e[i] += 1
                    te = tuple(e)
                    if te not in seen:
                        seen.add(te)
                        nxt.append(te)
            out.extend(nxt)
            frontier = nxt
        out = sorted(set(out), key=self.order.key)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.variables == other.variables
            and self.field == other.field
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.variables, self.field, self.order.descriptor))

    def __repr__(self):
        return f"PolyRing({', '.join(self.variables)}; {self.field.name}(t); {self.order.descriptor})"


class MPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def _check(self, other):
        if self.ring != other.ring:
            raise VariableSetMismatch("operands live in different polynomial rings")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items(), key=lambda kv: kv[0])))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m)
            s = c if acc is None else acc + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return MPoly(self.ring, out)

    def __neg__(self):
        return MPoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                c = c1 * c2
                acc = out.get(m)
                s = c if acc is None else acc + c
                if s.is_zero():
                    out.pop(m, None)
                else:
                    out[m] = s
        return MPoly(self.ring, out)

    def __pow__(self, n):
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def coeff_scale(self, coeff: RatFunc):
        if coeff.is_zero():
            return self.ring.zero()
        return MPoly(self.ring, {m: c * coeff for m, c in self.terms.items()})

    def term_mul(self, mono, coeff):
        return MPoly(
            self.ring,
            {monomial_mul(m, mono): c * coeff for m, c in self.terms.items()},
        )

    def lead_monomial(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=self.ring.order.key)

    def lead_coeff(self):
        return self.terms[self.lead_monomial()]

    def monic(self):
        if not self.terms:
            return self
        lc = self.lead_coeff()
        one = RatFunc.from_const(self.ring.field, 1)
        if lc == one:
            return self
        return self.coeff_scale(lc.inverse())

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def constant_coefficient_or_none(self):
        """The value as a RatFunc when no ring variable occurs, else None."""
        if not self.terms:
            return RatFunc.from_const(self.ring.field, 0)
        zero_m = self.ring.zero_monomial()
        if set(self.terms) == {zero_m}:
            return self.terms[zero_m]
        return None

    def coefficient_of(self, mono):
        return self.terms.get(mono, RatFunc.from_const(self.ring.field, 0))

    def map_coefficients(self, fn, ring=None):
        ring = ring or self.ring
        out = {}
        for m, c in self.terms.items():
            c2 = fn(c)
            if not c2.is_zero():
                out[m] = c2
        return MPoly(ring, out)

    def substitute(self, target_ring, var_images, coeff_map=None):
        """Evaluate with each variable replaced by an MPoly of target_ring.

        coeff_map converts coefficients between base fields when they differ
        (identity by default).
        """
        cmap = coeff_map or (lambda c: c)
        out = target_ring.zero()
        power_cache = {}
        for m, c in self.terms.items():
            term = target_ring.constant(cmap(c))
            for i, e in enumerate(m):
                if e == 0:
                    continue
                name = self.ring.variables[i]
                key = (name, e)
                img = power_cache.get(key)
                if img is None:
                    img = var_images[name] ** e
                    power_cache[key] = img
                term = term * img
            out = out + term
        return out

    def sorted_terms(self):
        return sorted(
            self.terms.items(), key=lambda kv: self.ring.order.key(kv[0]), reverse=True
        )

    def __repr__(self):
        from .parsing import format_mpoly

        return format_mpoly(self)

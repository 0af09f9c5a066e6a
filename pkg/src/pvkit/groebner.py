"""Buchberger's algorithm, normal forms, and reduced Groebner bases.

Everything is deterministic: bases are interreduced, leading coefficients are
normalized to 1, and basis elements are sorted by leading monomial, so
identical inputs produce identical outputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import VariableSetMismatch
from .mpoly import (
    MPoly,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)
from .ratfunc import RatFunc


def normal_form(f: MPoly, basis) -> MPoly:
    """Remainder of multivariate division of f by the list basis."""
    if isinstance(basis, IdealGB):
        if basis.ring != f.ring:
            raise VariableSetMismatch("polynomial and ideal rings differ")
        basis = basis.basis
    ring = f.ring
    remainder = {}
    work = dict(f.terms)
    key = ring.order.key
    lts = [(g.lead_monomial(), g) for g in basis if g]
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        reduced = False
        for lm, g in lts:
            if monomial_divides(lm, m):
                factor = monomial_div(m, lm)
                coeff = c / g.terms[lm]
                for gm, gc in g.terms.items():
                    tm = monomial_mul(gm, factor)
                    if tm == m:
                        continue
                    acc = work.get(tm)
                    s = -(gc * coeff) if acc is None else acc - gc * coeff
                    if s.is_zero():
                        work.pop(tm, None)
                    else:
                        work[tm] = s
                reduced = True
                break
        if not reduced:
            remainder[m] = c
    return MPoly(ring, remainder)


def s_polynomial(f: MPoly, g: MPoly) -> MPoly:
    lf, lg = f.lead_monomial(), g.lead_monomial()
    lcm = monomial_lcm(lf, lg)
    one = RatFunc.from_const(f.ring.field, 1)
    a = f.term_mul(monomial_div(lcm, lf), one / f.terms[lf])
    b = g.term_mul(monomial_div(lcm, lg), one / g.terms[lg])
    return a - b


def buchberger(gens) -> list:
    """Reduced Groebner basis of the given generators (possibly empty)."""
    basis = [g.monic() for g in gens if g]
    if not basis:
        return []
    ring = basis[0].ring
    key = ring.order.key
    basis.sort(key=lambda g: key(g.lead_monomial()))
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    while pairs:
        pairs.sort(
            key=lambda p: key(
                monomial_lcm(basis[p[0]].lead_monomial(), basis[p[1]].lead_monomial())
            )
        )
        i, j = pairs.pop(0)
        fi, fj = basis[i], basis[j]
        li, lj = fi.lead_monomial(), fj.lead_monomial()
        if monomial_lcm(li, lj) == monomial_mul(li, lj):
            continue  # coprime leading monomials reduce to zero
        rem = normal_form(s_polynomial(fi, fj), basis)
        if rem:
            rem = rem.monic()
            pairs.extend((k, len(basis)) for k in range(len(basis)))
            basis.append(rem)
    return _interreduce(basis)


def _interreduce(basis):
    # drop elements whose leading monomial is divisible by another's
    basis = sorted(basis, key=lambda g: g.ring.order.key(g.lead_monomial()))
    minimal = []
    for g in basis:
        lm = g.lead_monomial()
        if any(monomial_divides(h.lead_monomial(), lm) for h in minimal):
            continue
        minimal.append(g)
    reduced = []
    changed = True
    while changed:
        changed = False
        out = []
        for i, g in enumerate(minimal):
            others = minimal[:i] + minimal[i + 1 :]
            r = normal_form(g, others)
            if r:
                r = r.monic()
                if r != g:
                    changed = True
                out.append(r)
            else:
                changed = True
        minimal = out
    reduced = sorted(minimal, key=lambda g: g.ring.order.key(g.lead_monomial()), reverse=True)
    return reduced


@dataclass(frozen=True)
class IdealGB:
    """An ideal with its reduced Groebner basis under the ring's fixed order."""

    ring: object
    generators: tuple
    basis: tuple

    @classmethod
    def from_generators(cls, ring, gens):
        gens = tuple(g for g in gens)
        for g in gens:
            if g.ring != ring:
                raise VariableSetMismatch("generator not in the given ring")
        return cls(ring, gens, tuple(buchberger(list(gens))))

    @property
    def order_descriptor(self):
        return self.ring.order.descriptor

    def contains(self, f: MPoly) -> bool:
        return not normal_form(f, self)

    def reduce(self, f: MPoly) -> MPoly:
        return normal_form(f, self)

    def is_zero(self) -> bool:
        return not self.basis

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0] == self.ring.one()

    def is_proper(self) -> bool:
        return not self.is_unit()

    def extended(self, extra_gens):
        return IdealGB.from_generators(self.ring, tuple(self.generators) + tuple(extra_gens))


def ideal_equal(I: IdealGB, J: IdealGB) -> bool:
    """Mutual membership of the reduced bases (same ring required)."""
    if I.ring != J.ring:
        raise VariableSetMismatch("ideals live in different rings")
    return all(J.contains(g) for g in I.basis) and all(I.contains(g) for g in J.basis)


def groebner_basis(gens) -> IdealGB:
    """Reduced Groebner basis of a nonempty list of MPoly generators."""
    if not gens:
        raise ValueError("use IdealGB.from_generators(ring, []) for the zero ideal")
    return IdealGB.from_generators(gens[0].ring, gens)

"""The two concrete operator settings over F = k(t), and algebras they act on.

A Setting is either differential (derivation with t' = 1, extended by the
Leibniz and quotient rules) or difference (the shift substitution t -> t+1,
extended multiplicatively).  Constants of both shipped settings form the
field k, which is QQ unless a constants extension has been installed.

An OperatorAlgebra is a finitely presented F-algebra together with the image
of each generator under the operator; the operator extends to the whole
quotient by the Leibniz rule resp. multiplicativity, and well-definedness is
exactly operator-stability of the relation ideal.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .errors import InconclusiveClosure, NotCIdeal, VariableSetMismatch
from .fields import QQ
from .groebner import IdealGB, normal_form
from .mpoly import MPoly, PolyRing
from .ratfunc import RatFunc

DIFFERENTIAL = "differential"
DIFFERENCE = "difference"

CLOSURE_ITERATION_CAP = 64


@dataclass(frozen=True)
class Setting:
    kind: str
    constants: object = QQ

    def __post_init__(self):
        if self.kind not in (DIFFERENTIAL, DIFFERENCE):
            raise ValueError(f"unknown setting kind {self.kind!r}")

    @property
    def is_differential(self):
        return self.kind == DIFFERENTIAL

    def apply(self, f: RatFunc) -> RatFunc:
        """Derivative of f, or f with t replaced by t+1."""
        if self.is_differential:
            return f.derivative()
        return f.shift(1)

    def fixes(self, f: RatFunc) -> bool:
        """True when f is a constant of the setting (killed resp. fixed)."""
        if self.is_differential:
            return self.apply(f).is_zero()
        return self.apply(f) == f

    def constant_field(self):
        """k = F^C for the shipped settings: the coefficient constants."""
        return self.constants

    def describe(self):
        doc = {"kind": self.kind}
        if self.constants != QQ:
            doc["constants"] = self.constants.describe()
        return doc


class OperatorAlgebra:
    """Finitely presented algebra over F with the distinguished operator.

    action maps each ring variable to its operator image (stored in normal
    form modulo the relations).
    """

    def __init__(self, ring: PolyRing, relations: IdealGB, action: dict, setting: Setting):
        if relations.ring != ring:
            raise VariableSetMismatch("relations not over the algebra's ring")
        for name in ring.variables:
            if name not in action:
                raise ValueError(f"missing operator image for {name!r}")
        self.ring = ring
        self.relations = relations
        self.setting = setting
        self.action = {v: relations.reduce(action[v]) for v in ring.variables}
        self._monomial_cache = {}

    def reduce(self, f: MPoly) -> MPoly:
        return self.relations.reduce(f)

    def _monomial_image(self, mono):
        """Operator applied to a single monomial (cached, normal form)."""
        cached = self._monomial_cache.get(mono)
        if cached is not None:
            return cached
        ring = self.ring
        if sum(mono) == 0:
            result = ring.zero() if self.setting.is_differential else ring.one()
        else:
            i = next(idx for idx, e in enumerate(mono) if e > 0)
            rest = list(mono)
            rest[i] -= 1
            rest = tuple(rest)
            var = ring.variables[i]
            if self.setting.is_differential:
                # d(m*v) = d(m)*v + m*action(v)
                rest_poly = ring.monomial(rest)
                result = self._monomial_image(rest) * ring.variable(var) + rest_poly * self.action[var]
            else:
                result = self._monomial_image(rest) * self.action[var]
            result = self.reduce(result)
        self._monomial_cache[mono] = result
        return result

    def act(self, f: MPoly) -> MPoly:
        """Operator image of an algebra element, in normal form."""
        if f.ring != self.ring:
            raise VariableSetMismatch("element not in this algebra's ring")
        setting = self.setting
        out = self.ring.zero()
        for mono, coeff in f.terms.items():
            img = self._monomial_image(mono)
            if setting.is_differential:
                out = out + img.coeff_scale(coeff)
                dc = setting.apply(coeff)
                if not dc.is_zero():
                    out = out + self.ring.monomial(mono, dc)
            else:
                out = out + img.coeff_scale(setting.apply(coeff))
        return self.reduce(out)

    def constant_defect(self, f: MPoly) -> MPoly:
        """act(f) for differential, act(f) - f for difference settings.

        Zero exactly when f is a constant of the algebra.
        """
        if self.setting.is_differential:
            return self.act(f)
        return self.act(f) - f

    def is_stable_ideal(self, ideal: IdealGB) -> bool:
        """True iff the operator maps the ideal into itself.

        The ideal is taken inside the quotient algebra: membership is tested
        modulo relations + ideal generators.
        """
        combined = self.relations.extended(ideal.generators)
        for g in ideal.basis:
            if normal_form(self.act(g), combined):
                return False
        return True

    def stable_closure(self, gens, cap=CLOSURE_ITERATION_CAP) -> IdealGB:
        """Smallest operator-stable ideal of the quotient containing gens.

        Returned as an ideal of the ambient ring containing the relations.
        Termination is forced by the ascending chain condition; the iteration
        cap turns a runaway loop into an explicit error.
        """
        current = self.relations.extended(gens)
        for _ in range(cap):
            if current.is_unit():
                return current
            new_gens = []
            for g in current.basis:
                img = normal_form(self.act(g), current)
                if img:
                    new_gens.append(img)
            if not new_gens:
                return current
            current = current.extended(new_gens)
        raise InconclusiveClosure(
            f"operator closure did not stabilize within {cap} iterations"
        )

    def normal_monomials(self, bound, variables=None):
        """Monomials of total degree <= bound not reducible by the relations."""
        lead = [g.lead_monomial() for g in self.relations.basis]
        out = []
        for mono in self.ring.monomials_up_to_degree(bound, variables):
            if not any(all(l <= m for l, m in zip(lm, mono)) for lm in lead):
                out.append(mono)
        return out

    def require_stable(self, gens_ideal: IdealGB):
        if not self.is_stable_ideal(gens_ideal):
            raise NotCIdeal("ideal is not operator-stable")

    def describe(self):
        from .parsing import format_mpoly

        return {
            "variables": list(self.ring.variables),
            "relations": [format_mpoly(g) for g in self.relations.basis],
            "action": {v: format_mpoly(self.action[v]) for v in self.ring.variables},
            "setting": self.setting.describe(),
        }


def verify_operator_stable(alg: OperatorAlgebra, ideal: IdealGB) -> bool:
    return alg.is_stable_ideal(ideal)


def base_constants(setting: Setting):
    return setting.constant_field()

"""Solution rings: the universal ring F[X, det(X)^-1], operator-stable
quotients, simplicity and constants verdicts, Picard-Vessiot verification,
and morphisms from the universal ring.

The universal ring for a rank-n module carries variables x11..xnn and d with
the single relation d*det(X) - 1; the operator sends X to A*X and d to
-tr(A)*d (differential) resp. det(A)^-1*d (difference).  Every ring handled
here is such a ring or a quotient of one by an operator-stable ideal, so the
fundamental matrix is always marked and exact identity checks are available.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from . import fmatrix
from .errors import (
    NotCIdeal,
    NotDualizable,
    SearchExhausted,
    SettingMismatch,
    TrivialQuotient,
)
from .fields import NumberField, field_sqrt, rational_roots
from .groebner import IdealGB, normal_form
from .kernels import ring_valued_solutions
from .linalg import SpanTracker
from .modules import CModule
from .mpoly import MPoly, PolyRing
from .poly import Poly, poly_gcd
from .ratfunc import RatFunc
from .setting import OperatorAlgebra, Setting


def mpoly_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = None
    for j in range(n):
        if not rows[0][j]:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * mpoly_det(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    if acc is None:
        return rows[0][0].ring.zero()
    return acc


def fundamental_variable_names(n):
    return tuple(f"x{i + 1}{j + 1}" for i in range(n) for j in range(n))


@dataclass
class SolutionRing:
    algebra: OperatorAlgebra
    module: CModule
    fundamental: tuple  # n x n matrix of MPoly residues
    det_inverse: MPoly

    @property
    def ring(self):
        return self.algebra.ring

    @property
    def rank(self):
        return self.module.rank

    def fundamental_equation_holds(self) -> bool:
        """operator(X) == A*X entrywise modulo the relations (exact)."""
        n = self.rank
        A = self.module.matrix
        for i in range(n):
            for j in range(n):
                rhs = self.ring.zero()
                for k in range(n):
                    rhs = rhs + self.fundamental[k][j].coeff_scale(A[i][k])
                if self.algebra.act(self.fundamental[i][j]) != self.algebra.reduce(rhs):
                    return False
        return True

    def determinant_is_unit(self) -> bool:
        d = mpoly_det([list(r) for r in self.fundamental])
        return self.algebra.reduce(d * self.det_inverse) == self.ring.one()

    def is_nonzero(self) -> bool:
        return not self.algebra.relations.is_unit()

    def structural_checks(self) -> dict:
        return {
            "fundamental_equation": self.fundamental_equation_holds(),
            "determinant_unit": self.determinant_is_unit(),
            "nonzero": self.is_nonzero(),
            "relations_stable": all(
                not self.algebra.act(g) for g in self.algebra.relations.basis
            ),
        }

    def describe(self):
        from .parsing import format_mpoly

        doc = self.algebra.describe()
        doc["fundamental"] = [
            [format_mpoly(x) for x in row] for row in self.fundamental
        ]
        doc["det_inverse"] = format_mpoly(self.det_inverse)
        return doc


def universal_solution_ring(module: CModule) -> SolutionRing:
    """F[x11..xnn, d] / (d*det(X) - 1) with the induced operator."""
    setting = module.setting
    field = setting.constant_field()
    n = module.rank
    names = fundamental_variable_names(n) + ("d",)
    symbols = {}
    if isinstance(field, NumberField):
        symbols[field.generator] = field.alpha
    ring = PolyRing(names, field, coefficient_symbols=symbols)
    X = [[ring.variable(f"x{i + 1}{j + 1}") for j in range(n)] for i in range(n)]
    d = ring.variable("d")
    det_x = mpoly_det(X)
    relation = d * det_x - ring.one()
    relations = IdealGB.from_generators(ring, [relation])

    A = module.matrix
    action = {}
    for i in range(n):
        for j in range(n):
            img = ring.zero()
            for k in range(n):
                img = img + X[k][j].coeff_scale(A[i][k])
            action[f"x{i + 1}{j + 1}"] = img
    if setting.is_differential:
        action["d"] = d.coeff_scale(-fmatrix.trace(A))
    else:
        det_a = fmatrix.det(A)
        if det_a.is_zero():
            raise NotDualizable("difference module needs invertible matrix")
        action["d"] = d.coeff_scale(det_a.inverse())

    alg = OperatorAlgebra(ring, relations, action, setting)
    fundamental = tuple(
        tuple(alg.reduce(X[i][j]) for j in range(n)) for i in range(n)
    )
    sr = SolutionRing(alg, module, fundamental, alg.reduce(d))
    checks = sr.structural_checks()
    if not all(checks.values()):
        raise AssertionError(f"universal ring failed structural checks: {checks}")
    return sr


def quotient_ring(base: SolutionRing, gens) -> SolutionRing:
    """Quotient by an operator-stable proper ideal; fundamental data descends."""
    alg = base.algebra
    gens = [alg.reduce(g) for g in gens]
    gens = [g for g in gens if g]
    if not gens:
        return base
    ideal = IdealGB.from_generators(alg.ring, gens)
    if not alg.is_stable_ideal(ideal):
        raise NotCIdeal("quotient ideal is not operator-stable")
    combined = alg.relations.extended(gens)
    if combined.is_unit():
        raise TrivialQuotient("quotient by the unit ideal")
    new_alg = OperatorAlgebra(alg.ring, combined, alg.action, alg.setting)
    n = base.rank
    fundamental = tuple(
        tuple(new_alg.reduce(base.fundamental[i][j]) for j in range(n))
        for i in range(n)
    )
    sr = SolutionRing(new_alg, base.module, fundamental, new_alg.reduce(base.det_inverse))
    checks = sr.structural_checks()
    if not all(checks.values()):
        raise AssertionError(f"quotient failed structural checks: {checks}")
    return sr


def unit_module_matrix(setting: Setting):
    field = setting.constant_field()
    value = 0 if setting.is_differential else 1
    return fmatrix.mat([[RatFunc.from_const(field, value)]])


@dataclass
class RingConstants:
    elements: tuple  # MPoly basis of the bounded constants
    degree_bound: int
    is_field: object  # True / False / None (not decided at the bound)

    @property
    def dimension(self):
        return len(self.elements)

    @property
    def equals_base_constants(self):
        return self.dimension == 1

    def describe(self):
        from .parsing import format_mpoly

        return {
            "dimension": self.dimension,
            "degree_bound": self.degree_bound,
            "basis": [format_mpoly(e) for e in self.elements],
            "is_field": self.is_field,
            "equals_base_constants": self.equals_base_constants,
        }


def _k_combination_solver(ring, targets, candidates):
    """Find c_i in k with sum c_i * candidates_i == target, per target.

    Returns a list (one entry per target) of coefficient lists or None.
    """
    from .linalg import solve

    field = ring.field
    # coordinates: (monomial, t-power of numerator) after clearing a common
    # denominator per monomial across candidates and targets
    results = []
    for target in targets:
        monos = set(target.terms)
        for g in candidates:
            monos.update(g.terms)
        monos = sorted(monos)
        rows = []
        rhs = []
        for m in monos:
            den = Poly.one(field)
            from .poly import poly_lcm

            entries = [g.terms.get(m) for g in candidates]
            tval = target.terms.get(m)
            for e in entries + [tval]:
                if e is not None:
                    den = poly_lcm(den, e.den)
            polys = []
            for e in entries:
                if e is None:
                    polys.append(Poly.zero(field))
                else:
                    polys.append(e.num * (den // e.den))
            tpoly = Poly.zero(field) if tval is None else tval.num * (den // tval.den)
            max_deg = max([p.degree for p in polys + [tpoly]] + [0])
            for power in range(max_deg + 1):
                row = [
                    (p.coeffs[power] if power <= p.degree else field.zero)
                    for p in polys
                ]
                rhs_val = tpoly.coeffs[power] if power <= tpoly.degree else field.zero
                rows.append(row)
                rhs.append(rhs_val)
        sol = solve(rows, rhs, len(candidates), field.zero, field.one)
        results.append(sol)
    return results


def ring_constants(sol_ring: SolutionRing, degree_bound: int) -> RingConstants:
    """k-basis of bounded constants of the ring, with a field check."""
    alg = sol_ring.algebra
    sols, _ = ring_valued_solutions(alg, unit_module_matrix(alg.setting), degree_bound)
    elements = tuple(s[0] for s in sols)
    if len(elements) == 1:
        return RingConstants(elements, degree_bound, True)
    # bounded field test: every basis element must be invertible inside the span
    is_field = True
    products = []
    for b in elements:
        row = [alg.reduce(b * e) for e in elements]
        products.append(row)
    for i, b in enumerate(elements):
        if not b:
            continue
        sol = _k_combination_solver(alg.ring, [alg.ring.one()], products[i])[0]
        if sol is None:
            is_field = None  # no inverse found at the bound
            break
    return RingConstants(elements, degree_bound, is_field)


@dataclass
class SimplicityVerdict:
    status: str  # "refuted" | "passed_bounded"
    witness: object
    degree_bound: int
    sample_count: int
    seed: int

    def describe(self):
        from .parsing import format_mpoly

        return {
            "status": self.status,
            "witness": format_mpoly(self.witness) if self.witness is not None else None,
            "degree_bound": self.degree_bound,
            "samples": self.sample_count,
            "seed": self.seed,
        }


_COEFF_POOL = ("1", "2", "3", "-1", "-2", "t", "t+1", "t-1", "2*t")


def simplicity_check(
    sol_ring: SolutionRing,
    degree_bound: int,
    samples: int,
    seed: int,
    candidates=(),
) -> SimplicityVerdict:
    """Refutation by candidate stable ideals, then seeded confirmation sampling.

    Refutation is sound and exact: a returned witness generates a proper
    nonzero operator-stable ideal.  passed_bounded is bounded evidence only.
    """
    alg = sol_ring.algebra
    ring = alg.ring
    one = ring.one()

    def proper_stable(f):
        f = alg.reduce(f)
        if not f:
            return None
        closure = alg.stable_closure([f])
        if closure.is_unit():
            return None
        return f

    # phase (a): monic normal-form monomials of low degree, their c-shifts,
    # and user-registered candidates
    cand_list = []
    for mono in alg.normal_monomials(min(degree_bound, 2)):
        if sum(mono) == 0:
            continue
        m = ring.monomial(mono)
        cand_list.append(m)
        cand_list.append(m - one)
    cand_list.extend(candidates)
    for f in cand_list:
        witness = proper_stable(f)
        if witness is not None:
            return SimplicityVerdict("refuted", witness, degree_bound, samples, seed)

    # phase (b): pseudorandom nonzero elements of bounded degree
    rng = random.Random(seed)
    monomials = [m for m in alg.normal_monomials(degree_bound)]
    parse_cache = {}
    from .parsing import parse_ratfunc

    def coeff(text):
        if text not in parse_cache:
            parse_cache[text] = parse_ratfunc(
                text, ring.field, ring.coefficient_symbols
            )
        return parse_cache[text]

    for _ in range(samples):
        f = ring.zero()
        for attempt in range(8):
            terms = rng.randint(1, 3)
            f = ring.zero()
            for _t in range(terms):
                mono = monomials[rng.randrange(len(monomials))]
                f = f + ring.monomial(mono, coeff(rng.choice(_COEFF_POOL)))
            f = alg.reduce(f)
            if f:
                break
        if not f:
            continue
        witness = proper_stable(f)
        if witness is not None:
            return SimplicityVerdict("refuted", witness, degree_bound, samples, seed)
    return SimplicityVerdict("passed_bounded", None, degree_bound, samples, seed)


class SubalgebraSpan:
    """Linear span of bounded products of generators, with membership tests."""

    def __init__(self, alg: OperatorAlgebra, generators, degree_bound: int):
        self.alg = alg
        self.generators = [alg.reduce(g) for g in generators]
        self.degree_bound = degree_bound
        one = RatFunc.from_const(alg.ring.field, 1)
        self.tracker = SpanTracker(one)
        self.products = []  # (exponent tuple, reduced MPoly)
        self._build()

    def _build(self):
        alg = self.alg
        gens = [g for g in self.generators if g]
        degs = [max(g.total_degree(), 1) for g in gens]
        frontier = [((0,) * len(gens), alg.ring.one())]
        seen = {(0,) * len(gens)}
        queue = list(frontier)
        while queue:
            exps, value = queue.pop(0)
            self.products.append((exps, value))
            self.tracker.insert(dict(value.terms))
            total = sum(e * d for e, d in zip(exps, degs))
            for i, g in enumerate(gens):
                if total + degs[i] > self.degree_bound:
                    continue
                nexps = exps[:i] + (exps[i] + 1,) + exps[i + 1 :]
                if nexps in seen:
                    continue
                seen.add(nexps)
                queue.append((nexps, alg.reduce(value * g)))

    def contains(self, f: MPoly) -> bool:
        f = self.alg.reduce(f)
        if not f:
            return True
        return self.tracker.membership(dict(f.terms)) is not None

    def express(self, f: MPoly):
        """Combination {product_index: coeff in F} for a member, else None."""
        f = self.alg.reduce(f)
        if not f:
            return {}
        return self.tracker.membership(dict(f.terms))


def bounded_inverse(alg: OperatorAlgebra, element: MPoly, degree_bound: int):
    """Inverse of a unit within the bounded normal-monomial span, or None."""
    element = alg.reduce(element)
    if not element:
        return None
    one_rf = RatFunc.from_const(alg.ring.field, 1)
    tracker = SpanTracker(one_rf)
    monos = alg.normal_monomials(degree_bound)
    images = []
    for mono in monos:
        img = alg.reduce(element * alg.ring.monomial(mono))
        images.append(img)
        tracker.insert(dict(img.terms))
    combo = tracker.membership(dict(alg.ring.one().terms))
    if combo is None:
        return None
    out = alg.ring.zero()
    for idx, c in combo.items():
        out = out + alg.ring.monomial(monos[idx], c)
    return alg.reduce(out)


@dataclass
class PVReport:
    solution_ring: bool
    simplicity: SimplicityVerdict
    constants: RingConstants
    minimality: bool
    degree_bound: int

    @property
    def verdict(self):
        return (
            self.solution_ring
            and self.simplicity.status != "refuted"
            and self.constants.equals_base_constants
            and self.minimality
        )

    def describe(self):
        return {
            "solution_ring": self.solution_ring,
            "simplicity": self.simplicity.describe(),
            "constants": self.constants.describe(),
            "minimality_generated_by_fundamental": self.minimality,
            "degree_bound": self.degree_bound,
            "verdict": self.verdict,
        }


def verify_solution_ring(target, module: CModule, degree_bound: int) -> bool:
    """n independent solutions with invertible matrix exist in the ring.

    SolutionRing inputs are checked exactly through their fundamental
    marking; plain OperatorAlgebra inputs get a degree-bounded search.
    """
    if isinstance(target, SolutionRing):
        if target.module.matrix != module.matrix:
            raise SettingMismatch("ring was built for a different module")
        checks = target.structural_checks()
        return checks["fundamental_equation"] and checks["determinant_unit"] and checks["nonzero"]
    alg = target
    sols, _ = ring_valued_solutions(alg, module.matrix, degree_bound)
    n = module.rank
    if len(sols) < n:
        return False
    Y = [[sols[j][i] for j in range(n)] for i in range(n)]
    det = mpoly_det(Y)
    return bounded_inverse(alg, det, degree_bound) is not None


def pv_verify(
    sol_ring: SolutionRing,
    module: CModule,
    degree_bound: int = 8,
    simplicity_degree: int = 3,
    samples: int = 25,
    seed: int = 0,
) -> PVReport:
    """Solution ring + not refuted simple + constants k + minimality certificate."""
    is_sol = verify_solution_ring(sol_ring, module, degree_bound)
    simplicity = simplicity_check(sol_ring, simplicity_degree, samples, seed)
    consts = ring_constants(sol_ring, degree_bound)
    gens = [sol_ring.fundamental[i][j] for i in range(sol_ring.rank) for j in range(sol_ring.rank)]
    gens.append(sol_ring.det_inverse)
    span = SubalgebraSpan(sol_ring.algebra, gens, degree_bound)
    minimality = all(
        span.contains(sol_ring.ring.variable(v)) for v in sol_ring.ring.variables
    )
    return PVReport(is_sol, simplicity, consts, minimality, degree_bound)


@dataclass
class RingMorphism:
    source: SolutionRing
    target: SolutionRing
    assignment: dict  # source variable name -> MPoly over target
    operator_commutes: bool
    respects_relations: bool
    surjective: bool

    @property
    def valid(self):
        return self.operator_commutes and self.respects_relations

    def apply(self, f: MPoly) -> MPoly:
        img = f.substitute(self.target.ring, {
            v: self.assignment[v] for v in self.source.ring.variables
        })
        return self.target.algebra.reduce(img)

    def image_span(self, degree_bound: int) -> SubalgebraSpan:
        return SubalgebraSpan(
            self.target.algebra,
            [self.assignment[v] for v in self.source.ring.variables],
            degree_bound,
        )

    def describe(self):
        from .parsing import format_mpoly

        return {
            "assignment": {v: format_mpoly(img) for v, img in self.assignment.items()},
            "operator_commutes": self.operator_commutes,
            "respects_relations": self.respects_relations,
            "surjective": self.surjective,
        }


def canonical_morphism(
    universal: SolutionRing,
    target: SolutionRing,
    degree_bound: int,
    transform=None,
) -> RingMorphism:
    """Morphism U -> R sending X to a fundamental solution matrix found in R.

    transform, when given, is an invertible k-matrix mixing the discovered
    solution basis, exhibiting a different witness for the same image.
    """
    if universal.module.matrix != target.module.matrix:
        raise SettingMismatch("rings belong to different modules")
    n = universal.rank
    sols, _ = ring_valued_solutions(
        target.algebra, universal.module.matrix, degree_bound
    )
    if len(sols) < n:
        raise SearchExhausted(
            f"found {len(sols)} independent solutions in the target, need {n}"
        )
    columns = [sols[j] for j in range(n)]
    if transform is not None:
        field = target.ring.field
        new_columns = []
        for j in range(n):
            col = [target.ring.zero() for _ in range(n)]
            for l in range(n):
                c = field.coerce(transform[l][j])
                if c:
                    coeff = RatFunc.from_const(field, c)
                    col = [
                        col[i] + columns[l][i].coeff_scale(coeff) for i in range(n)
                    ]
            new_columns.append(tuple(col))
        columns = new_columns
    Y = [[columns[j][i] for j in range(n)] for i in range(n)]
    det = mpoly_det(Y)
    det_inv = bounded_inverse(target.algebra, det, degree_bound)
    if det_inv is None:
        raise SearchExhausted("no bounded inverse for the candidate determinant")

    assignment = {}
    for i in range(n):
        for j in range(n):
            assignment[f"x{i + 1}{j + 1}"] = target.algebra.reduce(Y[i][j])
    assignment["d"] = det_inv

    # operator equivariance on every generator
    ok_op = True
    for v in universal.ring.variables:
        img_of_action = universal.algebra.action[v].substitute(
            target.ring, assignment
        )
        lhs = target.algebra.act(assignment[v])
        if lhs != target.algebra.reduce(img_of_action):
            ok_op = False
            break
    ok_rel = True
    for g in universal.algebra.relations.basis:
        img = g.substitute(target.ring, assignment)
        if target.algebra.reduce(img):
            ok_rel = False
            break
    span = SubalgebraSpan(target.algebra, list(assignment.values()), degree_bound)
    surjective = all(
        span.contains(target.ring.variable(v)) for v in target.ring.variables
    )
    return RingMorphism(universal, target, assignment, ok_op, ok_rel, surjective)


def same_image_subalgebra(m1: RingMorphism, m2: RingMorphism, degree_bound: int) -> bool:
    """Images of two morphisms coincide as subalgebras (mutual membership)."""
    s1 = m1.image_span(degree_bound)
    s2 = m2.image_span(degree_bound)
    return all(s2.contains(v) for v in m1.assignment.values()) and all(
        s1.contains(v) for v in m2.assignment.values()
    )


# ---------------------------------------------------------------------------
# constants extension (rebase)


def coerce_ratfunc(rf: RatFunc, new_field) -> RatFunc:
    return rf.map_coeffs(new_field, new_field.coerce)


def coerce_mpoly(f: MPoly, new_ring: PolyRing) -> MPoly:
    return f.map_coefficients(
        lambda c: coerce_ratfunc(c, new_ring.field), new_ring
    )


def extend_constants(module: CModule, sol_ring: SolutionRing, generator: str, min_poly):
    """Rebuild module and ring over ell(t), ell = QQ[alpha]/(min_poly).

    min_poly is given by ascending QQ coefficients; degree 1 polynomials are
    rejected (not an extension), degrees 2 and 3 are certified irreducible by
    the rational root test, higher degrees are trusted as declared.
    """
    ell = NumberField(generator, min_poly)
    new_setting = Setting(module.setting.kind, ell)
    new_matrix = fmatrix.apply_entrywise(module.matrix, lambda x: coerce_ratfunc(x, ell))
    new_module = CModule(new_setting, new_matrix)

    old_ring = sol_ring.ring
    symbols = {generator: ell.alpha}
    new_ring = PolyRing(old_ring.variables, ell, old_ring.order, symbols)
    new_relations = IdealGB.from_generators(
        new_ring, [coerce_mpoly(g, new_ring) for g in sol_ring.algebra.relations.generators]
    )
    new_action = {
        v: coerce_mpoly(img, new_ring) for v, img in sol_ring.algebra.action.items()
    }
    new_alg = OperatorAlgebra(new_ring, new_relations, new_action, new_setting)
    n = sol_ring.rank
    fundamental = tuple(
        tuple(coerce_mpoly(sol_ring.fundamental[i][j], new_ring) for j in range(n))
        for i in range(n)
    )
    new_sr = SolutionRing(
        new_alg, new_module, fundamental, coerce_mpoly(sol_ring.det_inverse, new_ring)
    )
    checks = new_sr.structural_checks()
    if not all(checks.values()):
        raise AssertionError(f"rebased ring failed structural checks: {checks}")
    return new_module, new_sr


# ---------------------------------------------------------------------------
# equivariant morphisms between rank-one quotient rings (exhaustive at bound)


def _field_roots(coeffs, field):
    """All roots in k of a k-coefficient polynomial (ascending coeffs).

    Complete for QQ (rational root theorem) and for degree <= 2 over
    quadratic extensions; other shapes raise SearchExhausted.
    """
    cs = list(coeffs)
    while cs and not cs[-1]:
        cs.pop()
    if not cs or len(cs) == 1:
        return []
    if all(
        (c == 0 or getattr(c, "is_rational", lambda: True)()) for c in cs
    ) and not isinstance(field, NumberField):
        from fractions import Fraction

        return rational_roots([Fraction(c) for c in cs])
    if len(cs) == 2:
        return [-cs[0] / cs[1]]
    if len(cs) == 3:
        a, b, c = cs[2], cs[1], cs[0]
        disc = b * b - 4 * a * c
        root = field_sqrt(field, disc)
        if root is None:
            return []
        inv2a = (a + a).inverse() if hasattr(a, "inverse") else 1 / (2 * a)
        r1 = (-b + root) * inv2a
        r2 = (-b - root) * inv2a
        return [r1] if r1 == r2 else [r1, r2]
    raise SearchExhausted("root search implemented only up to degree 2 over extensions")


def equivariant_morphisms(source: SolutionRing, target: SolutionRing, degree_bound: int):
    """All operator-equivariant algebra morphisms source -> target, exhaustive
    within the degree bound, for rank-one rings.

    The image of the fundamental generator must solve the module equation in
    the target; the bounded solution space is one-dimensional for the rings
    handled here, so the remaining relation conditions become a univariate
    polynomial condition over k solved exactly.
    """
    if source.rank != 1:
        raise SearchExhausted("morphism search implemented for rank-one rings")
    alg_t = target.algebra
    field = alg_t.ring.field
    sols, _ = ring_valued_solutions(alg_t, source.module.matrix, degree_bound)
    if len(sols) != 1:
        raise SearchExhausted(
            f"solution space has dimension {len(sols)}, expected 1"
        )
    w1 = sols[0][0]
    # relations of the source not involving d, expressed in x11 alone
    x_name = "x11"
    d_name = "d"
    x_index = source.ring.index[x_name]
    d_index = source.ring.index[d_name]
    x_relations = []
    for g in source.algebra.relations.basis:
        if all(m[d_index] == 0 for m in g.terms):
            x_relations.append(g)
    morphisms = []
    # lambda-conditions: g(lambda * w1) == 0 in the target for each relation
    lam_polys = []
    for g in x_relations:
        by_lambda = {}
        for mono, coeff in g.terms.items():
            e = mono[x_index]
            img = alg_t.reduce((w1 ** e).coeff_scale(coeff))
            acc = by_lambda.get(e, alg_t.ring.zero())
            by_lambda[e] = acc + img
        # sum over e of lambda^e * by_lambda[e] == 0: per target monomial and
        # per t-power one k-polynomial condition in lambda
        max_e = max(by_lambda)
        monos = sorted({m for v in by_lambda.values() for m in v.terms})
        for m in monos:
            entries = [
                by_lambda.get(e, alg_t.ring.zero()).terms.get(m) for e in range(max_e + 1)
            ]
            from .poly import poly_lcm

            den = Poly.one(field)
            for ent in entries:
                if ent is not None:
                    den = poly_lcm(den, ent.den)
            cleared = [
                (ent.num * (den // ent.den)) if ent is not None else Poly.zero(field)
                for ent in entries
            ]
            max_deg = max((p.degree for p in cleared), default=-1)
            for power in range(max_deg + 1):
                lam_poly = [
                    (p.coeffs[power] if power <= p.degree else field.zero)
                    for p in cleared
                ]
                if any(lam_poly):
                    lam_polys.append(Poly(field, lam_poly))
    if not lam_polys:
        raise SearchExhausted("no relation conditions; refusing unbounded family")
    g = lam_polys[0]
    for p in lam_polys[1:]:
        g = poly_gcd(g, p)
    if not g:
        raise SearchExhausted("relation conditions vanish identically")
    roots = [r for r in _field_roots(g.coeffs, field) if r]
    for lam in roots:
        w = alg_t.reduce(w1.coeff_scale(RatFunc.from_const(field, lam)))
        w_inv = bounded_inverse(alg_t, w, degree_bound)
        if w_inv is None:
            continue
        assignment = {x_name: w, d_name: w_inv}
        ok_op = True
        for v in source.ring.variables:
            img_action = source.algebra.action[v].substitute(
                alg_t.ring, assignment, coeff_map=lambda c: c
            )
            if alg_t.act(assignment[v]) != alg_t.reduce(img_action):
                ok_op = False
                break
        ok_rel = all(
            not alg_t.reduce(gg.substitute(alg_t.ring, assignment))
            for gg in source.algebra.relations.basis
        )
        span = SubalgebraSpan(alg_t, [w, w_inv], degree_bound)
        surjective = all(
            span.contains(alg_t.ring.variable(v)) for v in alg_t.ring.variables
        )
        if ok_op and ok_rel:
            morphisms.append(
                RingMorphism(source, target, assignment, ok_op, ok_rel, surjective)
            )
    return morphisms

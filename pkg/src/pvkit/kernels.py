"""Degree-bounded exact solving of operator-linear systems over F = k(t).

Every constants/solution-space computation reduces to: find all vectors c
over F with c' = B c (differential) or sigma(c) = B c (difference), subject
to optional F-linear side constraints, where entries of c are bounded in
numerator and denominator degree.  The search is made linear-algebraic by a
universal denominator argument:

* differential: any solution with reduced denominator degree <= b has its
  poles among the poles of B, each of order <= b, so the denominator divides
  delta^b where delta is the monic common denominator of B;
* difference: a pole of a solution must, within at most b backward shifts,
  reach a pole of B, so the denominator divides the product of delta(t-j)^b
  for j = 1..b.

Writing c = p / D with that fixed D turns the system into an exact linear
system over k in the coefficients of p, solved by Gaussian elimination.
Solutions beyond the bound are not searched; callers report the bound.
"""

from __future__ import annotations

from .errors import SearchExhausted
from .fmatrix import kron
from .linalg import sparse_kernel
from .mpoly import MPoly
from .poly import Poly, poly_lcm
from .ratfunc import RatFunc
from .setting import OperatorAlgebra, Setting


def _common_denominator(field, entries):
    d = Poly.one(field)
    for e in entries:
        d = poly_lcm(d, e.den)
    return d


def universal_denominator(setting: Setting, B, bound: int) -> Poly:
    field = setting.constant_field()
    delta = _common_denominator(field, [x for row in B for x in row])
    if bound == 0 or delta.degree == 0:
        return Poly.one(field)
    if setting.is_differential:
        return delta ** bound
    out = Poly.one(field)
    for j in range(1, bound + 1):
        out = out * (delta.shift(-j) ** bound)
    return out


def bounded_operator_kernel(setting: Setting, B, bound: int, constraints=None):
    """k-basis of bounded solutions of c' = B c resp. sigma(c) = B c.

    B is a square matrix over F; constraints is an optional list of F-rows L
    with L . c = 0 added to the system.  Returns tuples of RatFunc.
    """
    field = setting.constant_field()
    n = len(B)
    delta = _common_denominator(field, [x for row in B for x in row])
    b_poly = [[(B[i][j] * RatFunc.from_poly(delta)).num for j in range(n)] for i in range(n)]
    D = universal_denominator(setting, B, bound)
    ndeg = bound + D.degree
    width = n * (ndeg + 1)

    def unknown(l, e):
        return l * (ndeg + 1) + e

    t_pows = [Poly(field, tuple([field.zero] * e + [field.one])) for e in range(ndeg + 1)]
    contribs = []  # per equation j: dict unknown -> Poly
    if setting.is_differential:
        dD = D.derivative()
        deltaD = delta * D
        deltadD = delta * dD
        for j in range(n):
            row = {}
            for e in range(ndeg + 1):
                # delta*D*p_j' - delta*D'*p_j - sum_l b_jl*D*p_l = 0
                own = deltaD * t_pows[e].derivative() - deltadD * t_pows[e]
                own = own - b_poly[j][j] * D * t_pows[e]
                if own:
                    row[unknown(j, e)] = own
                for l in range(n):
                    if l == j:
                        continue
                    c = -(b_poly[j][l] * D * t_pows[e])
                    if c:
                        row[unknown(l, e)] = c
            contribs.append(row)
    else:
        Dp = D.shift(1)
        deltaD = delta * D
        shifted = [t_pows[e].shift(1) for e in range(ndeg + 1)]
        for j in range(n):
            row = {}
            for e in range(ndeg + 1):
                own = deltaD * shifted[e] - b_poly[j][j] * Dp * t_pows[e]
                if own:
                    row[unknown(j, e)] = own
                for l in range(n):
                    if l == j:
                        continue
                    c = -(b_poly[j][l] * Dp * t_pows[e])
                    if c:
                        row[unknown(l, e)] = c
            contribs.append(row)

    rows = []
    for row in contribs:
        max_deg = max((p.degree for p in row.values()), default=-1)
        for power in range(max_deg + 1):
            r = {}
            for col, p in row.items():
                if power <= p.degree and p.coeffs[power]:
                    r[col] = p.coeffs[power]
            if r:
                rows.append(r)
    if constraints:
        for L in constraints:
            dl = _common_denominator(field, list(L))
            lam = [(x * RatFunc.from_poly(dl)).num for x in L]
            row = {}
            for l in range(n):
                pl = lam[l]
                if not pl:
                    continue
                for e in range(ndeg + 1):
                    row[unknown(l, e)] = pl * t_pows[e]
            max_deg = max((p.degree for p in row.values()), default=-1)
            for power in range(max_deg + 1):
                r = {}
                for col, p in row.items():
                    if power <= p.degree and p.coeffs[power]:
                        r[col] = p.coeffs[power]
                if r:
                    rows.append(r)

    kern = sparse_kernel(rows, width, field.zero, field.one)
    solutions = []
    for vec in kern:
        comps = []
        for l in range(n):
            p = Poly(field, tuple(vec[unknown(l, e)] for e in range(ndeg + 1)))
            comps.append(RatFunc(p, D))
        solutions.append(tuple(comps))
    for sol in solutions:
        _verify_solution(setting, B, sol, constraints)
    return solutions


def _verify_solution(setting, B, sol, constraints):
    n = len(B)
    for i in range(n):
        acc = None
        for j in range(n):
            term = B[i][j] * sol[j]
            acc = term if acc is None else acc + term
        lhs = setting.apply(sol[i])
        if lhs != acc:
            raise AssertionError("bounded kernel returned a non-solution")
    for L in constraints or ():
        acc = None
        for j in range(n):
            term = L[j] * sol[j]
            acc = term if acc is None else acc + term
        if acc and not acc.is_zero():
            raise AssertionError("bounded kernel violated a constraint")


def action_matrix(alg: OperatorAlgebra, monomials):
    """Matrix of the operator on the span of the given normal monomials.

    Entry [nu][mu] is the coefficient of nu in the operator image of mu.
    Raises SearchExhausted when an image leaves the span.
    """
    index = {m: i for i, m in enumerate(monomials)}
    zero = RatFunc.from_const(alg.ring.field, 0)
    cols = []
    for mu in monomials:
        img = alg._monomial_image(mu)
        col = [zero] * len(monomials)
        for m, c in img.terms.items():
            if m not in index:
                raise SearchExhausted(
                    "operator image leaves the bounded monomial span"
                )
            col[index[m]] = c
        cols.append(col)
    return tuple(tuple(cols[j][i] for j in range(len(monomials))) for i in range(len(monomials)))


def ring_valued_solutions(alg: OperatorAlgebra, module_matrix, bound: int):
    """k-basis of solutions y in R^n of the module equation with entries in R.

    Entries are F-combinations of normal monomials of degree <= bound with
    coefficient functions bounded as in bounded_operator_kernel.  Returns
    (solutions, monomials) where each solution is a tuple of MPoly.
    """
    from .fmatrix import inverse

    setting = alg.setting
    field = alg.ring.field
    monomials = alg.normal_monomials(bound)
    W = len(monomials)
    n = len(module_matrix)
    G = action_matrix(alg, monomials)
    if setting.is_differential:
        # c'_{(i,nu)} = sum_j A_ij c_{(j,nu)} - sum_mu G_{nu mu} c_{(i,mu)}
        zero = RatFunc.from_const(field, 0)
        big = []
        for i in range(n):
            for nu in range(W):
                row = []
                for j in range(n):
                    for mu in range(W):
                        val = zero
                        if nu == mu:
                            val = val + module_matrix[i][j]
                        if i == j:
                            val = val - G[nu][mu]
                        row.append(val)
                big.append(tuple(row))
        big = tuple(big)
    else:
        Ginv = inverse(G)
        big = kron(module_matrix, Ginv)
    kern = bounded_operator_kernel(setting, big, bound)
    solutions = []
    for vec in kern:
        comps = []
        for i in range(n):
            terms = {}
            for w, mono in enumerate(monomials):
                c = vec[i * W + w]
                if not c.is_zero():
                    terms[mono] = c
            comps.append(MPoly(alg.ring, terms))
        solutions.append(tuple(comps))
    return solutions, monomials

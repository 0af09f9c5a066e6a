"""Dualizable modules as connection/transition matrices, and their constants.

A module of rank n over F is an n x n matrix A in the convention that the
solution equation is v' = A v (differential) resp. sigma(v) = A v
(difference); difference modules must have invertible A.  Tensor, dual and
direct sum act on matrices (Kronecker sum/product, negative transpose or
transpose inverse, block diagonal).  The constants functor is realized as a
degree-bounded exact kernel computation; every basis carries its bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import fmatrix
from .errors import NotDualizable, SettingMismatch
from .kernels import bounded_operator_kernel
from .linalg import matrix_rank
from .ratfunc import RatFunc
from .setting import Setting


@dataclass(frozen=True)
class CModule:
    setting: Setting
    matrix: tuple

    def __post_init__(self):
        n = len(self.matrix)
        for row in self.matrix:
            if len(row) != n:
                raise ValueError("connection matrix must be square")
        if not self.setting.is_differential:
            if fmatrix.det(self.matrix).is_zero():
                raise NotDualizable("difference module needs invertible matrix")

    @property
    def rank(self):
        return len(self.matrix)

    @property
    def field(self):
        return self.setting.constant_field()

    def describe(self):
        from .parsing import format_ratfunc

        return {
            "setting": self.setting.describe(),
            "rank": self.rank,
            "matrix": [[format_ratfunc(x) for x in row] for row in self.matrix],
        }


@dataclass(frozen=True)
class ConstantsBasis:
    module: CModule
    vectors: tuple
    degree_bound: int
    complete_up_to_bound: bool = True

    @property
    def dimension(self):
        return len(self.vectors)

    def describe(self):
        from .parsing import format_ratfunc

        return {
            "dimension": self.dimension,
            "degree_bound": self.degree_bound,
            "complete_up_to_bound": self.complete_up_to_bound,
            "vectors": [[format_ratfunc(x) for x in v] for v in self.vectors],
        }


def cmodule(setting: Setting, rows) -> CModule:
    return CModule(setting, fmatrix.mat(rows))


def unit_object(setting: Setting) -> CModule:
    field = setting.constant_field()
    value = 0 if setting.is_differential else 1
    return CModule(setting, fmatrix.mat([[RatFunc.from_const(field, value)]]))


def trivial_module(setting: Setting, dim: int) -> CModule:
    """iota(V) for dim V = dim: zero matrix resp. identity matrix."""
    field = setting.constant_field()
    if setting.is_differential:
        return CModule(setting, fmatrix.zeros(field, dim))
    return CModule(setting, fmatrix.identity(field, dim))


def _same_setting(m: CModule, n: CModule):
    if m.setting != n.setting:
        raise SettingMismatch("modules come from different settings")


def tensor(m: CModule, n: CModule) -> CModule:
    _same_setting(m, n)
    if m.setting.is_differential:
        return CModule(m.setting, fmatrix.kron_sum(m.matrix, n.matrix, m.field))
    return CModule(m.setting, fmatrix.kron(m.matrix, n.matrix))


def dual(m: CModule) -> CModule:
    at = fmatrix.transpose(m.matrix)
    if m.setting.is_differential:
        return CModule(m.setting, fmatrix.mat_neg(at))
    return CModule(m.setting, fmatrix.inverse(at))


def direct_sum(m: CModule, n: CModule) -> CModule:
    _same_setting(m, n)
    return CModule(m.setting, fmatrix.block_diag(m.field, m.matrix, n.matrix))


def constants(m: CModule, degree_bound: int) -> ConstantsBasis:
    """Basis of bounded rational solutions of the module equation."""
    sols = bounded_operator_kernel(m.setting, m.matrix, degree_bound)
    return ConstantsBasis(m, tuple(sols), degree_bound)


def hom_space(m: CModule, n: CModule, degree_bound: int) -> ConstantsBasis:
    """Morphisms m -> n as constants of n (x) dual(m).

    Vectors use row-major indices (i, j) -> i*rank(m) + j; reshaped, the
    (i, j) entry is row i over n and column j over m of the intertwining
    matrix.
    """
    return constants(tensor(n, dual(m)), degree_bound)


def hom_basis_matrices(m: CModule, n: CModule, basis: ConstantsBasis):
    nm, nn = m.rank, n.rank
    out = []
    for vec in basis.vectors:
        out.append(fmatrix.mat([[vec[i * nm + j] for j in range(nm)] for i in range(nn)]))
    return out


def constants_independent(m: CModule, basis: ConstantsBasis) -> bool:
    """True iff the constant vectors are linearly independent over F.

    This realizes the statement that k-independent constants stay
    F-independent: the check must pass for every computed basis.
    """
    if not basis.vectors:
        return True
    one = RatFunc.from_const(m.field, 1)
    rows = [list(v) for v in basis.vectors]
    return matrix_rank(rows, m.rank, one) == len(basis.vectors)


def intertwines(m: CModule, n: CModule, matrix) -> bool:
    """Exact check that matrix defines a morphism m -> n."""
    setting = m.setting
    if setting.is_differential:
        lhs = fmatrix.apply_entrywise(matrix, lambda x: x.derivative())
        rhs = fmatrix.mat_add(
            fmatrix.mat_mul(n.matrix, matrix),
            fmatrix.mat_neg(fmatrix.mat_mul(matrix, m.matrix)),
        )
        return lhs == rhs
    lhs = fmatrix.apply_entrywise(matrix, lambda x: x.shift(1))
    rhs = fmatrix.mat_mul(fmatrix.mat_mul(n.matrix, matrix), fmatrix.inverse(m.matrix))
    return lhs == rhs

"""Small dense matrix helpers over the field of rational functions."""

from __future__ import annotations

from .errors import NotDualizable
from .ratfunc import RatFunc


def mat(rows):
    return tuple(tuple(r) for r in rows)


def identity(field, n):
    one = RatFunc.from_const(field, 1)
    zero = RatFunc.from_const(field, 0)
    return mat([[one if i == j else zero for j in range(n)] for i in range(n)])


def zeros(field, n, m=None):
    zero = RatFunc.from_const(field, 0)
    m = n if m is None else m
    return mat([[zero] * m for _ in range(n)])


def transpose(a):
    return tuple(zip(*a))


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = a[i][0] * b[0][j]
            for l in range(1, k):
                acc = acc + a[i][l] * b[l][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_scale(a, c):
    return tuple(tuple(x * c for x in row) for row in a)


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_neg(a):
    return tuple(tuple(-x for x in row) for row in a)


def det(a):
    n = len(a)
    if n == 1:
        return a[0][0]
    if n <= 3:
        acc = None
        for j in range(n):
            if a[0][j].is_zero():
                continue
            minor = [row[:j] + row[j + 1 :] for row in a[1:]]
            term = a[0][j] * det(minor)
            if j % 2:
                term = -term
            acc = term if acc is None else acc + term
        if acc is None:
            return RatFunc.from_const(a[0][0].field, 0)
        return acc
    # Gaussian elimination with exact division for larger matrices
    field = a[0][0].field
    rows = [list(r) for r in a]
    sign = 1
    acc = RatFunc.from_const(field, 1)
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            return RatFunc.from_const(field, 0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            sign = -sign
        pv = rows[col][col]
        acc = acc * pv
        inv = pv.inverse()
        for i in range(col + 1, n):
            if rows[i][col]:
                factor = rows[i][col] * inv
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[col])]
    if sign < 0:
        acc = -acc
    return acc


def adjugate(a):
    n = len(a)
    if n == 1:
        return mat([[RatFunc.from_const(a[0][0].field, 1)]])
    cof = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = [r[:j] + r[j + 1 :] for k, r in enumerate(a) if k != i]
            d = det(minor)
            if (i + j) % 2:
                d = -d
            row.append(d)
        cof.append(row)
    return transpose(mat(cof))


def inverse(a):
    """Inverse over F by Gaussian elimination on [A | I]."""
    from .linalg import rref

    n = len(a)
    field = a[0][0].field
    one = RatFunc.from_const(field, 1)
    zero = RatFunc.from_const(field, 0)
    aug = [list(a[i]) + [one if j == i else zero for j in range(n)] for i in range(n)]
    red, pivots = rref(aug, 2 * n, one)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise NotDualizable("matrix is singular over F")
    return mat(row[n:] for row in red)


def trace(a):
    acc = a[0][0]
    for i in range(1, len(a)):
        acc = acc + a[i][i]
    return acc


def kron(a, b):
    """Kronecker product with row-major composite indices (i*nb + k)."""
    na, nb = len(a), len(b)
    ma, mb = len(a[0]), len(b[0])
    out = []
    for i in range(na):
        for k in range(nb):
            row = []
            for j in range(ma):
                for l in range(mb):
                    row.append(a[i][j] * b[k][l])
            out.append(tuple(row))
    return tuple(out)


def kron_sum(a, b, field):
    """A (x) I + I (x) B, the tensor-product connection matrix."""
    ia = identity(field, len(a))
    ib = identity(field, len(b))
    return mat_add(kron(a, ib), kron(ia, b))


def block_diag(field, a, b):
    na, nb = len(a), len(b)
    zero = RatFunc.from_const(field, 0)
    out = []
    for i in range(na):
        out.append(tuple(list(a[i]) + [zero] * nb))
    for i in range(nb):
        out.append(tuple([zero] * na + list(b[i])))
    return tuple(out)


def apply_entrywise(a, fn):
    return tuple(tuple(fn(x) for x in row) for row in a)

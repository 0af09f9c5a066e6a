"""Exact Gaussian elimination over any field whose elements support
+, -, *, / and truthiness as a zero test (Fraction, number-field elements,
rational functions)."""

from __future__ import annotations


def rref(rows, width, one):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(width):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = one / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def kernel_basis(rows, width, zero, one):
    """Basis of the right kernel of the matrix given by rows."""
    red, pivots = rref(rows, width, one)
    pivot_set = set(pivots)
    free_cols = [c for c in range(width) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        vec = [zero] * width
        vec[fc] = one
        for r, pc in enumerate(pivots):
            val = red[r][fc]
            if val:
                vec[pc] = -val
        basis.append(vec)
    return basis


def solve(rows, rhs, width, zero, one):
    """One solution of rows * x = rhs, or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, width + 1, one)
    if width in pivots:
        return None
    x = [zero] * width
    for r, pc in enumerate(pivots):
        x[pc] = red[r][width]
    return x


def matrix_rank(rows, width, one):
    _, pivots = rref(rows, width, one)
    return len(pivots)


def sparse_kernel(rows, width, zero, one):
    """Right-kernel basis for rows given as sparse {col: value} dicts.

    Forward elimination keeps each stored row's pivot at its maximum column,
    so kernel vectors come out by substitution in ascending pivot order.
    """
    stored = {}  # pivot col -> normalized sparse row
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            p = max(row)
            hit = stored.get(p)
            if hit is None:
                inv = one / row[p]
                stored[p] = {c: v * inv for c, v in row.items()}
                break
            factor = row.pop(p)
            for c, v in hit.items():
                if c == p:
                    continue
                acc = row.get(c)
                s = -(factor * v) if acc is None else acc - factor * v
                if s:
                    row[c] = s
                else:
                    row.pop(c, None)
    free_cols = [c for c in range(width) if c not in stored]
    pivot_order = sorted(stored)
    basis = []
    for fc in free_cols:
        x = {fc: one}
        for p in pivot_order:
            if p < fc:
                continue
            acc = zero
            for c, v in stored[p].items():
                if c == p:
                    continue
                xc = x.get(c)
                if xc is not None and xc:
                    acc = acc + v * xc
            if acc:
                x[p] = -acc
        vec = [zero] * width
        for c, v in x.items():
            vec[c] = v
        basis.append(vec)
    return basis


class SpanTracker:
    """Incremental echelon form over sparse vectors with combination tracking.

    Vectors are dicts keyed by hashable, totally ordered coordinates.  insert
    returns None when the vector enlarges the span; otherwise it returns a
    combination {call_index: coeff} expressing the vector in previously
    inserted ones, so callers can turn dependencies into relations.
    """

    def __init__(self, one):
        self.one = one
        self.rows = {}  # pivot -> (vector dict, combo dict)
        self.calls = 0

    def _reduce(self, vec):
        vec = dict(vec)
        combo = {}
        while vec:
            pivot = max(vec)
            if pivot not in self.rows:
                return vec, combo, pivot
            rvec, rcombo = self.rows[pivot]
            factor = vec[pivot]
            for k, v in rvec.items():
                acc = vec.get(k)
                s = -(factor * v) if acc is None else acc - factor * v
                if s:
                    vec[k] = s
                else:
                    vec.pop(k, None)
            for k, v in rcombo.items():
                acc = combo.get(k)
                s = factor * v if acc is None else acc + factor * v
                if s:
                    combo[k] = s
                else:
                    combo.pop(k, None)
        return vec, combo, None

    def insert(self, vec):
        """Add a vector; returns None if independent, else its combination."""
        idx = self.calls
        self.calls += 1
        vec, combo, pivot = self._reduce(vec)
        if pivot is None:
            return combo
        inv = self.one / vec[pivot]
        nvec = {k: v * inv for k, v in vec.items()}
        # vec_reduced = input - sum(combo[k] * input_k), so normalize both sides
        ncombo = {k: -(v * inv) for k, v in combo.items()}
        ncombo[idx] = inv
        self.rows[pivot] = (nvec, ncombo)
        return None

    def membership(self, vec):
        """Combination expressing vec in inserted vectors, or None."""
        vec, combo, pivot = self._reduce(vec)
        if pivot is None:
            return combo
        return None

    @property
    def dimension(self):
        return len(self.rows)

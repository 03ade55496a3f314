"""Smith normal form and small exact integer-matrix utilities.

Matrices are lists of lists of Python ints.  Sizes here are tiny (at most a
few dozen rows), so the classic pivot-and-reduce algorithm is plenty.
"""

from __future__ import annotations

from fractions import Fraction


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        for k in range(inner):
            c = ai[k]
            if c:
                bk = b[k]
                oi = out[i]
                for j in range(cols):
                    oi[j] += c * bk[j]
    return out


def mat_vec(a, v):
    return [sum(c * x for c, x in zip(row, v)) for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def det(a):
    """Determinant by fraction-free elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def int_rank(a):
    if not a or not a[0]:
        return 0
    m = [row[:] for row in a]
    rows, cols = len(m), len(m[0])
    rank = 0
    for col in range(cols):
        piv = None
        for i in range(rank, rows):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(rank + 1, rows):
            if m[i][col]:
                a_, b_ = m[rank][col], m[i][col]
                m[i] = [a_ * m[i][j] - b_ * m[rank][j] for j in range(cols)]
        rank += 1
        if rank == rows:
            break
    return rank


def invert_unimodular(u):
    """Exact inverse of an integer matrix with determinant +-1."""
    n = len(u)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(u)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    inv = []
    for row in aug:
        vals = row[n:]
        if any(v.denominator != 1 for v in vals):
            raise ValueError("matrix is not unimodular")
        inv.append([int(v) for v in vals])
    return inv


class _Worker:
    """Mutable SNF state: tracks m together with its transforms."""

    def __init__(self, a):
        self.rows = len(a)
        self.cols = len(a[0]) if self.rows else 0
        self.m = [row[:] for row in a]
        self.u = identity(self.rows)
        self.v = identity(self.cols)

    def row_op(self, i, j, q):
        self.m[i] = [x - q * y for x, y in zip(self.m[i], self.m[j])]
        self.u[i] = [x - q * y for x, y in zip(self.u[i], self.u[j])]

    def col_op(self, i, j, q):
        for r in range(self.rows):
            self.m[r][i] -= q * self.m[r][j]
        for r in range(self.cols):
            self.v[r][i] -= q * self.v[r][j]

    def swap_rows(self, i, j):
        self.m[i], self.m[j] = self.m[j], self.m[i]
        self.u[i], self.u[j] = self.u[j], self.u[i]

    def swap_cols(self, i, j):
        for r in range(self.rows):
            self.m[r][i], self.m[r][j] = self.m[r][j], self.m[r][i]
        for r in range(self.cols):
            self.v[r][i], self.v[r][j] = self.v[r][j], self.v[r][i]

    def negate_row(self, i):
        self.m[i] = [-x for x in self.m[i]]
        self.u[i] = [-x for x in self.u[i]]

    def min_entry(self, s):
        best = None
        for i in range(s, self.rows):
            for j in range(s, self.cols):
                x = self.m[i][j]
                if x and (best is None or abs(x) < abs(self.m[best[0]][best[1]])):
                    best = (i, j)
        return best

    def diagonalize_from(self, start):
        for s in range(start, min(self.rows, self.cols)):
            while True:
                best = self.min_entry(s)
                if best is None:
                    return
                if best[0] != s:
                    self.swap_rows(s, best[0])
                if best[1] != s:
                    self.swap_cols(s, best[1])
                if self.m[s][s] < 0:
                    self.negate_row(s)
                dirty = False
                for i in range(s + 1, self.rows):
                    if self.m[i][s]:
                        self.row_op(i, s, self.m[i][s] // self.m[s][s])
                        dirty = dirty or bool(self.m[i][s])
                for j in range(s + 1, self.cols):
                    if self.m[s][j]:
                        self.col_op(j, s, self.m[s][j] // self.m[s][s])
                        dirty = dirty or bool(self.m[s][j])
                if not dirty:
                    break


def smith_normal_form(a):
    """U, D, V with U*a*V = D, U and V unimodular, d1 | d2 | ... >= 0."""
    w = _Worker(a)
    w.diagonalize_from(0)
    n = min(w.rows, w.cols)
    # enforce the divisibility chain; each fix replaces d_s by gcd(d_s, d_{s+1})
    changed = True
    while changed:
        changed = False
        for s in range(n - 1):
            a_, b_ = w.m[s][s], w.m[s + 1][s + 1]
            if a_ and b_ and b_ % a_ != 0:
                w.col_op(s, s + 1, -1)
                w.diagonalize_from(s)
                changed = True
                break
    return w.u, w.m, w.v

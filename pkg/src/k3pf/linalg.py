"""Exact linear algebra over the field of rational functions in t.

Systems are solved by clearing each row to integer-polynomial entries and
running single-step fraction-free (Bareiss) elimination over Z[t], which
keeps every intermediate entry a genuine minor of the cleared matrix and so
bounds coefficient growth.  Pivots are chosen deterministically: columns are
processed left to right and, within a column, the nonzero entry of smallest
degree wins, ties broken by row index.  Free variables are set to zero, so a
consistent underdetermined system returns the solution selected by the
lowest-index pivots.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd

from .errors import ShapeError
from .intpoly import IntPoly
from .ratfunc import RationalFunction


class RFMatrix:
    """Dense matrix of RationalFunction entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows, cols, data=None):
        self.rows = rows
        self.cols = cols
        if data is None:
            self.data = [[RationalFunction.zero()] * cols for _ in range(rows)]
        else:
            if len(data) != rows or any(len(r) != cols for r in data):
                raise ShapeError("matrix data does not match declared shape")
            self.data = [[_as_rf(x) for x in row] for row in data]

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        if not rows:
            return cls(0, 0, [])
        return cls(len(rows), len(rows[0]), rows)

    @classmethod
    def from_entries(cls, rows, cols, entries):
        """Sparse constructor from {(i, j): value}."""
        m = cls(rows, cols)
        for (i, j), v in entries.items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise ShapeError(f"entry ({i}, {j}) out of bounds")
            m.data[i][j] = _as_rf(v)
        return m

    def __getitem__(self, ij):
        return self.data[ij[0]][ij[1]]

    def __setitem__(self, ij, v):
        self.data[ij[0]][ij[1]] = _as_rf(v)

    def row(self, i):
        return list(self.data[i])

    def column(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def mul_vector(self, xs):
        if len(xs) != self.cols:
            raise ShapeError("vector length does not match column count")
        out = []
        for i in range(self.rows):
            acc = RationalFunction.zero()
            for j in range(self.cols):
                a = self.data[i][j]
                if a:
                    acc = acc + a * xs[j]
            out.append(acc)
        return out

    def __eq__(self, other):
        if not isinstance(other, RFMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and \
            self.data == other.data

    def __repr__(self):
        return f"RFMatrix({self.rows}x{self.cols})"


def _as_rf(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, IntPoly):
        return RationalFunction(x)
    if isinstance(x, (int, Fraction)):
        return RationalFunction.from_fraction(Fraction(x))
    raise TypeError(f"cannot use {type(x).__name__} as a matrix entry")


def _cleared_int_rows(mat, rhs=None):
    """Rows scaled to IntPoly entries (lcm of denominators, content out)."""
    ncols = mat.cols + (1 if rhs is not None else 0)
    out = []
    for i in range(mat.rows):
        entries = mat.row(i)
        if rhs is not None:
            entries.append(_as_rf(rhs[i]))
        lcm = IntPoly.one()
        for e in entries:
            if not e.is_zero():
                g = lcm.gcd(e.den)
                lcm = lcm * e.den.exact_div(g)
        row = []
        for e in entries:
            if e.is_zero():
                row.append(IntPoly.zero())
            else:
                row.append(e.num * lcm.exact_div(e.den))
        c = 0
        for p in row:
            c = _int_gcd(c, p.content())
            if c == 1:
                break
        if c > 1:
            row = [p.exact_div_int(c) for p in row]
        if len(row) != ncols:
            raise ShapeError("ragged row")
        out.append(row)
    return out


class _Echelon:
    """Result of fraction-free forward elimination."""

    __slots__ = ("rows", "pivots", "ncols")

    def __init__(self, rows, pivots, ncols):
        self.rows = rows          # eliminated IntPoly rows, pivot order
        self.pivots = pivots      # list of (row_index, col_index)
        self.ncols = ncols


def _eliminate(int_rows, ncols, stop_col=None):
    """Bareiss elimination in place; returns the echelon structure.

    ``stop_col`` bounds the columns eligible for pivots; columns at or past
    it are carried along but never pivoted, which is how right-hand sides
    ride through.
    """
    rows = [list(r) for r in int_rows]
    nrows = len(rows)
    if stop_col is None:
        stop_col = ncols
    pivots = []
    prev_piv = IntPoly.one()
    used = [False] * nrows
    for col in range(stop_col):
        best = None
        for i in range(nrows):
            if used[i]:
                continue
            e = rows[i][col]
            if e.is_zero():
                continue
            if best is None or e.degree < rows[best][col].degree:
                best = i
        if best is None:
            continue
        piv_row = best
        piv = rows[piv_row][col]
        for i in range(nrows):
            if used[i] or i == piv_row:
                continue
            factor = rows[i][col]
            if factor.is_zero():
                # Bareiss still rescales untouched rows to keep exactness
                new_row = [(piv * x).exact_div(prev_piv) for x in rows[i]]
            else:
                base = rows[piv_row]
                new_row = [
                    (piv * rows[i][j] - factor * base[j]).exact_div(prev_piv)
                    for j in range(ncols)
                ]
            rows[i] = new_row
        used[piv_row] = True
        pivots.append((piv_row, col))
        prev_piv = piv
    return _Echelon(rows, pivots, ncols)


def rf_linear_solve(A, b):
    """Solve A x = b exactly; None when inconsistent.

    Free variables are pinned to zero, matching the deterministic pivot
    order (lowest column index first).
    """
    if len(b) != A.rows:
        raise ShapeError(
            f"rhs length {len(b)} does not match {A.rows} rows")
    if A.cols == 0:
        if any(_as_rf(x) for x in b):
            return None
        return []
    ech = _eliminate(_cleared_int_rows(A, b), A.cols + 1, stop_col=A.cols)
    piv_rows = {r for r, _ in ech.pivots}
    for i, row in enumerate(ech.rows):
        if i not in piv_rows and not row[A.cols].is_zero():
            return None
    xs = [RationalFunction.zero()] * A.cols
    for r, c in reversed(ech.pivots):
        row = ech.rows[r]
        acc = RationalFunction(row[A.cols])
        for j in range(c + 1, A.cols):
            if not row[j].is_zero() and xs[j]:
                acc = acc - RationalFunction(row[j]) * xs[j]
        xs[c] = acc / RationalFunction(row[c])
    return xs


def rf_nullspace(A):
    """Canonical basis of the right nullspace of A.

    Each basis vector corresponds to one free column (in increasing column
    order) and is scaled to coprime IntPoly entries whose first nonzero
    entry has a positive leading coefficient.
    """
    if A.cols == 0:
        return []
    if A.rows == 0:
        basis = []
        for j in range(A.cols):
            v = [RationalFunction.zero()] * A.cols
            v[j] = RationalFunction.one()
            basis.append(v)
        return basis
    ech = _eliminate(_cleared_int_rows(A), A.cols)
    pivot_cols = {c: r for r, c in ech.pivots}
    free_cols = [j for j in range(A.cols) if j not in pivot_cols]
    basis = []
    for f in free_cols:
        xs = [RationalFunction.zero()] * A.cols
        xs[f] = RationalFunction.one()
        for r, c in reversed(ech.pivots):
            row = ech.rows[r]
            acc = RationalFunction.zero()
            for j in range(c + 1, A.cols):
                if not row[j].is_zero() and xs[j]:
                    acc = acc - RationalFunction(row[j]) * xs[j]
            xs[c] = acc / RationalFunction(row[c])
        basis.append(canonical_vector(xs))
    return basis


def canonical_vector(xs):
    """Scale an RF vector to coprime IntPolys, positive first entry."""
    if all(x.is_zero() for x in xs):
        return list(xs)
    lcm = IntPoly.one()
    for x in xs:
        if not x.is_zero():
            g = lcm.gcd(x.den)
            lcm = lcm * x.den.exact_div(g)
    polys = [x.num * lcm.exact_div(x.den) if not x.is_zero() else IntPoly.zero()
             for x in xs]
    g = IntPoly.zero()
    for p in polys:
        g = g.gcd(p)
        if g == IntPoly.one():
            break
    if not g.is_zero() and g != IntPoly.one():
        polys = [p.exact_div(g) for p in polys]
    first = next(p for p in polys if not p.is_zero())
    if first.lead < 0:
        polys = [-p for p in polys]
    return [RationalFunction(p) for p in polys]


def rf_rank(A):
    """Rank via the same deterministic elimination."""
    if A.rows == 0 or A.cols == 0:
        return 0
    return len(_eliminate(_cleared_int_rows(A), A.cols).pivots)


def naive_solve(A, b):
    """Textbook elimination over RationalFunction, for cross-checking.

    Same pivot rule as rf_linear_solve; kept deliberately independent of
    the fraction-free path.
    """
    if len(b) != A.rows:
        raise ShapeError("rhs length mismatch")
    rows = [A.row(i) + [_as_rf(b[i])] for i in range(A.rows)]
    ncols = A.cols
    used = [False] * len(rows)
    pivots = []
    for col in range(ncols):
        best = None
        for i in range(len(rows)):
            if used[i] or rows[i][col].is_zero():
                continue
            d = rows[i][col].num.degree - rows[i][col].den.degree
            if best is None or d < best[1]:
                best = (i, d)
        if best is None:
            continue
        pr = best[0]
        piv = rows[pr][col]
        for i in range(len(rows)):
            if i == pr or used[i] or rows[i][col].is_zero():
                continue
            factor = rows[i][col] / piv
            rows[i] = [rows[i][j] - factor * rows[pr][j]
                       for j in range(ncols + 1)]
        used[pr] = True
        pivots.append((pr, col))
    for i in range(len(rows)):
        if not used[i] and not rows[i][ncols].is_zero():
            return None
    xs = [RationalFunction.zero()] * ncols
    for pr, col in reversed(pivots):
        acc = rows[pr][ncols]
        for j in range(col + 1, ncols):
            if xs[j]:
                acc = acc - rows[pr][j] * xs[j]
        xs[col] = acc / rows[pr][col]
    return xs

"""Exact integer matrix algorithms on Python bigints.

Everything here is deterministic: given the same input matrix, the same
normal form and the same transform matrices come back every time.  No
floating point is used anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, row-major."""

    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise ValueError("row count mismatch")
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("column count mismatch")

    @staticmethod
    def from_rows(rows: list[list[int]], cols: int | None = None) -> "IntMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return IntMatrix(len(rows), cols, tuple(tuple(int(x) for x in r) for r in rows))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def zero(rows: int, cols: int) -> "IntMatrix":
        return IntMatrix(rows, cols, tuple(tuple(0 for _ in range(cols)) for _ in range(rows)))

    @staticmethod
    def from_columns(columns, rows: int) -> "IntMatrix":
        cols = len(columns)
        data = tuple(tuple(int(col[i]) for col in columns) for i in range(rows))
        return IntMatrix(rows, cols, data)

    def entry(self, i: int, j: int) -> int:
        return self.data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(zip(*self.data)) if self.data else tuple(() for _ in range(self.cols)))

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in multiplication")
        ot = other.transpose()
        out = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in ot.data)
            for row in self.data
        )
        return IntMatrix(self.rows, other.cols, out)

    def mul_vector(self, v: list[int] | tuple[int, ...]) -> tuple[int, ...]:
        if self.cols != len(v):
            raise ValueError("shape mismatch in matrix-vector product")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.data)

    def is_zero(self) -> bool:
        return all(all(x == 0 for x in row) for row in self.data)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.data]


def _transpose_ll(m: list[list[int]]) -> list[list[int]]:
    return [list(col) for col in zip(*m)] if m else []


@dataclass(frozen=True)
class SmithDecomposition:
    """U * A * V = S with U, V unimodular and S diagonal, d_i | d_{i+1}."""

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix

    def invariant_factors(self) -> tuple[int, ...]:
        n = min(self.S.rows, self.S.cols)
        factors = [self.S.entry(i, i) for i in range(n)]
        return tuple(d for d in factors if d != 0)


def smith_normal_form(a: IntMatrix) -> SmithDecomposition:
    """Smith normal form with both transforms, smallest-pivot strategy."""
    m = a.to_lists()
    rows, cols = a.rows, a.cols
    u = IntMatrix.identity(rows).to_lists()
    v = IntMatrix.identity(cols).to_lists()

    def swap_rows(i, j):
        if i != j:
            m[i], m[j] = m[j], m[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for r in m:
                r[i], r[j] = r[j], r[i]
            for r in v:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, c):
        # row dst += c * row src
        mr, ms = m[dst], m[src]
        for k in range(cols):
            mr[k] += c * ms[k]
        ur, us = u[dst], u[src]
        for k in range(rows):
            ur[k] += c * us[k]

    def add_col(dst, src, c):
        for r in m:
            r[dst] += c * r[src]
        for r in v:
            r[dst] += c * r[src]

    t = 0
    size = min(rows, cols)
    while t < size:
        # pick the nonzero entry of smallest magnitude in the remaining block
        best = None
        for i in range(t, rows):
            mi = m[i]
            for j in range(t, cols):
                x = mi[j]
                if x != 0 and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            # clear the pivot column then the pivot row
            dirty = False
            for i in range(t + 1, rows):
                x = m[i][t]
                if x:
                    q = x // m[t][t]
                    if q:
                        add_row(i, t, -q)
                    if m[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                x = m[t][j]
                if x:
                    q = x // m[t][t]
                    if q:
                        add_col(j, t, -q)
                    if m[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # enforce divisibility of the remaining block by the pivot
            pivot = m[t][t]
            offender = None
            for i in range(t + 1, rows):
                mi = m[i]
                for j in range(t + 1, cols):
                    if mi[j] % pivot:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
        if m[t][t] < 0:
            for k in range(cols):
                m[t][k] = -m[t][k]
            for k in range(rows):
                u[t][k] = -u[t][k]
        t += 1

    return SmithDecomposition(
        IntMatrix.from_rows(u, rows), IntMatrix.from_rows(m, cols), IntMatrix.from_rows(v, cols)
    )


@dataclass(frozen=True)
class HermiteColumnForm:
    """A * V = H with V unimodular and H in canonical column echelon form.

    Pivot rows strictly increase left to right, pivots are positive, entries
    left of a pivot in its row are reduced into [0, pivot); trailing columns
    are zero.
    """

    H: IntMatrix
    V: IntMatrix
    pivots: tuple[tuple[int, int], ...]  # (row, col) per pivot

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def basis_columns(self) -> list[tuple[int, ...]]:
        return [self.H.column(j) for _, j in self.pivots]


def hermite_column_form(a: IntMatrix) -> HermiteColumnForm:
    """Column-style Hermite normal form with the column transform."""
    m = a.to_lists()
    rows, cols = a.rows, a.cols
    v = IntMatrix.identity(cols).to_lists()

    def swap_cols(i, j):
        if i != j:
            for r in m:
                r[i], r[j] = r[j], r[i]
            for r in v:
                r[i], r[j] = r[j], r[i]

    def add_col(dst, src, c):
        for r in m:
            r[dst] += c * r[src]
        for r in v:
            r[dst] += c * r[src]

    def negate_col(j):
        for r in m:
            r[j] = -r[j]
        for r in v:
            r[j] = -r[j]

    pivots: list[tuple[int, int]] = []
    p = 0
    for i in range(rows):
        if p >= cols:
            break
        # gcd-eliminate row i across columns >= p
        while True:
            best = None
            for j in range(p, cols):
                x = m[i][j]
                if x != 0 and (best is None or abs(x) < best[0]):
                    best = (abs(x), j)
            if best is None:
                break
            swap_cols(p, best[1])
            done = True
            for j in range(p + 1, cols):
                x = m[i][j]
                if x:
                    q = x // m[i][p]
                    if q:
                        add_col(j, p, -q)
                    if m[i][j]:
                        done = False
            if done:
                break
        if m[i][p] == 0:
            continue
        if m[i][p] < 0:
            negate_col(p)
        # reduce earlier columns in this row into [0, pivot)
        pivot = m[i][p]
        for j in range(p):
            x = m[i][j]
            q = x // pivot
            if q:
                add_col(j, p, -q)
        pivots.append((i, p))
        p += 1

    return HermiteColumnForm(
        IntMatrix.from_rows(m, cols), IntMatrix.from_rows(v, cols), tuple(pivots)
    )


def rank(a: IntMatrix) -> int:
    return hermite_column_form(a).rank


def kernel_columns(a: IntMatrix) -> list[tuple[int, ...]]:
    """Basis of the integer kernel {x : A x = 0}, as column vectors.

    The basis spans a primitive (saturated) sublattice because it comes from
    columns of a unimodular transform.
    """
    h = hermite_column_form(a)
    return [h.V.column(j) for j in range(h.rank, a.cols)]


def solve(a: IntMatrix, b: list[int] | tuple[int, ...]) -> tuple[int, ...] | None:
    """One integer solution x of A x = b, or None if none exists."""
    if len(b) != a.rows:
        raise ValueError("right-hand side length mismatch")
    h = hermite_column_form(a)
    y = [0] * a.cols
    piv_by_row = {i: j for i, j in h.pivots}
    for i in range(a.rows):
        acc = sum(h.H.entry(i, j) * y[j] for _, j in h.pivots)
        need = b[i] - acc
        j = piv_by_row.get(i)
        if j is None:
            if need != 0:
                return None
            continue
        pivot = h.H.entry(i, j)
        if need % pivot:
            return None
        y[j] = need // pivot
    return h.V.mul_vector(y)


def inverse_unimodular(a: IntMatrix) -> IntMatrix:
    """Inverse of a unimodular square matrix (its column HNF is I, so the
    accumulated column transform is the inverse)."""
    if a.rows != a.cols:
        raise ValueError("inverse of a non-square matrix")
    h = hermite_column_form(a)
    if h.H != IntMatrix.identity(a.rows):
        raise ValueError("matrix is not unimodular")
    return h.V


def determinant(a: IntMatrix) -> int:
    """Exact determinant of a square matrix (fraction-free elimination)."""
    if a.rows != a.cols:
        raise ValueError("determinant of a non-square matrix")
    n = a.rows
    if n == 0:
        return 1
    m = a.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot_row is None:
                return 0
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def cokernel_invariants(a: IntMatrix) -> tuple[int, list[int]]:
    """Free rank and torsion (divisibility-ordered, >1) of Z^cols / rowspan(A)."""
    snf = smith_normal_form(a)
    factors = snf.invariant_factors()
    free = a.cols - len(factors)
    torsion = [d for d in factors if d > 1]
    return free, torsion

"""Matrices over a finite field: row reduction, nullspaces, conjugation.

A ``MatrixGF`` is immutable (entries are tuples of tuples of element
encodings) and safe to share; every operation returns a new matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyMatrix
from .field import FiniteField


@dataclass(frozen=True)
class MatrixGF:
    field: FiniteField
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise ValueError("row count mismatch")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("column count mismatch")
            for v in row:
                if not 0 <= v < self.field.q:
                    raise ValueError(f"entry {v} outside GF({self.field.q})")

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)


def matrix(field: FiniteField, rows) -> MatrixGF:
    """Build a MatrixGF from an iterable of rows of element encodings."""
    entries = tuple(tuple(int(v) for v in row) for row in rows)
    nrows = len(entries)
    ncols = len(entries[0]) if nrows else 0
    return MatrixGF(field, nrows, ncols, entries)


def zero_matrix(field: FiniteField, rows: int, cols: int) -> MatrixGF:
    return MatrixGF(field, rows, cols, tuple((0,) * cols for _ in range(rows)))


def identity_matrix(field: FiniteField, n: int) -> MatrixGF:
    return MatrixGF(
        field, n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    )


def is_zero_matrix(m: MatrixGF) -> bool:
    return all(v == 0 for row in m.entries for v in row)


def transpose(m: MatrixGF) -> MatrixGF:
    return MatrixGF(
        m.field, m.cols, m.rows, tuple(zip(*m.entries)) if m.rows else ((),) * 0
    )


def conjugate(m: MatrixGF) -> MatrixGF:
    """Entrywise Frobenius conjugate x -> x^q over GF(q^2)."""
    conj = m.field.conj
    return MatrixGF(
        m.field, m.rows, m.cols, tuple(tuple(conj(v) for v in row) for row in m.entries)
    )


def conjugate_transpose(m: MatrixGF) -> MatrixGF:
    return transpose(conjugate(m))


def mat_mul(a: MatrixGF, b: MatrixGF) -> MatrixGF:
    if a.field != b.field:
        raise ValueError("matrices over different fields")
    if a.cols != b.rows:
        raise ValueError(f"shape mismatch {a.rows}x{a.cols} times {b.rows}x{b.cols}")
    f = a.field
    add, mul = f.add, f.mul
    bt = tuple(zip(*b.entries)) if b.rows else tuple()
    out = []
    for arow in a.entries:
        orow = []
        for bcol in bt:
            s = 0
            for x, y in zip(arow, bcol):
                if x and y:
                    s = add(s, mul(x, y))
            orow.append(s)
        out.append(tuple(orow))
    return MatrixGF(f, a.rows, b.cols, tuple(out))


def stack(a: MatrixGF, b: MatrixGF) -> MatrixGF:
    if a.field != b.field or a.cols != b.cols:
        raise ValueError("incompatible stack")
    return MatrixGF(a.field, a.rows + b.rows, a.cols, a.entries + b.entries)


def row_reduce(m: MatrixGF) -> tuple[MatrixGF, int, tuple[int, ...]]:
    """Reduced row-echelon form, rank and pivot columns.

    The result has the same shape as the input (zero rows are kept), and
    row reduction is idempotent.
    """
    f = m.field
    add, mul, neg, inv = f.add, f.mul, f.neg, f.inv
    work = [list(row) for row in m.entries]
    nrows, ncols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = None
        for i in range(r, nrows):
            if work[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            work[r], work[pivot] = work[pivot], work[r]
        lead = work[r][c]
        if lead != 1:
            s = inv(lead)
            work[r] = [mul(s, v) for v in work[r]]
        prow = work[r]
        for i in range(nrows):
            if i != r and work[i][c]:
                factor = neg(work[i][c])
                row_i = work[i]
                for j in range(c, ncols):
                    if prow[j]:
                        row_i[j] = add(row_i[j], mul(factor, prow[j]))
        pivots.append(c)
        r += 1
    rref = MatrixGF(f, nrows, ncols, tuple(tuple(row) for row in work))
    return rref, len(pivots), tuple(pivots)


def nullspace(m: MatrixGF) -> MatrixGF:
    """Basis (as rows) of the right kernel {x : m . x^T = 0}.

    Returns a (cols - rank) x cols matrix; each basis row carries 1 at
    its free column.
    """
    if m.cols == 0:
        raise EmptyMatrix("nullspace of a matrix with no columns")
    f = m.field
    rref, rank, pivots = row_reduce(m)
    pivot_set = set(pivots)
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        vec = [0] * m.cols
        vec[fc] = 1
        for i, pc in enumerate(pivots):
            vec[pc] = f.neg(rref.entries[i][fc])
        basis.append(tuple(vec))
    return MatrixGF(f, len(basis), m.cols, tuple(basis))

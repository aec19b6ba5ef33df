"""Linear codes over GF(q^2): duals, distances, and exact locality.

A ``LinearCode`` stores a full-rank generator in reduced row-echelon
form; the parity-check matrix and expensive certificates (distances,
locality) are cached write-once.  Exhaustive enumerations walk the
message space in a fixed odometer order with incremental row updates,
so results are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    EmptyMatrix,
    EnumerationTooLarge,
    RankDeficientGenerator,
    UncoveredCoordinate,
    WindowTooLarge,
)
from .field import FiniteField
from .matrix import (
    MatrixGF,
    conjugate,
    conjugate_transpose,
    identity_matrix,
    is_zero_matrix,
    mat_mul,
    matrix,
    nullspace,
    row_reduce,
)

DEFAULT_CAP = 1 << 26


class LinearCode:
    """An [n, k] code given by a full-rank RREF generator matrix."""

    def __init__(self, field: FiniteField, generator: MatrixGF, parity: MatrixGF | None = None):
        self.field = field
        self.generator = generator
        self.n = generator.cols
        self.k = generator.rows
        self._parity = parity
        self._min_distance: int | None = None
        self._locality_report = None

    def __repr__(self) -> str:
        return f"LinearCode[{self.n},{self.k}]_{self.field.q}"

    def parity_check(self) -> MatrixGF:
        """An (n-k) x n matrix whose kernel (rowwise) is the code."""
        if self._parity is None:
            self._parity = nullspace(self.generator)
        return self._parity


def make_code(field: FiniteField, generator, parity_check: MatrixGF | None = None) -> LinearCode:
    """Build a code from generator rows; rank-deficient input is rejected."""
    if not isinstance(generator, MatrixGF):
        generator = matrix(field, generator)
    if generator.rows == 0 or generator.cols == 0:
        raise EmptyMatrix("generator must have at least one row and column")
    rref, rank, _ = row_reduce(generator)
    if rank < generator.rows:
        raise RankDeficientGenerator(
            f"generator has rank {rank} < {generator.rows} rows"
        )
    if parity_check is not None:
        if parity_check.cols != generator.cols:
            raise ValueError("parity-check length mismatch")
        _, prank, _ = row_reduce(parity_check)
        if prank != generator.cols - rank or not is_zero_matrix(
            mat_mul(generator, _transpose(parity_check))
        ):
            raise ValueError("parity-check matrix does not match the generator")
    return LinearCode(field, rref, parity_check)


def _transpose(m: MatrixGF) -> MatrixGF:
    return MatrixGF(m.field, m.cols, m.rows, tuple(zip(*m.entries)) if m.rows else ())


def _zero_code(field: FiniteField, n: int) -> LinearCode:
    return LinearCode(field, MatrixGF(field, 0, n, ()), identity_matrix(field, n))


def euclidean_dual(c: LinearCode) -> LinearCode:
    """The [n, n-k] dual; the zero code may appear here (and only here)."""
    if c.k == c.n:
        return _zero_code(c.field, c.n)
    if c.k == 0:
        return make_code(c.field, identity_matrix(c.field, c.n))
    basis = nullspace(c.generator)
    rref, _, _ = row_reduce(basis)
    return LinearCode(c.field, rref, c.generator)


def conjugate_code(c: LinearCode) -> LinearCode:
    """The code {x^q : x in C} of entrywise Frobenius conjugates."""
    rref, _, _ = row_reduce(conjugate(c.generator))
    parity = conjugate(c.parity_check()) if c._parity is not None else None
    return LinearCode(c.field, rref, parity)


def hermitian_dual(c: LinearCode) -> LinearCode:
    """(C^q)-perp: the Euclidean dual of the conjugated code."""
    if c.k == c.n:
        return _zero_code(c.field, c.n)
    conj_gen = conjugate(c.generator)
    if c.k == 0:
        return make_code(c.field, identity_matrix(c.field, c.n))
    basis = nullspace(conj_gen)
    rref, _, _ = row_reduce(basis)
    return LinearCode(c.field, rref, conj_gen)


def codes_equal(a: LinearCode, b: LinearCode) -> bool:
    """Same row space (generators are canonical RREFs)."""
    return (
        a.field == b.field
        and a.n == b.n
        and a.k == b.k
        and a.generator.entries == b.generator.entries
    )


def is_hermitian_self_orthogonal(c: LinearCode) -> bool:
    """True iff G . G-dagger = 0, i.e. C is contained in its Hermitian dual."""
    return is_zero_matrix(mat_mul(c.generator, conjugate_transpose(c.generator)))


def is_hermitian_dual_containing(c: LinearCode) -> bool:
    """True iff every Hermitian-dual generator row lies in the row space of C."""
    if 2 * c.k < c.n:
        return False  # dimension count rules it out
    dual = hermitian_dual(c)
    if dual.k == 0:
        return True
    return is_zero_matrix(mat_mul(dual.generator, _transpose(c.parity_check())))


def iter_nonzero_span(field: FiniteField, gen: MatrixGF):
    """Yield every nonzero word of the row span, as a reused list buffer.

    Odometer order over message digits (element encodings), with one
    scaled-row update per digit change.  Callers must not keep references
    to the yielded buffer across iterations.
    """
    k, n, q = gen.rows, gen.cols, field.q
    add, mul, sub = field.add, field.mul, field.sub
    scaled = [
        [tuple(mul(c, v) for v in gen.entries[j]) for c in range(q)] for j in range(k)
    ]
    digits = [0] * k
    word = [0] * n
    total = q**k
    for _ in range(total - 1):
        j = 0
        while digits[j] == q - 1:
            # roll q-1 -> 0: add (0 - (q-1)) times row j
            delta = scaled[j][sub(0, q - 1)]
            for t in range(n):
                if delta[t]:
                    word[t] = add(word[t], delta[t])
            digits[j] = 0
            j += 1
        delta = scaled[j][sub(digits[j] + 1, digits[j])]
        for t in range(n):
            if delta[t]:
                word[t] = add(word[t], delta[t])
        digits[j] += 1
        yield word


def min_distance(c: LinearCode, cap: int = DEFAULT_CAP) -> int:
    """Exact minimum weight by enumerating the q^(2k) message space."""
    if c.k == 0:
        raise EmptyMatrix("the zero code has no minimum distance")
    if c._min_distance is not None:
        return c._min_distance
    if c.field.q**c.k > cap:
        raise EnumerationTooLarge(
            f"q^k = {c.field.q}^{c.k} exceeds cap {cap}; use distance_at_most"
        )
    best = c.n + 1
    for word in iter_nonzero_span(c.field, c.generator):
        w = 0
        for v in word:
            if v:
                w += 1
        if w < best:
            best = w
    c._min_distance = best
    return best


def _normalize_column(field: FiniteField, col: tuple[int, ...]) -> tuple[int, ...] | None:
    """Scale so the first nonzero entry is 1; None for the zero column."""
    for v in col:
        if v:
            if v == 1:
                return col
            s = field.inv(v)
            return tuple(field.mul(s, x) for x in col)
    return None


def distance_at_most(c: LinearCode, w: int = 3) -> int | None:
    """The true distance if it is <= w (w <= 4), else None.

    Works on the parity-check matrix: d equals the smallest number of
    linearly dependent columns.
    """
    if w > 4:
        raise WindowTooLarge(f"window {w} > 4")
    if w < 1:
        raise ValueError("window must be >= 1")
    h = c.parity_check()
    if h.rows == 0:
        return 1  # full code: every single column is trivially dependent
    field = c.field
    add, mul = field.add, field.mul
    cols = [h.column(j) for j in range(h.cols)]
    for col in cols:
        if all(v == 0 for v in col):
            return 1
    if w < 2:
        return None
    normalized = []
    index_of: dict[tuple[int, ...], int] = {}
    for j, col in enumerate(cols):
        nc = _normalize_column(field, col)
        if nc in index_of:
            return 2
        index_of[nc] = j
        normalized.append(nc)
    if w < 3:
        return None
    n = len(cols)
    nonzero = list(field.nonzero_elements())
    for i in range(n):
        ci = normalized[i]
        for j in range(i + 1, n):
            cj = normalized[j]
            for lam in nonzero:
                combo = tuple(add(x, mul(lam, y)) for x, y in zip(ci, cj))
                nc = _normalize_column(field, combo)
                hit = index_of.get(nc)
                if hit is not None and hit != i and hit != j:
                    return 3
    if w < 4:
        return None
    # meet in the middle: two disjoint pairs with the same normalized combo.
    # After the w=3 pass, equal combos from overlapping pairs cannot occur.
    seen: dict[tuple[int, ...], tuple[int, int]] = {}
    for i in range(n):
        ci = normalized[i]
        for j in range(i + 1, n):
            cj = normalized[j]
            for lam in nonzero:
                combo = tuple(add(x, mul(lam, y)) for x, y in zip(ci, cj))
                nc = _normalize_column(field, combo)
                if nc in index_of:
                    continue  # a 3-subset relation, already excluded
                prev = seen.get(nc)
                if prev is None:
                    seen[nc] = (i, j)
                elif prev[0] not in (i, j) and prev[1] not in (i, j):
                    return 4
    return None


@dataclass(frozen=True)
class LocalityReport:
    """Per-coordinate minimum covering dual weight and the exact locality."""

    per_coordinate: tuple[int, ...]
    locality: int
    method: str
    dual_distance: int


def locality(c: LinearCode, cap: int = DEFAULT_CAP) -> LocalityReport:
    """Exact locality by exhausting the Euclidean dual.

    For each coordinate i the minimum support size among dual codewords
    covering i is recorded; the locality is the maximum of those minus 1.
    """
    if c._locality_report is not None:
        return c._locality_report
    dual_dim = c.n - c.k
    if c.field.q**dual_dim > cap:
        raise EnumerationTooLarge(
            f"dual enumeration q^(n-k) = {c.field.q}^{dual_dim} exceeds cap {cap}"
        )
    n = c.n
    mins = [0] * n
    if dual_dim > 0:
        dual = euclidean_dual(c)
        for word in iter_nonzero_span(c.field, dual.generator):
            wt = 0
            for v in word:
                if v:
                    wt += 1
            for i in range(n):
                if word[i] and (mins[i] == 0 or wt < mins[i]):
                    mins[i] = wt
    missing = [i for i in range(n) if mins[i] == 0]
    if missing:
        raise UncoveredCoordinate(
            f"coordinates {missing} lie in no dual codeword's support"
        )
    report = LocalityReport(
        per_coordinate=tuple(mins),
        locality=max(mins) - 1,
        method="exhaustive",
        dual_distance=min(mins),
    )
    c._locality_report = report
    return report


def coverage_locality_check(c: LinearCode, cap: int = DEFAULT_CAP) -> bool:
    """True iff minimum-weight dual codewords jointly cover every coordinate.

    When true the locality equals (dual distance - 1) without a full
    per-coordinate scan.
    """
    dual_dim = c.n - c.k
    if dual_dim == 0:
        return False
    if c.field.q**dual_dim > cap:
        raise EnumerationTooLarge(
            f"dual enumeration q^(n-k) = {c.field.q}^{dual_dim} exceeds cap {cap}"
        )
    dual = euclidean_dual(c)
    best = c.n + 1
    covered = 0
    full = (1 << c.n) - 1
    for word in iter_nonzero_span(c.field, dual.generator):
        wt = 0
        support = 0
        for i, v in enumerate(word):
            if v:
                wt += 1
                support |= 1 << i
        if wt < best:
            best = wt
            covered = support
        elif wt == best:
            covered |= support
    return covered == full


def locality_report_via_coverage(c: LinearCode, cap: int = DEFAULT_CAP) -> LocalityReport | None:
    """Shortcut report when the coverage condition holds, else None."""
    if not coverage_locality_check(c, cap):
        return None
    dual = euclidean_dual(c)
    d_dual = min_distance(dual, cap)
    return LocalityReport(
        per_coordinate=(d_dual,) * c.n,
        locality=d_dual - 1,
        method="coverage-shortcut",
        dual_distance=d_dual,
    )


def code_distance(c: LinearCode, cap: int = DEFAULT_CAP) -> int | None:
    """Best-effort exact distance: enumeration when feasible, else the
    small-window column test; None when neither settles it."""
    if c._min_distance is not None:
        return c._min_distance
    if c.k > 0 and c.field.q**c.k <= min(cap, 1 << 16):
        return min_distance(c, cap)
    d = distance_at_most(c, 4)
    if d is not None:
        return d
    if c.k > 0 and c.field.q**c.k <= cap:
        return min_distance(c, cap)
    return None

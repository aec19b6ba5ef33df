"""Explicit code families over GF(q^2): cyclic Hamming and Simplex codes,
generalized Reed-Muller evaluation codes, and Solomon-Stiffler block
generator matrices.

Column conventions are fixed for reproducibility: Hamming/Simplex
parity-check columns are the coordinates of beta^i for the order-n
element beta = alpha^(q^2-1) of GF(q^(2m)) (this is the representative
whose code is Hermitian dual-containing; a primitive alpha's own powers
fail that for q > 2).  Every structural guarantee is re-verified at
construction time and failure aborts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .codes import (
    LinearCode,
    distance_at_most,
    hermitian_dual,
    is_hermitian_dual_containing,
    is_hermitian_self_orthogonal,
    make_code,
)
from .errors import (
    CertificateMismatch,
    DegreeOutOfRange,
    DualContainmentCheckFailed,
    GcdConditionViolated,
    HypothesisViolated,
    InvalidSSParams,
    SelfOrthogonalityCheckFailed,
)
from .field import ExtensionField, FiniteField, make_field_of_order, prime_power
from .matrix import (
    MatrixGF,
    conjugate_transpose,
    is_zero_matrix,
    mat_mul,
    matrix,
    nullspace,
)


def base_field_q2(q: int) -> FiniteField:
    """GF(q^2) for a prime power q."""
    pe = prime_power(q)
    if pe is None:
        raise HypothesisViolated(f"q = {q} is not a prime power")
    p, e = pe
    return make_field_of_order(p ** (2 * e))


def projective_point_matrix(field: FiniteField, m: int) -> MatrixGF:
    """The m x (q2^m - 1)/(q2 - 1) matrix whose columns are coordinates of
    g^0, g^1, ...: one representative per 1-dimensional subspace.

    g is beta = alpha^(q2-1) (alpha primitive in the degree-m extension)
    when gcd(m, q2 - 1) = 1, which makes the kernel code cyclic and is
    the representative whose Hamming code is Hermitian dual-containing.
    Otherwise beta-powers repeat projective points and g falls back to
    alpha itself, whose first n powers always cover every point once.
    Distinctness and coverage are verified either way."""
    q2 = field.q
    n = (q2**m - 1) // (q2 - 1)
    if m == 1:
        return matrix(field, [[1]])
    ext = ExtensionField(field, m)
    alpha = ext.primitive_element()
    g = ext.pow(alpha, q2 - 1) if math.gcd(m, q2 - 1) == 1 else alpha
    cols = []
    x = ext.one()
    for _ in range(n):
        cols.append(x)
        x = ext.mul(x, g)
    h = matrix(field, [[col[a] for col in cols] for a in range(m)])
    _check_projective(field, h)
    return h


def _check_projective(field: FiniteField, h: MatrixGF) -> None:
    n = (field.q ** h.rows - 1) // (field.q - 1)
    seen = set()
    for j in range(h.cols):
        col = h.column(j)
        lead = next((v for v in col if v), None)
        if lead is None:
            raise SelfOrthogonalityCheckFailed(f"column {j} is zero")
        inv = field.inv(lead)
        seen.add(tuple(field.mul(inv, v) for v in col))
    if len(seen) != n or h.cols != n:
        raise SelfOrthogonalityCheckFailed(
            f"columns are not a full set of {n} projective representatives"
        )


def hamming(q: int, m: int) -> LinearCode:
    """The cyclic-representative Hamming code over GF(q^2):
    [(q^2m - 1)/(q^2 - 1), n - m, 3], Hermitian dual-containing
    (verified; requires m >= 2 and gcd(m, q^2 - 1) = 1)."""
    field = base_field_q2(q)
    if m < 2:
        raise HypothesisViolated(f"need m >= 2, got {m}")
    if math.gcd(m, field.q - 1) != 1:
        raise GcdConditionViolated(
            f"gcd(m, q^2 - 1) = gcd({m}, {field.q - 1}) != 1"
        )
    h = projective_point_matrix(field, m)
    if not is_zero_matrix(mat_mul(h, conjugate_transpose(h))):
        raise SelfOrthogonalityCheckFailed(
            "point matrix is not Hermitian self-orthogonal; wrong representative"
        )
    code = make_code(field, nullspace(h), parity_check=h)
    return code


def simplex(q: int, m: int) -> LinearCode:
    """The Hermitian dual of hamming(q, m): constant weight q^(2m-2),
    Hermitian self-orthogonal."""
    code = hermitian_dual(hamming(q, m))
    if not is_hermitian_self_orthogonal(code):
        raise SelfOrthogonalityCheckFailed("simplex code fails G . G-dagger = 0")
    return code


# -- generalized Reed-Muller --------------------------------------------------


@dataclass(frozen=True)
class GRMParams:
    """Order/degree bookkeeping for an evaluation code of order v in m
    variables over GF(q^2), with v + 1 = t(q^2 - 1) + s, 0 <= s <= q^2 - 2."""

    q: int
    v: int
    m: int
    t: int
    s: int

    @classmethod
    def of(cls, q: int, v: int, m: int) -> "GRMParams":
        if prime_power(q) is None:
            raise HypothesisViolated(f"q = {q} is not a prime power")
        t, s = divmod(v + 1, q * q - 1)
        return cls(q, v, m, t, s)


def grm_dimension(q2: int, v: int, m: int) -> int:
    """Number of reduced monomials (each exponent < q2) of total degree <= v."""
    if v < 0 or m < 1:
        raise DegreeOutOfRange(f"need v >= 0 and m >= 1, got v={v}, m={m}")
    total = 0
    for i in range(m + 1):
        b = v - i * q2
        if b < 0:
            break
        total += (-1) ** i * math.comb(m, i) * math.comb(m + b, b)
    return total


def grm_min_distance_formula(q2: int, v: int, m: int) -> int:
    """Closed-form minimum distance of the order-v evaluation code."""
    t, s = divmod(v + 1, q2 - 1)
    if s == 0:
        return 2 * q2 ** (m - t)
    return (q2 - s + 1) * q2 ** (m - t - 1)


def _all_points(field: FiniteField, m: int) -> list[tuple[int, ...]]:
    """All q2^m points, odometer order over the integer element encoding."""
    q2 = field.q
    points = []
    for code in range(q2**m):
        coords = []
        for _ in range(m):
            coords.append(code % q2)
            code //= q2
        points.append(tuple(coords))
    return points


def _reduced_monomials(q2: int, v: int, m: int) -> list[tuple[int, ...]]:
    exps: list[tuple[int, ...]] = []

    def rec(prefix, remaining, budget):
        if remaining == 0:
            exps.append(tuple(prefix))
            return
        for e in range(min(budget, q2 - 1) + 1):
            rec(prefix + [e], remaining - 1, budget - e)

    rec([], m, v)
    return sorted(exps)


def grm(q: int, v: int, m: int) -> LinearCode:
    """Evaluation code of all m-variate polynomials of total degree <= v
    at every point of GF(q^2)^m."""
    field = base_field_q2(q)
    if m < 1 or v < 0 or v > m * (field.q - 1):
        raise DegreeOutOfRange(
            f"order v={v} outside [0, m(q^2 - 1)] = [0, {m * (field.q - 1)}]"
        )
    points = _all_points(field, m)
    rows = []
    for exps in _reduced_monomials(field.q, v, m):
        row = []
        for pt in points:
            val = 1
            for x, e in zip(pt, exps):
                if e:
                    val = field.mul(val, field.pow(x, e))
            row.append(val)
        rows.append(row)
    code = make_code(field, rows)
    expected = grm_dimension(field.q, v, m)
    if code.k != expected:
        raise CertificateMismatch(
            f"evaluation matrix rank {code.k} != dimension formula {expected}"
        )
    return code


def grm_hermitian_dual_code(q: int, v: int, m: int) -> LinearCode:
    """The Hermitian dual of grm(q, v, m); Hermitian dual-containing for
    0 <= v <= m(q - 1) - 1 (verified)."""
    pe = prime_power(q)
    if pe is None:
        raise HypothesisViolated(f"q = {q} is not a prime power")
    if m < 1 or v < 0 or v > m * (q - 1) - 1:
        raise DegreeOutOfRange(
            f"order v={v} outside the dual-containing range [0, {m * (q - 1) - 1}]"
        )
    source = grm(q, v, m)
    code = hermitian_dual(source)
    if not is_hermitian_dual_containing(code):
        raise DualContainmentCheckFailed(
            f"dual of the order-{v} evaluation code is not dual-containing"
        )
    params = GRMParams.of(q, v, m)
    claimed = (params.s + 1) * q ** (2 * params.t)
    if claimed <= 4:
        measured = distance_at_most(code, 4)
        if measured != claimed:
            raise CertificateMismatch(
                f"dual code distance {measured} != formula {claimed}"
            )
    return code


# -- Solomon-Stiffler ---------------------------------------------------------


@dataclass(frozen=True)
class SSParams:
    """Deletion pattern for a Solomon-Stiffler generator over GF(q^2):
    u lists the dimensions of the deleted point sets, largest first."""

    q: int
    m: int
    u: tuple[int, ...]
    condition: str

    @classmethod
    def of(cls, q: int, m: int, u) -> "SSParams":
        u = tuple(int(x) for x in u)
        condition = validate_ss_conditions(q, m, u)
        if condition == "invalid":
            raise InvalidSSParams(
                f"(q={q}, m={m}, u={list(u)}) is not licensed by any condition"
            )
        return cls(q, m, u, condition)


def validate_ss_conditions(q: int, m: int, u) -> str:
    """Which hypothesis licenses Hermitian self-orthogonality of the
    Solomon-Stiffler construction: 'A', 'B', 'q2' (the q = 2 case), or
    'invalid' (meaning unlicensed, not impossible)."""
    u = tuple(int(x) for x in u)
    pe = prime_power(q)
    if pe is None or m < 1 or not u:
        return "invalid"
    if any(u[i] < u[i + 1] for i in range(len(u) - 1)):
        return "invalid"
    if u[-1] < 2 or m <= u[0] or sum(u) > m:
        return "invalid"
    q2 = q * q
    max_same = 3 if q == 2 else q2 - 1
    if any(u.count(x) > max_same for x in set(u)):
        return "invalid"
    if q == 2:
        return "q2"
    if any(math.gcd(x, q2 - 1) != 1 for x in u):
        return "invalid"
    rest = m - sum(u)
    if rest == 0:
        return "B"
    if rest >= 2 and math.gcd(rest, q2 - 1) == 1:
        return "A"
    return "invalid"


def ss_block_column_count(q: int, m: int, u, i: int) -> int:
    """Column count of the i-th block (1-based; i = len(u)+1 is the tail)."""
    q2 = q * q
    u = tuple(u)
    if i <= len(u):
        w = m - sum(u[:i])
        return (q2 ** u[i - 1] - 1) // (q2 - 1) * (q2**w - 1)
    tail = m - sum(u)
    return (q2**tail - 1) // (q2 - 1)


def solomon_stiffler(params: SSParams | None = None, q: int | None = None,
                     m: int | None = None, u=None) -> LinearCode:
    """Block generator G = (G_1 | ... | G_s | G_{s+1}) of a Hermitian
    self-orthogonal Solomon-Stiffler code with parameters
    [N - sum_i N_i, m, q^(2m-2) - sum_i q^(2u_i - 2)] over GF(q^2),
    where N_w = (q^2w - 1)/(q^2 - 1).  Self-orthogonality is verified."""
    if params is None:
        params = SSParams.of(q, m, u)
    q, m, u = params.q, params.m, params.u
    field = base_field_q2(q)
    q2 = field.q
    point_cache: dict[int, MatrixGF] = {}

    def points(w: int) -> MatrixGF:
        if w not in point_cache:
            point_cache[w] = projective_point_matrix(field, w)
        return point_cache[w]

    columns: list[tuple[int, ...]] = []
    s = len(u)
    for i in range(1, s + 1):
        zeros = sum(u[: i - 1])
        w = m - sum(u[:i])
        if w == 0:
            continue
        h = points(u[i - 1])
        h_cols = [h.column(j) for j in range(h.cols)]
        pad = (0,) * zeros
        for code_int in range(1, q2**w):
            rvec = []
            c = code_int
            for _ in range(w):
                rvec.append(c % q2)
                c //= q2
            rvec = tuple(rvec)
            for hc in h_cols:
                columns.append(pad + hc + rvec)
    tail = m - sum(u)
    if tail > 0:
        h = points(tail)
        pad = (0,) * sum(u)
        for j in range(h.cols):
            columns.append(pad + h.column(j))
    gen = matrix(field, [[col[a] for col in columns] for a in range(m)])
    if not is_zero_matrix(mat_mul(gen, conjugate_transpose(gen))):
        raise SelfOrthogonalityCheckFailed(
            f"(q={q}, m={m}, u={list(u)}): G . G-dagger != 0"
        )
    expected_n = (q2**m - 1) // (q2 - 1) - sum(
        (q2**ui - 1) // (q2 - 1) for ui in u
    )
    if gen.cols != expected_n:
        raise CertificateMismatch(
            f"built {gen.cols} columns, length formula gives {expected_n}"
        )
    return make_code(field, gen)


def ss_formula_params(q: int, m: int, u) -> tuple[int, int, int]:
    """(n, k, d) of the Solomon-Stiffler code by the closed formulas."""
    q2 = q * q
    n = (q2**m - 1) // (q2 - 1) - sum((q2**ui - 1) // (q2 - 1) for ui in u)
    d = q ** (2 * m - 2) - sum(q ** (2 * ui - 2) for ui in u)
    return n, m, d

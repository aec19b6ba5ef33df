"""Construction families: measured certificates against closed-form
parameters, hypothesis checks, and structural invariants."""

import pytest

from qlrc.codes import (
    coverage_locality_check,
    distance_at_most,
    hermitian_dual,
    is_hermitian_dual_containing,
    is_hermitian_self_orthogonal,
    iter_nonzero_span,
    locality,
    min_distance,
)
from qlrc.constructions import (
    GRMParams,
    SSParams,
    base_field_q2,
    grm,
    grm_dimension,
    grm_hermitian_dual_code,
    grm_min_distance_formula,
    hamming,
    projective_point_matrix,
    simplex,
    solomon_stiffler,
    ss_block_column_count,
    ss_formula_params,
    validate_ss_conditions,
)
from qlrc.errors import (
    DegreeOutOfRange,
    GcdConditionViolated,
    HypothesisViolated,
    InvalidSSParams,
)
from qlrc.matrix import conjugate, row_reduce


def test_projective_point_matrix_covers_every_point():
    for q, m in [(2, 2), (2, 3), (2, 4), (3, 2), (4, 2)]:
        field = base_field_q2(q)
        h = projective_point_matrix(field, m)
        n = (field.q**m - 1) // (field.q - 1)
        assert h.rows == m and h.cols == n
        normalized = set()
        for j in range(n):
            col = h.column(j)
            lead = next(v for v in col if v)
            inv = field.inv(lead)
            normalized.add(tuple(field.mul(inv, v) for v in col))
        assert len(normalized) == n


def test_hamming_small():
    code = hamming(2, 2)
    assert (code.n, code.k) == (5, 3)
    assert distance_at_most(code, 3) == 3
    assert is_hermitian_dual_containing(code)
    assert not is_hermitian_self_orthogonal(code)


def test_hamming_gcd_hypothesis():
    with pytest.raises(GcdConditionViolated):
        hamming(2, 3)
    with pytest.raises(HypothesisViolated):
        hamming(2, 1)
    with pytest.raises(HypothesisViolated):
        hamming(6, 2)  # not a prime power


def test_hamming_medium():
    code = hamming(2, 4)
    assert (code.n, code.k) == (85, 81)
    assert distance_at_most(code, 3) == 3
    assert is_hermitian_dual_containing(code)
    assert locality(code).locality == 63


def test_hamming_odd_characteristic():
    code = hamming(3, 3)
    assert (code.n, code.k) == (91, 88)
    assert distance_at_most(code, 3) == 3
    assert is_hermitian_dual_containing(code)
    rep = locality(code)
    assert rep.locality == 3 ** (2 * 3 - 2) - 1 == 80


def test_hamming_q4():
    code = hamming(4, 2)
    assert (code.n, code.k) == (17, 15)
    assert is_hermitian_dual_containing(code)
    assert distance_at_most(code, 3) == 3


def test_simplex_constant_weight():
    s = simplex(2, 2)
    assert (s.n, s.k) == (5, 2)
    assert is_hermitian_self_orthogonal(s)
    weights = {
        sum(1 for v in word if v) for word in iter_nonzero_span(s.field, s.generator)
    }
    assert weights == {4}
    big = simplex(2, 4)
    assert (big.n, big.k) == (85, 4)
    assert min_distance(big) == 64


def test_grm_dimension_formula():
    assert grm_dimension(4, 1, 2) == 3
    assert grm_dimension(4, 0, 5) == 1
    assert grm_dimension(4, 3, 1) == 4  # full space for m = 1
    assert grm_dimension(4, 6, 2) == 16  # full space for m = 2

    def count_monomials(q2, v, m):
        def rec(remaining, budget):
            if remaining == 0:
                return 1
            return sum(rec(remaining - 1, budget - e) for e in range(min(budget, q2 - 1) + 1))

        return rec(m, v)

    for q2 in (4, 9):
        for m in (1, 2, 3):
            for v in range(0, m * (q2 - 1) + 1):
                assert grm_dimension(q2, v, m) == count_monomials(q2, v, m)


def test_grm_parameters_and_distance():
    rep = grm(2, 0, 1)
    assert (rep.n, rep.k) == (4, 1)
    assert min_distance(rep) == 4
    code = grm(2, 1, 2)
    assert (code.n, code.k) == (16, 3)
    assert min_distance(code) == 12
    for q, v, m in [(2, 0, 1), (2, 1, 1), (2, 2, 1), (2, 3, 1),
                    (2, 0, 2), (2, 1, 2), (2, 2, 2), (2, 3, 2),
                    (3, 1, 1), (3, 2, 1)]:
        code = grm(q, v, m)
        q2 = code.field.q
        assert code.k == grm_dimension(q2, v, m)
        assert min_distance(code) == grm_min_distance_formula(q2, v, m)


def test_grm_rank_equals_dimension_all_admissible_orders():
    # the constructor itself raises CertificateMismatch when the
    # evaluation rank disagrees with the dimension formula
    for q in (2, 3):
        q2 = q * q
        for m in (1, 2):
            for v in range(0, m * (q2 - 1) + 1):
                code = grm(q, v, m)
                assert code.k == grm_dimension(q2, v, m)


def test_grm_degree_range():
    with pytest.raises(DegreeOutOfRange):
        grm(2, 7, 2)  # v > m(q^2 - 1)
    with pytest.raises(DegreeOutOfRange):
        grm_hermitian_dual_code(2, 1, 1)  # v > m(q - 1) - 1
    with pytest.raises(DegreeOutOfRange):
        grm_hermitian_dual_code(2, 2, 2)


def test_grm_hermitian_dual_code():
    code = grm_hermitian_dual_code(2, 1, 2)
    assert (code.n, code.k) == (16, 13)
    assert is_hermitian_dual_containing(code)
    assert distance_at_most(code, 3) == 3
    assert locality(code).locality == 11
    # its Hermitian dual is the source evaluation code
    back = hermitian_dual(code)
    source = grm(2, 1, 2)
    conj_rref, _, _ = row_reduce(conjugate(source.generator))
    assert back.generator.entries == conj_rref.entries or min_distance(back) == 12


def test_grm_hermitian_dual_small_cases():
    small = grm_hermitian_dual_code(2, 0, 1)
    assert (small.n, small.k) == (4, 3)
    assert distance_at_most(small, 3) == 2
    odd = grm_hermitian_dual_code(3, 1, 1)
    assert (odd.n, odd.k) == (9, 7)
    assert distance_at_most(odd, 3) == 3
    assert locality(odd).locality == 7


def test_grm_params_decomposition():
    p = GRMParams.of(2, 1, 2)
    assert (p.t, p.s) == (0, 2)
    p = GRMParams.of(2, 2, 3)
    assert (p.t, p.s) == (1, 0)
    p = GRMParams.of(3, 1, 1)
    assert (p.t, p.s) == (0, 2)


def test_validate_ss_conditions():
    assert validate_ss_conditions(2, 4, [2, 2]) == "q2"
    assert validate_ss_conditions(2, 4, [2]) == "q2"
    assert validate_ss_conditions(2, 4, [3]) == "q2"
    assert validate_ss_conditions(3, 5, [2]) == "invalid"  # gcd(2, 8) = 2
    assert validate_ss_conditions(4, 7, [2]) == "invalid"  # gcd(5, 15) = 5
    assert validate_ss_conditions(4, 4, [2]) == "A"
    assert validate_ss_conditions(4, 4, [2, 2]) == "B"
    assert validate_ss_conditions(2, 4, [4]) == "invalid"  # m = u1
    assert validate_ss_conditions(2, 4, [1]) == "invalid"  # u_s < 2
    assert validate_ss_conditions(2, 4, [2, 3]) == "invalid"  # not nonincreasing
    assert validate_ss_conditions(2, 9, [2, 2, 2, 2]) == "invalid"  # > 3 equal
    assert validate_ss_conditions(2, 5, [2, 2, 2]) == "invalid"  # sum > m


def test_ss_params_rejects_invalid():
    with pytest.raises(InvalidSSParams):
        SSParams.of(3, 5, [2])


def _check_ss_instance(q, m, u, expect_d=None):
    code = solomon_stiffler(SSParams.of(q, m, u))
    n, k, d = ss_formula_params(q, m, u)
    assert (code.n, code.k) == (n, k)
    assert is_hermitian_self_orthogonal(code)
    q2 = code.field.q
    total = sum(ss_block_column_count(q, m, u, i) for i in range(1, len(u) + 2))
    assert total == n
    if expect_d is not None:
        assert min_distance(code) == expect_d == d


def test_solomon_stiffler_binary_instances():
    _check_ss_instance(2, 4, [2], expect_d=60)
    _check_ss_instance(2, 4, [2, 2], expect_d=56)
    _check_ss_instance(2, 4, [3], expect_d=48)
    _check_ss_instance(2, 5, [2], expect_d=252)


def test_solomon_stiffler_dual_side():
    code = solomon_stiffler(SSParams.of(2, 4, [2]))
    dual = hermitian_dual(code)
    assert (dual.n, dual.k) == (80, 76)
    assert is_hermitian_dual_containing(dual)
    assert distance_at_most(dual, 3) == 3
    rep = locality(dual)
    assert rep.locality == 59
    assert coverage_locality_check(dual)


def test_solomon_stiffler_q4_conditions():
    a = solomon_stiffler(SSParams.of(4, 4, [2]))
    assert (a.n, a.k) == (4352, 4)
    assert is_hermitian_self_orthogonal(a)
    b = solomon_stiffler(SSParams.of(4, 4, [2, 2]))
    assert (b.n, b.k) == (4335, 4)
    assert is_hermitian_self_orthogonal(b)


def test_ss_block_column_counts():
    # G_i carries N_{u_i} * (q^(2 w_i) - 1) columns, w_i the tail dimension
    q, m, u = 2, 4, (2,)
    assert ss_block_column_count(q, m, u, 1) == 5 * 15
    assert ss_block_column_count(q, m, u, 2) == 5
    q, m, u = 2, 4, (2, 2)
    assert ss_block_column_count(q, m, u, 1) == 5 * 15
    assert ss_block_column_count(q, m, u, 2) == 0  # no tail choices left
    assert ss_block_column_count(q, m, u, 3) == 0

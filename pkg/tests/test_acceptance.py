"""Acceptance suite: one test per criterion, exact tolerances, one
printed pass line each.  Run with `pytest tests/test_acceptance.py -v`."""

from qlrc.bounds import (
    KAPPA_BOUND_IDS,
    asymptotic_rate,
    finite_kappa_table,
    gg_singleton_kappa_max,
    pure_griesmer_holds,
    pure_singleton_delta_max,
    pure_sphere_packing_kappa_max,
)
from qlrc.codes import (
    coverage_locality_check,
    distance_at_most,
    euclidean_dual,
    hermitian_dual,
    is_hermitian_dual_containing,
    locality,
    make_code,
    min_distance,
)
from qlrc.constructions import SSParams, grm_hermitian_dual_code, hamming, solomon_stiffler
from qlrc.errors import RankDeficientGenerator
from qlrc.field import make_field, make_field_of_order, power_sum
from qlrc.matrix import conjugate_transpose, is_zero_matrix, mat_mul
from qlrc.quantum import check_optimality, hermitian_construction

F4 = make_field(2, 2)
F9 = make_field(3, 2)


def test_example_1_reproduction():
    """ss(2,4,[2]) -> [80,4,60] -> [[80,72,3]] with locality 59, and the
    [2,2] variant -> [[75,67,3]] with locality 55; both SP-optimal."""
    for u, n_cl, d_cl, kappa, r in [((2,), 80, 60, 72, 59), ((2, 2), 75, 56, 67, 55)]:
        ss = solomon_stiffler(SSParams.of(2, 4, u))
        gram = mat_mul(ss.generator, conjugate_transpose(ss.generator))
        assert is_zero_matrix(gram)
        assert (ss.n, ss.k) == (n_cl, 4)
        assert min_distance(ss) == d_cl
        code = hermitian_dual(ss)
        assert distance_at_most(code, 3) == 3  # column-dependence route
        report = locality(code)  # enumerates the 255 nonzero words of ss^q
        assert report.locality == r
        params = hermitian_construction(code)
        assert (params.n, params.kappa, params.delta, params.q) == (n_cl, kappa, 3, 2)
        assert params.pure and params.r == r
        assert pure_sphere_packing_kappa_max(n_cl, 3, 2, r) == kappa
        assert "pure-sphere-packing" in check_optimality(params).achieved()
    print("PASS: Example 1 reproduction (u=[2] and u=[2,2])")


def test_quantum_hamming_instances():
    """[[5,1,3]] meets Singleton/Griesmer/SP with equality; [[85,77,3]]
    meets SP exactly while the general Singleton bound only gives 79."""
    p = hermitian_construction(hamming(2, 2))
    assert (p.n, p.kappa, p.delta, p.q, p.r, p.pure) == (5, 1, 3, 2, 3, True)
    assert pure_singleton_delta_max(5, 1, 3) == 3
    assert pure_griesmer_holds(5, 1, 3, 2, 3) == (True, 0)
    assert pure_sphere_packing_kappa_max(5, 3, 2, 3) == 1

    p = hermitian_construction(hamming(2, 4))
    assert (p.n, p.kappa, p.delta, p.q, p.r, p.pure) == (85, 77, 3, 2, 63, True)
    assert pure_sphere_packing_kappa_max(85, 3, 2, 63) == 77
    gg = gg_singleton_kappa_max(85, 3, 63)
    assert gg == 79 and gg > 77  # the SP bound is strictly tighter here
    print("PASS: quantum Hamming instances (m=2, m=4)")


def test_quantum_grm_instance():
    """[16,13,3] dual-containing -> [[16,10,3]] with r=11, meeting the
    pure Singleton, Griesmer (ell=1 slack 0), and SP bounds exactly."""
    code = grm_hermitian_dual_code(2, 1, 2)
    assert (code.n, code.k) == (16, 13)
    assert distance_at_most(code, 3) == 3
    assert is_hermitian_dual_containing(code)
    p = hermitian_construction(code)
    assert (p.n, p.kappa, p.delta, p.q, p.r, p.pure) == (16, 10, 3, 2, 11, True)
    assert pure_singleton_delta_max(16, 10, 11) == 3
    holds, slack = pure_griesmer_holds(16, 10, 3, 2, 11)
    assert holds and slack == 0
    # the ell = 1 term is the active one: 12 + (3 + 1) = 16
    ell1 = 1 * (11 + 1) + sum(-(-3 // 2**t) for t in range(0, 3, 2))
    assert ell1 == 16
    assert pure_sphere_packing_kappa_max(16, 3, 2, 11) == 10
    achieved = set(check_optimality(p).achieved())
    assert {"pure-singleton", "pure-griesmer", "pure-sphere-packing"} <= achieved
    print("PASS: quantum GRM instance (q=2, v=1, m=2)")


def test_figure_1_regeneration():
    """q=2, r=3, delta=8, n in [30,130]: every pure kappa_max is at most
    the general Singleton kappa_max, exact integer comparison."""
    rows = finite_kappa_table(range(30, 131), 8, 2, 3)
    assert len(rows) == 101
    for row in rows:
        gg = row["gg-singleton"]
        for bound_id in KAPPA_BOUND_IDS[1:]:
            value = row[bound_id]
            if value is not None:
                assert gg is not None and value <= gg, (row["n"], bound_id)
    print("PASS: figure-1 regeneration (101 rows, dominance exact)")


def test_asymptotic_hierarchy():
    """plotkin <= griesmer(t) <= singleton < gg pointwise on the grid;
    strict in the middle whenever 1 < t < r."""
    tol = 1e-12
    for q in (2, 3):
        for r in (3, 5, 20):
            ts = sorted({1, 2, r})
            top = (r - 1) / (2 * r)
            grid = [i * 0.005 for i in range(int(top / 0.005) + 1)]
            for t in ts:
                for d in grid:
                    plotkin = asymptotic_rate("pure-plotkin", d, q, r)
                    griesmer = asymptotic_rate("pure-griesmer", d, q, r, t)
                    singleton = asymptotic_rate("pure-singleton", d, q, r)
                    gg = asymptotic_rate("gg-singleton", d, q, r)
                    assert plotkin <= griesmer + tol
                    assert griesmer <= singleton + tol
                    assert singleton < gg - tol
                    if 1 < t < r and d > 0:
                        assert plotkin < griesmer - tol
                        assert griesmer < singleton - tol
    print("PASS: asymptotic hierarchy (q in {2,3}, r in {3,5,20}, t in {1,2,r})")


def _oracle_codes():
    """>= 20 deterministic small codes over GF(4) and GF(9)."""
    codes = [
        make_code(F4, ((1, 2, 0, 2, 1), (0, 3, 2, 2, 3))),  # simplex
        hamming(2, 2),
        make_code(F4, [(1, 1, 1, 1), (0, 1, 2, 3)]),  # order-1 evaluation code
        make_code(F4, [(1, 1, 1, 1, 1, 1)]),
        make_code(F9, [(1, 0, 2, 5), (0, 1, 4, 7)]),
        make_code(F9, [(1, 1, 1, 1, 1)]),
    ]
    state = [987654321]

    def lcg(q):
        state[0] = (1103515245 * state[0] + 12345) % (1 << 31)
        return (state[0] >> 16) % q

    shapes = [
        (F4, 6, 3), (F4, 7, 3), (F4, 8, 4), (F4, 9, 4), (F4, 10, 5),
        (F4, 11, 5), (F4, 12, 6), (F4, 13, 6), (F4, 10, 4), (F4, 9, 3),
        (F9, 5, 2), (F9, 6, 2), (F9, 6, 3), (F9, 7, 3), (F9, 8, 4), (F9, 9, 4),
    ]
    for field, n, k in shapes:
        while True:
            rows = [[lcg(field.q) for _ in range(n)] for _ in range(k)]
            try:
                codes.append(make_code(field, rows))
                break
            except RankDeficientGenerator:
                continue
    return codes


def test_oracle_equivalence_suite():
    """Dual computation routes agree on >= 20 small codes: locality vs
    the coverage shortcut, enumeration vs column tests, and the
    Hermitian-dual identities."""
    codes = _oracle_codes()
    assert len(codes) >= 20
    locality_checked = 0
    window_checked = 0
    for c in codes:
        f = c.field
        hd = hermitian_dual(c)
        # involution and dimension
        assert hd.k == c.n - c.k
        back = hermitian_dual(hd)
        assert back.generator.entries == c.generator.entries
        # membership: G . (G_dual)-dagger = 0
        if hd.k:
            assert is_zero_matrix(
                mat_mul(c.generator, conjugate_transpose(hd.generator))
            )
        # distance: the two routes agree whenever the window answers
        exact = min_distance(c)
        window = distance_at_most(c, 4)
        if window is not None:
            window_checked += 1
            assert window == exact
        else:
            assert exact > 4
        # locality equals dual distance - 1 whenever coverage holds
        if f.q ** (c.n - c.k) <= 1 << 16 and c.k < c.n:
            if coverage_locality_check(c):
                locality_checked += 1
                report = locality(c)
                assert report.locality == report.dual_distance - 1
                assert report.dual_distance == min_distance(euclidean_dual(c))
    assert locality_checked >= 5 and window_checked >= 5
    print(
        f"PASS: oracle equivalence on {len(codes)} codes "
        f"({locality_checked} coverage-locality, {window_checked} window-distance)"
    )


def test_power_sum_closed_form():
    """Full-field power sums match the closed form for q in
    {2,3,4,8,9,16}, t <= 2(q-1); the t=3 sum over GF(4)* is -1 != 0."""
    for q in (2, 3, 4, 8, 9, 16):
        f = make_field_of_order(q)
        minus_one = f.neg(1)
        for t in range(0, 2 * (q - 1) + 1):
            got = power_sum(f, t)
            want = minus_one if (t > 0 and t % (q - 1) == 0) else 0
            assert got == want, (q, t)
    # the obstruction: sum of cubes over GF(4)* does not vanish
    assert power_sum(F4, 3) == F4.neg(1) != 0
    print("PASS: power-sum closed form (q in {2,3,4,8,9,16})")

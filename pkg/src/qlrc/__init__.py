"""Quantum locally recoverable codes from the Hermitian construction:
exact finite-field machinery, classical code certificates, finite and
asymptotic bounds, and optimal code families."""

from .bounds import (
    asymptotic_rate,
    bounds_table,
    clrc_griesmer_nmin,
    clrc_plotkin_dmax,
    clrc_singleton_dmax,
    clrc_sphere_packing_kmax,
    finite_kappa_table,
    gg_singleton_kappa_max,
    hilbert_entropy,
    kappa_max,
    pure_griesmer_holds,
    pure_plotkin_delta_max,
    pure_singleton_delta_max,
    pure_sphere_packing_kappa_max,
    volume,
)
from .codes import (
    LinearCode,
    LocalityReport,
    coverage_locality_check,
    distance_at_most,
    euclidean_dual,
    hermitian_dual,
    is_hermitian_dual_containing,
    is_hermitian_self_orthogonal,
    locality,
    make_code,
    min_distance,
)
from .constructions import (
    GRMParams,
    SSParams,
    grm,
    grm_dimension,
    grm_hermitian_dual_code,
    hamming,
    simplex,
    solomon_stiffler,
    validate_ss_conditions,
)
from .field import (
    ExtensionField,
    FiniteField,
    frobenius_conjugate,
    make_field,
    power_sum,
)
from .matrix import MatrixGF, conjugate_transpose, matrix, nullspace, row_reduce
from .quantum import (
    OptimalityReport,
    QlrcParams,
    build_named_family,
    check_optimality,
    hermitian_construction,
    purity,
)

__all__ = [name for name in dir() if not name.startswith("_")]

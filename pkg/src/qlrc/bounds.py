"""Every finite and asymptotic bound, exactly.

Integer bounds use exact integer arithmetic, the Plotkin family uses
exact rationals, and only the entropy/asymptotic family touches floating
point.  Optimality claims are equalities, so nothing here floors a
float.

The pure bounds apply to quantum codes obtained from a Hermitian
dual-containing [n, (n+kappa)/2] code over GF(q^2); the clrc bounds are
their classical counterparts at alphabet q^2.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction

from .errors import (
    DegenerateLength,
    DomainViolation,
    LocalityExceedsDimension,
    ParityViolation,
)

logger = logging.getLogger(__name__)

BOUND_IDS = (
    "gg-singleton",
    "clrc-singleton",
    "clrc-griesmer",
    "clrc-plotkin",
    "clrc-sphere-packing",
    "pure-singleton",
    "pure-griesmer",
    "pure-plotkin",
    "pure-sphere-packing",
)

KAPPA_BOUND_IDS = (
    "gg-singleton",
    "pure-singleton",
    "pure-griesmer",
    "pure-plotkin",
    "pure-sphere-packing",
)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def volume(q: int, n: int, a: int) -> int:
    """Number of words within Hamming distance a of a fixed word in GF(q)^n."""
    if a < 0 or n < 0:
        raise ValueError("volume needs n >= 0 and a >= 0")
    return sum(math.comb(n, i) * (q - 1) ** i for i in range(a + 1))


def _min_power_exponent(q: int, v: int) -> int:
    """Smallest s with q^s >= v."""
    s, pw = 0, 1
    while pw < v:
        pw *= q
        s += 1
    return s


# -- classical bounds ---------------------------------------------------------


def gg_singleton_kappa_max(n: int, delta: int, r: int) -> int | None:
    """Singleton-type dimension bound for general quantum codes with
    locality r; None when even kappa = 0 is excluded."""
    if n < 1 or delta < 1 or r < 1:
        raise ValueError("need n >= 1, delta >= 1, r >= 1")
    a = n - 2 * (delta - 1)
    t1 = (n - (delta - 1)) // (r + 1)
    t2 = (a - t1) // (r + 1)
    kappa = a - t1 - t2
    return kappa if kappa >= 0 else None


def clrc_singleton_dmax(n: int, k: int, r: int) -> int:
    """Alphabet-free distance bound n - k - ceil(k/r) + 2 for r-LRCs."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if r < 1 or r > k:
        raise LocalityExceedsDimension(f"locality {r} exceeds dimension {k}")
    return n - k - _ceil_div(k, r) + 2


def clrc_griesmer_nmin(k: int, d: int, q: int, r: int) -> int:
    """Griesmer-style length lower bound for r-LRCs, exact integers."""
    if k < 1 or d < 1 or r < 1 or q < 2:
        raise ValueError("need k >= 1, d >= 1, r >= 1, q >= 2")
    best = 0
    for ell in range(_ceil_div(k, r)):
        terms = k - ell * r
        total = ell * (r + 1)
        pw = 1
        for i in range(terms):
            if pw >= d:
                total += terms - i  # remaining ceilings are all 1
                break
            total += _ceil_div(d, pw)
            pw *= q
        best = max(best, total)
    return best


def clrc_plotkin_dmax(n: int, k: int, q: int, r: int) -> Fraction:
    """Plotkin-style distance bound for r-LRCs as an exact rational."""
    if n < 1 or k < 1 or r < 1 or q < 2:
        raise ValueError("need n >= 1, k >= 1, r >= 1, q >= 2")
    best = None
    for ell in range(_ceil_div(k, r)):
        length = n - ell * (r + 1)
        if length <= 0:
            logger.warning(
                "plotkin term skipped: ell=%d makes n - ell(r+1) = %d <= 0",
                ell,
                length,
            )
            continue
        e = k - ell * r
        term = Fraction(q ** (e - 1) * (q - 1) * length, q**e - 1)
        if best is None or term < best:
            best = term
    if best is None:
        raise DegenerateLength("every term has nonpositive effective length")
    return best


def clrc_sphere_packing_kmax(n: int, d: int, q: int, r: int) -> int:
    """Sphere-packing dimension bound for r-LRCs via exact big-integer
    power comparisons (no floating logs)."""
    if n < 1 or d < 1 or r < 1 or q < 2:
        raise ValueError("need n >= 1, d >= 1, r >= 1, q >= 2")
    radius = (d - 1) // 2
    worst = 0
    for ell in range((n - 1) // (r + 1) + 1):
        v = volume(q, n - ell * (r + 1), radius)
        worst = max(worst, ell + _min_power_exponent(q, v))
    return n - worst


# -- pure bounds (quantum side) -----------------------------------------------


def _require_parity(n: int, kappa: int) -> None:
    if (n + kappa) % 2 != 0:
        raise ParityViolation(f"n + kappa = {n + kappa} must be even")


def _require_locality(n: int, kappa: int, r: int) -> None:
    if 2 * r > n + kappa:
        raise LocalityExceedsDimension(
            f"locality {r} exceeds the classical dimension (n + kappa)/2"
        )


def pure_singleton_delta_max(n: int, kappa: int, r: int) -> int:
    """Largest delta allowed by the pure Singleton-type bound."""
    if n + kappa < 2 or r < 1:
        raise ValueError("need n + kappa >= 2 and r >= 1")
    _require_parity(n, kappa)
    _require_locality(n, kappa, r)
    return _pure_singleton_dmax_raw(n, kappa, r)


def _pure_singleton_dmax_raw(n: int, kappa: int, r: int) -> int:
    return (n - kappa - 2 * _ceil_div(n + kappa, 2 * r) + 4) // 2


def pure_griesmer_holds(
    n: int, kappa: int, delta: int, q: int, r: int
) -> tuple[bool, int]:
    """Whether the pure Griesmer-type length bound holds, and the slack
    n - RHS (0 means equality)."""
    if delta < 1 or q < 2 or r < 1 or n + kappa < 2:
        raise ValueError("need delta >= 1, q >= 2, r >= 1, n + kappa >= 2")
    _require_parity(n, kappa)
    _require_locality(n, kappa, r)
    rhs = _pure_griesmer_rhs_raw(n, kappa, delta, q, r)
    return n >= rhs, n - rhs


def _pure_griesmer_rhs_raw(n: int, kappa: int, delta: int, q: int, r: int) -> int:
    best = 0
    for ell in range(_ceil_div(n + kappa, 2 * r)):
        limit = n + kappa - 2 * ell * r - 2
        total = ell * (r + 1)
        pw = 1
        q2 = q * q
        for t in range(0, limit + 1, 2):
            if pw >= delta:
                total += (limit - t) // 2 + 1  # remaining ceilings are all 1
                break
            total += _ceil_div(delta, pw)
            pw *= q2
        best = max(best, total)
    return best


def pure_plotkin_delta_max(n: int, kappa: int, q: int, r: int) -> Fraction:
    """Largest delta allowed by the pure Plotkin-type bound, exact rational."""
    if n < 1 or q < 2 or r < 1 or n + kappa < 2:
        raise ValueError("need n >= 1, q >= 2, r >= 1, n + kappa >= 2")
    _require_parity(n, kappa)
    _require_locality(n, kappa, r)
    best = _pure_plotkin_min_raw(n, kappa, q, r, warn=True)
    if best is None:
        raise DegenerateLength("every term has nonpositive effective length")
    return best


def _pure_plotkin_min_raw(
    n: int, kappa: int, q: int, r: int, warn: bool = False
) -> Fraction | None:
    best = None
    for ell in range(_ceil_div(n + kappa, 2 * r)):
        length = n - ell * (r + 1)
        if length <= 0:
            if warn:
                logger.warning(
                    "plotkin term skipped: ell=%d makes n - ell(r+1) = %d <= 0",
                    ell,
                    length,
                )
            continue
        e = n + kappa - 2 * ell * r
        # q^(e-2) (q^2 - 1) length / (q^e - 1), kept integer-safe for e = 1
        term = Fraction(q**e * (q * q - 1) * length, q * q * (q**e - 1))
        if best is None or term < best:
            best = term
    return best


def pure_sphere_packing_kappa_max(n: int, delta: int, q: int, r: int) -> int | None:
    """Largest kappa (n + kappa even) allowed by the pure sphere-packing
    bound; None when no classical dimension k >= 1 works."""
    if n < 1 or delta < 1 or q < 2 or r < 1:
        raise ValueError("need n >= 1, delta >= 1, q >= 2, r >= 1")
    k_max = clrc_sphere_packing_kmax(n, delta, q * q, r)
    if k_max < 1:
        return None
    return 2 * k_max - n


def _pure_sp_ok(n: int, kappa: int, delta: int, q: int, r: int) -> bool:
    radius = (delta - 1) // 2
    for ell in range((n - 1) // (r + 1) + 1):
        v = volume(q * q, n - ell * (r + 1), radius)
        if n - kappa - 2 * ell < _min_power_exponent(q, v):
            return False
    return True


def _scan_kappa_max(predicate, lo: int, hi: int, step: int) -> int | None:
    """Largest kappa in {lo, lo+step, ..., <= hi} satisfying a predicate
    that is monotone (true stays true as kappa decreases)."""
    if hi < lo:
        return None
    count = (hi - lo) // step
    hi = lo + count * step
    if not predicate(lo):
        return None
    lo_i, hi_i = 0, count
    while lo_i < hi_i:
        mid = (lo_i + hi_i + 1) // 2
        if predicate(lo + mid * step):
            lo_i = mid
        else:
            hi_i = mid - 1
    return lo + lo_i * step


def kappa_max(
    bound_id: str,
    n: int,
    delta: int,
    q: int,
    r: int,
    enforce_parity: bool = True,
) -> int | None:
    """Largest admissible dimension kappa >= 0 under the named bound.

    Pure bounds restrict to kappa with r <= (n + kappa)/2 and, when
    enforce_parity is set, to n + kappa even.  None means no quantum
    code dimension is admitted.
    """
    if bound_id not in KAPPA_BOUND_IDS:
        raise ValueError(f"unknown kappa bound {bound_id!r}")
    if n < 1 or delta < 1 or q < 2 or r < 1:
        raise ValueError("need n >= 1, delta >= 1, q >= 2, r >= 1")
    if bound_id == "gg-singleton":
        return gg_singleton_kappa_max(n, delta, r)
    step = 2 if enforce_parity else 1
    lo = max(0, 2 * r - n)
    if enforce_parity and (n + lo) % 2 != 0:
        lo += 1
    if bound_id == "pure-singleton":
        pred = lambda kap: delta <= _pure_singleton_dmax_raw(n, kap, r)
    elif bound_id == "pure-griesmer":
        pred = lambda kap: n >= _pure_griesmer_rhs_raw(n, kap, delta, q, r)
    elif bound_id == "pure-plotkin":

        def pred(kap):
            best = _pure_plotkin_min_raw(n, kap, q, r)
            return best is not None and delta <= best

    else:  # pure-sphere-packing
        pred = lambda kap: _pure_sp_ok(n, kap, delta, q, r)
    return _scan_kappa_max(pred, lo, n, step)


# -- asymptotics --------------------------------------------------------------


def hilbert_entropy(q2: int, x: float) -> float:
    """The q2-ary entropy function on [0, 1 - 1/q2]."""
    if q2 < 2:
        raise ValueError("alphabet must have size >= 2")
    limit = 1.0 - 1.0 / q2
    if x < 0.0 or x > limit + 1e-12:
        raise DomainViolation(f"{x} outside [0, {limit}]")
    if x == 0.0:
        return 0.0
    x = min(x, limit)
    lq = math.log(q2)
    return (
        x * math.log(q2 - 1) / lq
        - x * math.log(x) / lq
        - (1.0 - x) * math.log(1.0 - x) / lq
    )


def asymptotic_rate(
    bound_id: str, delta: float, q: int, r: int, t: int | None = None
) -> float:
    """Asymptotic rate upper bound (without the o(1) term) at relative
    distance delta."""
    if not 0.0 <= delta <= 1.0:
        raise DomainViolation(f"relative distance {delta} outside [0, 1]")
    if q < 2 or r < 1:
        raise ValueError("need q >= 2 and r >= 1")
    if bound_id == "gg-singleton":
        return (r / (r + 1)) ** 2 - r * (2 * r + 1) / (r + 1) ** 2 * delta
    if bound_id == "pure-singleton":
        return (r - 1) / (r + 1) - 2 * r / (r + 1) * delta
    if bound_id in ("pure-griesmer", "pure-plotkin"):
        if bound_id == "pure-plotkin":
            t = r
        elif t is None or not 1 <= t <= r:
            raise DomainViolation(f"griesmer slice t={t} outside [1, {r}]")
        coeff = (q ** (2 * t) - 1) / (q ** (2 * t) - q ** (2 * t - 2))
        return (r - 1) / (r + 1) - 2 * r / (r + 1) * coeff * delta
    if bound_id == "pure-sphere-packing":
        if delta / 2 > 1.0 - 1.0 / (q * q) + 1e-12:
            raise DomainViolation(f"delta/2 = {delta / 2} beyond entropy domain")
        return 1.0 - 2.0 * hilbert_entropy(q * q, delta / 2)
    raise ValueError(f"unknown asymptotic bound {bound_id!r}")


# -- tables -------------------------------------------------------------------


def finite_kappa_table(
    n_values, delta: int, q: int, r: int, enforce_parity: bool = True
) -> list[dict]:
    """One row per n: the kappa_max of every kappa-direction bound."""
    rows = []
    for n in n_values:
        row = {"n": n}
        for bound_id in KAPPA_BOUND_IDS:
            row[bound_id] = kappa_max(bound_id, n, delta, q, r, enforce_parity)
        rows.append(row)
    return rows


def asymptotic_rate_table(deltas, q: int, r: int, t: int) -> list[dict]:
    """One row per relative distance: every asymptotic rate bound."""
    rows = []
    for d in deltas:
        row = {"delta": d}
        for bound_id in KAPPA_BOUND_IDS:
            row[bound_id] = asymptotic_rate(bound_id, d, q, r, t)
        rows.append(row)
    return rows


def bounds_table(n: int, kappa: int, delta: int, q: int, r: int) -> dict:
    """Every bound evaluated against a candidate [[n, kappa, delta]]_q
    code with locality r: bound-id -> {value, equality}.

    The clrc entries evaluate the classical side [n, (n+kappa)/2] over
    GF(q^2).  A None value means the bound is inapplicable there.
    """
    table: dict[str, dict] = {}

    def entry(bound_id, fn, candidate):
        try:
            value = fn()
        except (LocalityExceedsDimension, ParityViolation, DegenerateLength):
            value = None
        if value is None:
            table[bound_id] = {"value": None, "equality": None}
        else:
            table[bound_id] = {"value": value, "equality": value == candidate}

    entry("gg-singleton", lambda: gg_singleton_kappa_max(n, delta, r), kappa)
    if (n + kappa) % 2 == 0:
        k = (n + kappa) // 2
        q2 = q * q
        entry("clrc-singleton", lambda: clrc_singleton_dmax(n, k, r), delta)
        entry("clrc-griesmer", lambda: clrc_griesmer_nmin(k, delta, q2, r), n)
        entry("clrc-plotkin", lambda: clrc_plotkin_dmax(n, k, q2, r), delta)
        entry(
            "clrc-sphere-packing", lambda: clrc_sphere_packing_kmax(n, delta, q2, r), k
        )
        entry("pure-singleton", lambda: pure_singleton_delta_max(n, kappa, r), delta)
        entry(
            "pure-griesmer",
            lambda: n - pure_griesmer_holds(n, kappa, delta, q, r)[1],
            n,
        )
        entry("pure-plotkin", lambda: pure_plotkin_delta_max(n, kappa, q, r), delta)
        entry(
            "pure-sphere-packing",
            lambda: pure_sphere_packing_kappa_max(n, delta, q, r),
            kappa,
        )
    else:
        for bound_id in BOUND_IDS[1:]:
            table[bound_id] = {"value": None, "equality": None}
    return table

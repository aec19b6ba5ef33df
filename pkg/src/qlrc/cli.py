"""Command-line surface: construct, verify, bounds, family, figure.

Exit codes: 0 success, 2 usage or hypothesis violation, 3 internal
certificate mismatch, 4 verification failure.  All output is
deterministic for fixed flags; CSV files are written to a temp path and
renamed only on success.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import bounds as bounds_mod
from .codes import (
    LinearCode,
    code_distance,
    euclidean_dual,
    hermitian_dual,
    is_hermitian_dual_containing,
    is_hermitian_self_orthogonal,
    locality,
)
from .constructions import (
    SSParams,
    grm,
    grm_hermitian_dual_code,
    hamming,
    simplex,
    solomon_stiffler,
)
from .errors import CertificateMismatch, HypothesisViolated, QlrcError
from .jsonio import code_from_json, code_to_json, dumps, jsonable
from .quantum import check_optimality, hermitian_construction, purity, quantum_certificate

CLI_CAP_DEFAULT = 1 << 22

ALL_CHECKS = (
    "hso",
    "dual-containing",
    "distance",
    "dual-distance",
    "locality",
    "purity",
    "qparams",
    "optimality",
)

FIGURE1_COLUMNS = (
    "n",
    "kappa_gg",
    "kappa_singleton",
    "kappa_griesmer",
    "kappa_plotkin",
    "kappa_sp",
)
FIGURE23_COLUMNS = (
    "delta",
    "r_gg",
    "r_singleton",
    "r_griesmer",
    "r_plotkin",
    "r_sp",
)


def _threads() -> int:
    """Worker cap from QLRC_THREADS; computation is serial either way."""
    raw = os.environ.get("QLRC_THREADS", "1")
    try:
        value = int(raw)
    except ValueError as exc:
        raise HypothesisViolated(f"QLRC_THREADS = {raw!r} is not an integer") from exc
    if value < 1:
        raise HypothesisViolated("QLRC_THREADS must be >= 1")
    return value


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out_path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".qlrc-tmp-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, out_path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _fmt_real(x: float) -> str:
    return f"{x:.12g}"


def _parse_u(raw: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in raw.split(","))
    except ValueError as exc:
        raise HypothesisViolated(f"--u expects a comma list of integers: {raw!r}") from exc


# -- construct ----------------------------------------------------------------


def build_family_code(args) -> LinearCode:
    family = args.family
    if family == "hamming":
        _need(args, "q", "m")
        return hamming(args.q, args.m)
    if family == "simplex":
        _need(args, "q", "m")
        return simplex(args.q, args.m)
    if family == "grm":
        _need(args, "q", "v", "m")
        return grm(args.q, args.v, args.m)
    if family == "grm-hdual":
        _need(args, "q", "v", "m")
        return grm_hermitian_dual_code(args.q, args.v, args.m)
    if family == "ss":
        _need(args, "q", "m", "u")
        return solomon_stiffler(SSParams.of(args.q, args.m, _parse_u(args.u)))
    raise HypothesisViolated(f"unknown family {family!r}")


def _need(args, *names) -> None:
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise HypothesisViolated(
            f"--family {args.family} requires --" + ", --".join(missing)
        )


def classical_certificate(code: LinearCode, cap: int) -> dict:
    """The five-key certificate block; entries that exceed the cap are null.

    For a Hermitian self-orthogonal code the locality reported is that of
    its (dual-containing) Hermitian dual, the quantum-relevant side; both
    sides enumerate the same small span.
    """
    hso = is_hermitian_self_orthogonal(code)
    dual_containing = is_hermitian_dual_containing(code)
    d = code_distance(code, cap)
    try:
        d_dual = code_distance(euclidean_dual(code), cap)
    except QlrcError:
        d_dual = None
    loc = None
    try:
        if dual_containing:
            loc = locality(code, cap).locality
        elif hso:
            loc = locality(hermitian_dual(code), cap).locality
        else:
            loc = locality(code, cap).locality
    except QlrcError:
        loc = None
    return {
        "d": d,
        "d_dual": d_dual,
        "locality": loc,
        "hso": hso,
        "dual_containing": dual_containing,
    }


def _require_format(args, allowed: tuple[str, ...]) -> None:
    if args.format not in allowed:
        raise HypothesisViolated(
            f"--format {args.format} not supported here (use {'/'.join(allowed)})"
        )


def cmd_construct(args) -> int:
    _require_format(args, ("json", "text"))
    code = build_family_code(args)
    certificate = classical_certificate(code, args.cap)
    if args.format == "text":
        text = (
            f"[{code.n},{code.k}] code over GF({code.field.q}); "
            + "; ".join(f"{k}={v}" for k, v in certificate.items())
            + "\n"
        )
    else:
        text = dumps(code_to_json(code, certificate))
    _emit(text, args.out)
    return 0


# -- verify -------------------------------------------------------------------


def cmd_verify(args) -> int:
    _require_format(args, ("json", "text"))
    with open(args.code_file) as fh:
        obj = json.load(fh)
    code, embedded = code_from_json(obj)
    checks = ALL_CHECKS if args.checks is None else tuple(args.checks.split(","))
    unknown = [c for c in checks if c not in ALL_CHECKS]
    if unknown:
        raise HypothesisViolated(f"unknown checks: {unknown}")
    if "optimality" in checks and "qparams" not in checks:
        checks = checks + ("qparams",)

    failures: list[str] = []
    result: dict = {
        "d": None,
        "d_dual": None,
        "locality": None,
        "hso": None,
        "dual_containing": None,
    }

    hso = is_hermitian_self_orthogonal(code)
    dual_containing = is_hermitian_dual_containing(code)
    if "hso" in checks:
        result["hso"] = hso
        if embedded is None and not hso:
            failures.append("hso: code is not Hermitian self-orthogonal")
    if "dual-containing" in checks:
        result["dual_containing"] = dual_containing
        if embedded is None and not dual_containing:
            failures.append("dual-containing: code is not Hermitian dual-containing")
    if "distance" in checks:
        result["d"] = code_distance(code, args.cap)
    if "dual-distance" in checks:
        try:
            result["d_dual"] = code_distance(euclidean_dual(code), args.cap)
        except QlrcError as exc:
            failures.append(f"dual-distance: {exc}")
    if "locality" in checks:
        try:
            if dual_containing:
                result["locality"] = locality(code, args.cap).locality
            elif hso:
                result["locality"] = locality(hermitian_dual(code), args.cap).locality
            else:
                result["locality"] = locality(code, args.cap).locality
        except QlrcError as exc:
            failures.append(f"locality: {exc}")

    quantum_input = None
    if dual_containing:
        quantum_input = code
    elif hso:
        quantum_input = hermitian_dual(code)

    if "purity" in checks:
        if quantum_input is None:
            failures.append("purity: code is neither dual-containing nor self-orthogonal")
        else:
            pure, delta = purity(quantum_input, args.cap)
            result["purity"] = {"pure": pure, "delta": delta}
    if "qparams" in checks:
        if quantum_input is None:
            failures.append("qparams: code is neither dual-containing nor self-orthogonal")
        else:
            try:
                params = hermitian_construction(quantum_input, args.cap)
                if "optimality" in checks:
                    result["qparams"] = quantum_certificate(
                        params, check_optimality(params)
                    )
                else:
                    result["qparams"] = {
                        "n": params.n,
                        "kappa": params.kappa,
                        "delta": params.delta,
                        "q": params.q,
                        "r": params.r,
                        "pure": params.pure,
                    }
            except QlrcError as exc:
                failures.append(f"qparams: {exc}")

    if embedded is not None:
        for key in ("d", "d_dual", "locality", "hso", "dual_containing"):
            recomputed = result.get(key)
            if key in embedded and recomputed is not None and embedded[key] is not None:
                if recomputed != embedded[key]:
                    failures.append(
                        f"{key}: recomputed {recomputed} != embedded {embedded[key]}"
                    )

    if failures:
        result["failures"] = failures
    if args.format == "text":
        lines = [f"{k}: {jsonable(v)}" for k, v in result.items()]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(dumps(result), args.out)
    return 4 if failures else 0


# -- bounds -------------------------------------------------------------------


def cmd_bounds(args) -> int:
    n_min = args.n_min if args.n_min is not None else 30
    n_max = args.n_max if args.n_max is not None else n_min
    if args.r < 1 or args.delta < 1 or args.q < 2 or n_min < 1 or n_max < n_min:
        raise HypothesisViolated("need q >= 2, r >= 1, delta >= 1, 1 <= n-min <= n-max")
    rows = bounds_mod.finite_kappa_table(
        range(n_min, n_max + 1), args.delta, args.q, args.r, not args.no_parity
    )
    if args.format == "csv":
        text = _kappa_rows_to_csv(rows)
    elif args.format == "text":
        lines = ["  ".join(FIGURE1_COLUMNS)]
        for row in rows:
            lines.append(
                "  ".join(
                    "" if row[key] is None else str(row[key])
                    for key in ("n",) + bounds_mod.KAPPA_BOUND_IDS
                )
            )
        text = "\n".join(lines) + "\n"
    else:
        text = dumps(rows)
    _emit(text, args.out)
    return 0


def _kappa_rows_to_csv(rows) -> str:
    lines = [",".join(FIGURE1_COLUMNS)]
    for row in rows:
        cells = [str(row["n"])]
        for bound_id in bounds_mod.KAPPA_BOUND_IDS:
            value = row[bound_id]
            cells.append("" if value is None else str(value))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


# -- family -------------------------------------------------------------------


def cmd_family(args) -> int:
    from .quantum import build_named_family

    _require_format(args, ("json", "text"))
    u = _parse_u(args.u) if args.u is not None else None
    cert = build_named_family(
        args.family, q=args.q, m=args.m, v=args.v, u=u, cap=args.cap
    )
    payload = {
        "family": cert.family,
        **quantum_certificate(cert.params, cert.report),
    }
    if args.format == "text":
        p = cert.params
        text = (
            f"{cert.family}: [[{p.n},{p.kappa},{p.delta}]]_{p.q} r={p.r} "
            f"{'pure' if p.pure else 'impure'}; optimal: "
            + (", ".join(payload["optimal"]) or "none")
            + "\n"
        )
    else:
        text = dumps(payload)
    _emit(text, args.out)
    return 0


# -- figure -------------------------------------------------------------------


def cmd_figure(args) -> int:
    _require_format(args, ("csv",))
    if args.id == 1:
        q = args.q if args.q is not None else 2
        r = args.r if args.r is not None else 3
        delta = args.delta if args.delta is not None else 8
        n_min = args.n_min if args.n_min is not None else 30
        n_max = args.n_max if args.n_max is not None else 130
        if r < 1 or delta < 1 or q < 2 or n_min < 1 or n_max < n_min:
            raise HypothesisViolated("invalid grid: need q >= 2, r >= 1, delta >= 1, n-min <= n-max")
        rows = bounds_mod.finite_kappa_table(
            range(n_min, n_max + 1), delta, q, r, not args.no_parity
        )
        for row in rows:
            gg = row["gg-singleton"]
            for bound_id in bounds_mod.KAPPA_BOUND_IDS[1:]:
                value = row[bound_id]
                if value is None:
                    continue
                if gg is None or value > gg:
                    raise CertificateMismatch(
                        f"n={row['n']}: {bound_id} kappa_max {value} exceeds "
                        f"gg-singleton {gg}"
                    )
        text = _kappa_rows_to_csv(rows)
    elif args.id in (2, 3):
        q = args.q if args.q is not None else 2
        r = args.r if args.r is not None else (5 if args.id == 2 else 20)
        t = args.t if args.t is not None else 2
        step = args.grid_step if args.grid_step is not None else 0.005
        if r < 1 or q < 2 or not 1 <= t <= r or step <= 0:
            raise HypothesisViolated("invalid grid: need q >= 2, r >= 1, 1 <= t <= r, step > 0")
        deltas = []
        i = 0
        while True:
            d = i * step
            if d > 0.45 + 1e-12:
                break
            deltas.append(d)
            i += 1
        rows = bounds_mod.asymptotic_rate_table(deltas, q, r, t)
        lines = [",".join(FIGURE23_COLUMNS)]
        for row in rows:
            cells = [_fmt_real(row["delta"])]
            cells += [_fmt_real(row[b]) for b in bounds_mod.KAPPA_BOUND_IDS]
            lines.append(",".join(cells))
        text = "\n".join(lines) + "\n"
    else:
        raise HypothesisViolated(f"unknown figure id {args.id}")
    _emit(text, args.out)
    return 0


# -- entry point --------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qlrc",
        description="Quantum locally recoverable codes: constructions, "
        "certificates, and bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="write output to this path (atomic)")
        p.add_argument(
            "--cap",
            type=int,
            default=CLI_CAP_DEFAULT,
            help="enumeration cap on q^dim exhaustions",
        )
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")

    p = sub.add_parser("construct", help="build a code family instance")
    p.add_argument(
        "--family",
        required=True,
        choices=("hamming", "simplex", "grm", "grm-hdual", "ss"),
    )
    p.add_argument("--q", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--v", type=int)
    p.add_argument("--u", help="comma list, e.g. 2,2")
    common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="recompute certificates for a code file")
    p.add_argument("code_file")
    p.add_argument("--checks", help="comma list from: " + ",".join(ALL_CHECKS))
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="kappa_max tables for every bound")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--no-parity", action="store_true")
    common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("family", help="certify a named quantum family instance")
    p.add_argument(
        "--family",
        required=True,
        choices=("hamming-lrc", "grm-lrc", "ss1-lrc", "ss2-lrc"),
    )
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--v", type=int)
    p.add_argument("--u", help="comma list, e.g. 2,2")
    common(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("figure", help="emit figure data as CSV")
    p.add_argument("--id", type=int, required=True, choices=(1, 2, 3))
    p.add_argument("--q", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--grid-step", type=float)
    p.add_argument("--no-parity", action="store_true")
    common(p)
    p.set_defaults(func=cmd_figure, format="csv")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        _threads()
        return args.func(args)
    except CertificateMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except HypothesisViolated as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QlrcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())

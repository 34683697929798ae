"""Command-line front end: curves, parameter scans and validation reports.

Subcommands::

    antibunch bare     --drive incoherent --P 1.0 --tau-max 10 --points 200
    antibunch noise    --xi 0.4142 --model coherent
    antibunch jitter   --kind exponential --Gamma 1 --drive incoherent
    antibunch filter   --drive coherent --omega 2 --Gamma 1 --method both
    antibunch scan     fig4c
    antibunch validate

Output is CSV (``tau,g2[,g2_oracle][,envelope_lo,envelope_hi]``; long-format
``x,y,value`` for 2-D scans) or JSON, to stdout or ``--out PATH``.  A flat
``key = value`` config file supplies defaults that explicit flags override.

Exit codes: 0 success, 2 usage error, 3 runtime/I-O error, 4 validation
failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from datetime import datetime, timezone

__all__ = ["main"]

_VERSION = "1.0.0"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RUNTIME = 3
EXIT_VALIDATION = 4


class UsageError(Exception):
    pass


class ValidationFailure(Exception):
    pass


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antibunch",
        description="Photon correlations of a driven two-level emitter and "
                    "their degradation by noise, detector jitter and "
                    "frequency filtering.",
    )
    parser.add_argument("--version", action="version", version=_VERSION)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", metavar="PATH", default=None,
                       help="output file (default: stdout)")
        p.add_argument("--config", metavar="PATH", default=None,
                       help="flat key = value config file; flags override it")
        p.add_argument("--no-timestamp", action="store_true",
                       help="omit the timestamp header line")

    def add_grid(p: argparse.ArgumentParser) -> None:
        p.add_argument("--tau-max", type=float, default=10.0,
                       help="largest delay, in units of 1/gamma_sigma")
        p.add_argument("--points", type=int, default=200)

    def add_drive(p: argparse.ArgumentParser, kinds=("incoherent", "coherent",
                                                     "heitler")) -> None:
        p.add_argument("--drive", choices=kinds, default="incoherent")
        p.add_argument("--P", type=float, default=1.0,
                       help="incoherent pump rate (units of gamma_sigma)")
        p.add_argument("--omega", type=float, default=2.0,
                       help="coherent drive amplitude (units of gamma_sigma)")
        p.add_argument("--gamma", type=float, default=1.0,
                       help="emitter decay rate (sets the unit system)")

    p = sub.add_parser("bare", help="unperturbed g2(tau) of the emitter")
    add_drive(p)
    add_grid(p)
    add_common(p)

    p = sub.add_parser("noise", help="signal contaminated by uncorrelated noise")
    add_drive(p)
    add_grid(p)
    p.add_argument("--xi", type=float, required=True,
                   help="noise-to-signal intensity ratio")
    p.add_argument("--model", choices=("coherent", "thermal"), default="coherent")
    p.add_argument("--gamma-n", type=float, default=1.0,
                   help="thermal-noise correlation decay rate")
    add_common(p)

    p = sub.add_parser("jitter", help="correlations blurred by detector time-jitter")
    add_drive(p, kinds=("incoherent", "coherent"))
    add_grid(p)
    p.add_argument("--kind", choices=("heaviside", "exponential", "laplace",
                                      "gaussian"), default="gaussian")
    p.add_argument("--convention", choices=("equal_variance", "natural"),
                   default="equal_variance")
    p.add_argument("--Gamma", type=float, default=1.0,
                   help="inverse jitter time scale (units of gamma_sigma)")
    p.add_argument("--method", choices=("closed-form", "oracle", "both"),
                   default="closed-form")
    p.add_argument("--tolerance", type=float, default=1e-5,
                   help="max closed-form/oracle deviation allowed by --method both")
    add_common(p)

    p = sub.add_parser("filter", help="correlations after Lorentzian frequency filtering")
    add_drive(p)
    add_grid(p)
    p.add_argument("--Gamma", type=float, default=1.0,
                   help="filter linewidth (units of gamma_sigma); 0 selects "
                        "the narrow-filter proxy 1e-3")
    p.add_argument("--method", choices=("closed-form", "oracle", "both"),
                   default="closed-form")
    p.add_argument("--tolerance", type=float, default=1e-5,
                   help="max closed-form/oracle deviation allowed by --method both")
    add_common(p)

    p = sub.add_parser("scan", help="reproduce a named parameter scan")
    p.add_argument("selector", choices=("fig2c", "fig3c", "fig4c", "fig5c",
                                        "fig6"))
    add_common(p)

    p = sub.add_parser("validate", help="run the analytic-vs-oracle suite")
    p.add_argument("--fault", default=None,
                   help="perturb one named formula (self-test of the validator)")
    p.add_argument("--quick", action="store_true",
                   help="trimmed parameter grids")
    add_common(p)

    return parser


def _load_config(path: str) -> dict:
    values: dict[str, str] = {}
    try:
        with open(path, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise UsageError(
                        f"{path}:{lineno}: expected 'key = value', got {raw!r}")
                key, value = (part.strip() for part in line.split("=", 1))
                values[key.replace("-", "_")] = value
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from exc
    return values


def _coerce(value: str, like) -> object:
    if isinstance(like, bool):
        return value.strip().lower() in ("1", "true", "yes", "on")
    if isinstance(like, int) and not isinstance(like, bool):
        return int(value)
    if isinstance(like, float):
        return float(value)
    return value


def _apply_config(args: argparse.Namespace, argv: list[str]) -> argparse.Namespace:
    """Overlay config-file values beneath explicitly passed flags."""
    if not getattr(args, "config", None):
        return args
    config = _load_config(args.config)
    explicit = {a.lstrip("-").split("=", 1)[0].replace("-", "_")
                for a in argv if a.startswith("--")}
    for key, raw in config.items():
        if key in ("config",) or key in explicit or not hasattr(args, key):
            continue
        try:
            setattr(args, key, _coerce(raw, getattr(args, key)))
        except ValueError as exc:
            raise UsageError(f"config value {key} = {raw!r}: {exc}") from exc
    return args


# ---------------------------------------------------------------------------
# output plumbing
# ---------------------------------------------------------------------------

def _metadata(args: argparse.Namespace, extra: dict) -> dict:
    meta = {"artifact": "antibunch", "version": _VERSION,
            "command": args.command}
    meta.update(extra)
    if not getattr(args, "no_timestamp", False):
        meta["timestamp"] = datetime.now(timezone.utc).isoformat()
    return meta


def _emit(args: argparse.Namespace, columns: list[str], rows: list[tuple],
          meta: dict) -> None:
    if args.format == "json":
        payload = {"meta": meta, "columns": columns,
                   "rows": [list(r) for r in rows]}
        text = json.dumps(payload, indent=2) + "\n"
    else:
        buf = io.StringIO()
        for key, value in meta.items():
            buf.write(f"# {key}: {value}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])
        text = buf.getvalue()
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise RuntimeError(f"cannot write {args.out}: {exc}") from exc
    else:
        sys.stdout.write(text)


def _fmt(value) -> str:
    if isinstance(value, float):
        return format(value, ".12g")
    return str(value)


# ---------------------------------------------------------------------------
# physics helpers (imported lazily so ANTIBUNCH_THREADS can cap BLAS pools)
# ---------------------------------------------------------------------------

def _emitter(args: argparse.Namespace):
    from .emitter import CoherentDrive, EmitterParams, IncoherentDrive

    gamma = args.gamma
    if gamma <= 0:
        raise UsageError("--gamma must be positive")
    if args.drive == "incoherent":
        return EmitterParams(gamma, IncoherentDrive(args.P * gamma))
    if args.drive == "coherent":
        return EmitterParams(gamma, CoherentDrive(args.omega * gamma))
    # Heitler: weak coherent driving; the amplitude used for scans is an
    # assumption (0.01 * gamma_sigma) and is recorded in the output header.
    return EmitterParams(gamma, CoherentDrive(0.01 * gamma))


def _drive_meta(args: argparse.Namespace) -> dict:
    meta = {"drive": args.drive, "gamma_sigma": args.gamma}
    if args.drive == "incoherent":
        meta["P_sigma"] = args.P * args.gamma
    elif args.drive == "coherent":
        meta["Omega_sigma"] = args.omega * args.gamma
    else:
        meta["Omega_sigma"] = 0.01 * args.gamma
        meta["assumption"] = "Heitler drive amplitude 0.01*gamma_sigma"
    return meta


def _bare_curve(args: argparse.Namespace, tau):
    from .emitter import bare_g2_coherent, bare_g2_heitler, bare_g2_incoherent

    params = _emitter(args)
    if args.drive == "incoherent":
        return params, bare_g2_incoherent(params, tau)
    if args.drive == "coherent":
        return params, bare_g2_coherent(params, tau)
    return params, bare_g2_heitler(params, tau)


def _tau_grid(args: argparse.Namespace):
    import numpy as np

    if args.tau_max <= 0 or args.points < 2:
        raise UsageError("--tau-max must be positive and --points >= 2")
    return np.linspace(0.0, args.tau_max / args.gamma, args.points)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_bare(args: argparse.Namespace) -> int:
    tau = _tau_grid(args)
    params, curve = _bare_curve(args, tau)
    meta = _metadata(args, {"formula": f"bare-{args.drive}", **_drive_meta(args)})
    if args.drive == "coherent":
        from .emitter import mollow_envelopes

        lo, hi = mollow_envelopes(params, tau)
        columns = ["tau", "g2", "envelope_lo", "envelope_hi"]
        rows = list(zip(tau, curve.values, lo, hi))
    else:
        columns = ["tau", "g2"]
        rows = list(zip(tau, curve.values))
    _emit(args, columns, rows, meta)
    return EXIT_OK


def cmd_noise(args: argparse.Namespace) -> int:
    from .noise import NoiseSpec, mix_noise

    if args.xi < 0:
        raise UsageError("--xi must be >= 0")
    tau = _tau_grid(args)
    _, curve = _bare_curve(args, tau)
    spec = NoiseSpec(xi=args.xi, model=args.model, gamma_n=args.gamma_n)
    mixed = mix_noise(curve, spec)
    meta = _metadata(args, {
        "formula": "noise-contamination", "xi": args.xi,
        "noise_model": args.model, **_drive_meta(args)})
    _emit(args, ["tau", "g2"], list(zip(tau, mixed.values)), meta)
    return EXIT_OK


def cmd_jitter(args: argparse.Namespace) -> int:
    import numpy as np

    from .emitter import bare_g2_coherent, bare_g2_incoherent, IncoherentDrive
    from .jitter import JitterKernel, jittered_g2_analytic, jittered_g2_numeric

    if args.Gamma <= 0:
        raise UsageError("--Gamma must be positive for jitter")
    tau = _tau_grid(args)
    params = _emitter(args)
    kernel = JitterKernel(kind=args.kind, Gamma=args.Gamma * args.gamma,
                          convention=args.convention)
    meta_extra = {"formula": f"jitter-{args.kind}-{args.drive}",
                  "kernel": args.kind, "convention": args.convention,
                  "Gamma": args.Gamma * args.gamma, **_drive_meta(args)}

    closed = oracle = None
    if args.method in ("closed-form", "both"):
        closed = jittered_g2_analytic(params, kernel, tau).values
    if args.method in ("oracle", "both"):
        if isinstance(params.drive, IncoherentDrive):
            bare = lambda th: bare_g2_incoherent(params, th).values
            decay = params.Gamma_sigma
        else:
            bare = lambda th: bare_g2_coherent(params, th).values
            decay = 0.75 * params.gamma_sigma
        oracle = jittered_g2_numeric(bare, kernel, tau, decay).values

    return _emit_compared(args, tau, closed, oracle, meta_extra)


def cmd_filter(args: argparse.Namespace) -> int:
    import numpy as np

    from .emitter import CoherentDrive, EmitterParams
    from .liouvillian import filtered_g2_oracle
    from .sensorfilter import (filtered_g2_coherent_general,
                               filtered_g2_heitler, filtered_g2_incoherent)

    Gamma = args.Gamma * args.gamma
    meta_extra = {**_drive_meta(args)}
    if Gamma <= 0:
        # Gamma -> 0 proxy for the extreme-filtering (thermalization) limit
        Gamma = 1e-3 * args.gamma
        meta_extra["note"] = "Gamma<=0 mapped to narrow-filter proxy 1e-3*gamma_sigma"
    meta_extra["Gamma"] = Gamma
    meta_extra["formula"] = f"filter-{args.drive}"
    tau = _tau_grid(args)
    params = _emitter(args)

    closed = oracle = None
    if args.method in ("closed-form", "both"):
        if args.drive == "incoherent":
            closed = filtered_g2_incoherent(params, Gamma, tau).values
        elif args.drive == "coherent":
            closed = filtered_g2_coherent_general(params, Gamma, tau,
                                                  fallback=False).values
        else:
            closed = filtered_g2_heitler(params, Gamma, tau).values
    if args.method in ("oracle", "both"):
        oracle_params = params
        if args.drive == "heitler":
            oracle_params = EmitterParams(args.gamma,
                                          CoherentDrive(0.01 * args.gamma))
        oracle = filtered_g2_oracle(oracle_params, Gamma, tau).values

    return _emit_compared(args, tau, closed, oracle, meta_extra)


def _emit_compared(args: argparse.Namespace, tau, closed, oracle,
                   meta_extra: dict) -> int:
    import numpy as np

    if closed is not None and oracle is not None:
        deviation = float(np.max(np.abs(closed - oracle)))
        meta_extra["max_abs_deviation"] = deviation
        meta = _metadata(args, meta_extra)
        _emit(args, ["tau", "g2", "g2_oracle"],
              list(zip(tau, closed, oracle)), meta)
        if deviation > args.tolerance:
            raise ValidationFailure(
                f"closed-form/oracle deviation {deviation:.3e} exceeds "
                f"tolerance {args.tolerance:.1e} for {meta_extra['formula']}")
        return EXIT_OK
    values = closed if closed is not None else oracle
    meta_extra["method"] = args.method
    meta = _metadata(args, meta_extra)
    _emit(args, ["tau", "g2"], list(zip(tau, values)), meta)
    return EXIT_OK


# ---------------------------------------------------------------------------
# named scans
# ---------------------------------------------------------------------------

def _scan_jitter_zero_delay(params, kinds, widths, convention="equal_variance"):
    """g2_jittered(0) versus mean jitter time for each kernel kind."""
    from .jitter import JitterKernel, jittered_g2_analytic

    rows = []
    for kind in kinds:
        for width in widths:
            if width == 0.0:
                value = 0.0  # no jitter: the bare antibunching dip survives
            else:
                kernel = JitterKernel(kind=kind, Gamma=1.0 / width,
                                      convention=convention)
                value = float(jittered_g2_analytic(
                    params, kernel, [0.0]).values[0])
            rows.append((kind, width, value))
    return rows


def cmd_scan(args: argparse.Namespace) -> int:
    import numpy as np

    from .emitter import CoherentDrive, EmitterParams, IncoherentDrive

    selector = args.selector
    kinds = ("heaviside", "exponential", "laplace", "gaussian")

    if selector == "fig2c":
        # incoherent pumping at P_sigma = gamma_sigma: zero-delay correlation
        # vs mean jitter time, per kernel
        params = EmitterParams(1.0, IncoherentDrive(1.0))
        widths = np.concatenate([[0.0], np.logspace(-2, 1, 40)])
        rows = _scan_jitter_zero_delay(params, kinds, widths)
        meta = _metadata(args, {"scan": selector, "P_sigma": 1.0,
                                "x": "kernel", "y": "jitter_time",
                                "value": "g2_zero_delay"})
        _emit(args, ["x", "y", "value"], rows, meta)
        return EXIT_OK

    if selector == "fig3c":
        # coherent driving at Omega_sigma = 2 gamma_sigma, plus the Heitler
        # regime at the documented assumed amplitude 0.01 gamma_sigma
        widths = np.concatenate([[0.0], np.logspace(-2, 1, 40)])
        rows = []
        for label, Om in (("mollow", 2.0), ("heitler", 0.01)):
            params = EmitterParams(1.0, CoherentDrive(Om))
            for kind, width, value in _scan_jitter_zero_delay(
                    params, kinds, widths):
                rows.append((f"{kind}:{label}", width, value))
        meta = _metadata(args, {
            "scan": selector, "Omega_mollow": 2.0, "Omega_heitler": 0.01,
            "assumption": "Heitler drive amplitude 0.01*gamma_sigma",
            "x": "kernel:regime", "y": "jitter_time",
            "value": "g2_zero_delay"})
        _emit(args, ["x", "y", "value"], rows, meta)
        return EXIT_OK

    if selector == "fig4c":
        # filtered incoherent zero-delay vs filter linewidth; the grid
        # includes Gamma = Gamma_sigma / 3 where g2(0) crosses 1 exactly
        from .sensorfilter import filtered_g2_incoherent_zero_delay

        params = EmitterParams(1.0, IncoherentDrive(1.0))
        grid = np.unique(np.concatenate([
            np.logspace(-3, 3, 60), [params.Gamma_sigma / 3.0]]))
        rows = [(float(G), filtered_g2_incoherent_zero_delay(params, G))
                for G in grid]
        meta = _metadata(args, {"scan": selector, "P_sigma": 1.0,
                                "x": "Gamma", "value": "g2_zero_delay"})
        _emit(args, ["x", "value"], rows, meta)
        return EXIT_OK

    if selector == "fig5c":
        # filtered coherent zero-delay vs filter linewidth at Omega = 2
        from .sensorfilter import filtered_g2_coherent_zero_delay

        params = EmitterParams(1.0, CoherentDrive(2.0))
        grid = np.logspace(-3, 3, 60)
        rows = [(float(G), filtered_g2_coherent_zero_delay(params, G))
                for G in grid]
        meta = _metadata(args, {"scan": selector, "Omega_sigma": 2.0,
                                "x": "Gamma", "value": "g2_zero_delay"})
        _emit(args, ["x", "value"], rows, meta)
        return EXIT_OK

    # fig6: maximum zero-delay bunching over the filter linewidth, vs drive
    from .sensorfilter import max_bunching_scan

    table = max_bunching_scan()
    rows = list(zip(table["Omega"], table["Gamma_opt"], table["g2_max"]))
    meta = _metadata(args, {"scan": selector, "x": "Omega",
                            "y": "Gamma_opt", "value": "g2_max"})
    _emit(args, ["x", "y", "value"], rows, meta)
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    from .validate import run_validation

    report = run_validation(fault=args.fault, quick=args.quick)
    payload = report.to_dict()
    text = json.dumps(payload, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if not report.passed:
        failures = ", ".join(report.failed_names())
        print(f"validation FAILED: {failures}", file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _cap_threads() -> None:
    threads = os.environ.get("ANTIBUNCH_THREADS")
    if not threads:
        return
    try:
        n = max(1, int(threads))
    except ValueError:
        raise UsageError(f"ANTIBUNCH_THREADS must be an integer, got {threads!r}")
    for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS",
                "NUMEXPR_NUM_THREADS"):
        os.environ.setdefault(var, str(n))


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        _cap_threads()
        args = parser.parse_args(argv)
        args = _apply_config(args, argv)
        handler = {
            "bare": cmd_bare,
            "noise": cmd_noise,
            "jitter": cmd_jitter,
            "filter": cmd_filter,
            "scan": cmd_scan,
            "validate": cmd_validate,
        }[args.command]
        return handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationFailure as exc:
        print(f"validation failure: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except SystemExit as exc:
        # argparse exits with 2 on usage errors and 0 on --help/--version
        return int(exc.code or 0)
    except (OSError, RuntimeError, ValueError, ArithmeticError) as exc:
        print(f"runtime error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())

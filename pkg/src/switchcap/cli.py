"""Command-line front end.

Subcommands: bounds (single-point report), surface (figure data over the
(p, q) square), slice (diagonal p = q curves), thresholds (diagonal
branch/advantage thresholds), verify (oracle cross-check suite).

Exit codes: 0 success, 1 verification failure, 2 argument error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds
from .oracle import GridSpec, verify_all

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

SURFACE_QUANTITIES = {
    "ub-classical": bounds.ub_classical,
    "lb-qs": bounds.lb_qs,
    "ub-qs": bounds.ub_qs,
    "gain": bounds.gain,
    "uncertainty": bounds.uncertainty,
}


def _fmt(value) -> str:
    # repr of a Python float is the shortest round-trip representation
    return repr(float(value))


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _load_config(path: str | None) -> dict[str, str] | int:
    """Parse a key=value config file; returns an exit code on failure."""
    if path is None:
        return {}
    cfg: dict[str, str] = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        return _fail(f"cannot read config {path}: {exc}", EXIT_USAGE)
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            return _fail(f"{path}:{lineno}: expected key=value, got {line!r}", EXIT_USAGE)
        key, _, value = line.partition("=")
        cfg[key.strip()] = value.strip()
    return cfg


def _resolve(flag, cfg: dict[str, str], key: str, cast, default):
    """Flag wins over config file, config over the built-in default."""
    if flag is not None:
        return flag
    if key in cfg:
        return cast(cfg[key])
    return default


def _write_csv(path: Path, header: str, rows) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(header + "\n")
        for row in rows:
            f.write(",".join(_fmt(v) for v in row) + "\n")


def _check_prob(value: float, name: str) -> bool:
    return 0.0 <= value <= 1.0


def cmd_bounds(args) -> int:
    for name, value in (("p", args.p), ("q", args.q)):
        if not _check_prob(value, name):
            return _fail(f"--{name} must lie in [0, 1], got {value!r}", EXIT_USAGE)
    report = bounds.bounds_report(args.p, args.q).to_dict()
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        for key, value in report.items():
            shown = "undefined" if value is None else _fmt(value)
            print(f"{key} = {shown}")
    return EXIT_OK


def cmd_surface(args) -> int:
    cfg = _load_config(args.config)
    if isinstance(cfg, int):
        return cfg
    resolution = _resolve(args.resolution, cfg, "resolution", int, 101)
    try:
        grid = GridSpec(resolution, args.lo, args.hi)
    except ValueError as exc:
        return _fail(str(exc), EXIT_USAGE)
    fn = SURFACE_QUANTITIES[args.quantity]
    axis = grid.axis()
    values = [[fn(p, q) for q in axis] for p in axis]
    out = Path(args.out) if args.out else Path(f"{args.quantity}.csv")
    try:
        _write_csv(
            out,
            "p,q,value",
            ((p, q, values[i][j]) for i, p in enumerate(axis) for j, q in enumerate(axis)),
        )
        if args.plot:
            import numpy as np

            from .plotting import render_surface

            render_surface(axis, axis, np.array(values), args.quantity, out.with_suffix(".png"))
    except OSError as exc:
        return _fail(f"cannot write {out}: {exc}", EXIT_IO)
    print(f"wrote {out} ({resolution * resolution} rows)")
    return EXIT_OK


def cmd_slice(args) -> int:
    cfg = _load_config(args.config)
    if isinstance(cfg, int):
        return cfg
    steps = _resolve(args.steps, cfg, "steps", int, 101)
    if steps < 2:
        return _fail(f"--steps must be >= 2, got {steps}", EXIT_USAGE)
    axis = GridSpec(steps).axis()
    ubc = [bounds.ub_classical(p, p) for p in axis]
    lbq = [bounds.lb_qs(p, p) for p in axis]
    ubq = [bounds.ub_qs(p, p) for p in axis]
    out = Path(args.out) if args.out else Path("slice.csv")
    try:
        _write_csv(out, "p,ub_classical,lb_qs,ub_qs", zip(axis, ubc, lbq, ubq))
        if args.plot:
            import numpy as np

            from .plotting import render_slice

            render_slice(axis, np.array(ubc), np.array(lbq), np.array(ubq), out.with_suffix(".png"))
    except OSError as exc:
        return _fail(f"cannot write {out}: {exc}", EXIT_IO)
    print(f"wrote {out} ({steps} rows)")
    return EXIT_OK


def cmd_thresholds(args) -> int:
    records = {t.name: t.to_dict() for t in (bounds.threshold_p0(), bounds.threshold_p1())}
    if args.format == "json":
        print(json.dumps(records, indent=2))
    else:
        for name, rec in records.items():
            print(
                f"{name}: value={_fmt(rec['value'])} residual={rec['residual']:.3e} "
                f"bracket=[{_fmt(rec['bracket_lo'])}, {_fmt(rec['bracket_hi'])}]"
            )
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = _load_config(args.config)
    if isinstance(cfg, int):
        return cfg
    resolution = _resolve(args.resolution, cfg, "resolution", int, 21)
    tol = _resolve(args.tol, cfg, "tolerance", float, 1e-10)
    seed = _resolve(args.seed, cfg, "seed", int, 42)
    try:
        grid = GridSpec(resolution)
    except ValueError as exc:
        return _fail(str(exc), EXIT_USAGE)
    report = verify_all(grid, tol=tol, seed=seed)
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        print(
            f"{check.name:32s} max_dev={check.max_deviation:.3e} "
            f"tol={check.tolerance:.1e} {status}"
        )
    if report.all_passed:
        print(f"all {len(report.checks)} checks passed "
              f"(grid {resolution}x{resolution}, seed {seed})")
        return EXIT_OK
    print(f"FAILED checks: {', '.join(report.failed())}", file=sys.stderr)
    return EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="switchcap",
        description="Capacity bounds for flip channels traversed in a superposition of causal orders.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bounds = sub.add_parser("bounds", help="all bound quantities at one (p, q)")
    p_bounds.add_argument("--p", type=float, required=True, help="bit-flip probability")
    p_bounds.add_argument("--q", type=float, required=True, help="phase-flip probability")
    p_bounds.add_argument("--format", choices=("json", "text"), default="text")
    p_bounds.set_defaults(func=cmd_bounds)

    p_surface = sub.add_parser("surface", help="quantity sampled over the (p, q) square")
    p_surface.add_argument("--quantity", choices=sorted(SURFACE_QUANTITIES), required=True)
    p_surface.add_argument("--resolution", type=int, default=None, help="grid points per axis (default 101)")
    p_surface.add_argument("--lo", type=float, default=0.0, help="axis lower end (default 0)")
    p_surface.add_argument("--hi", type=float, default=1.0, help="axis upper end (default 1)")
    p_surface.add_argument("--out", default=None, help="CSV path (default <quantity>.csv)")
    p_surface.add_argument("--plot", action=argparse.BooleanOptionalAction, default=True,
                           help="also render a PNG next to the CSV")
    p_surface.add_argument("--config", default=None, help="key=value defaults file")
    p_surface.set_defaults(func=cmd_surface)

    p_slice = sub.add_parser("slice", help="bound curves along the diagonal p = q")
    p_slice.add_argument("--steps", type=int, default=None, help="sample count (default 101)")
    p_slice.add_argument("--out", default=None, help="CSV path (default slice.csv)")
    p_slice.add_argument("--plot", action=argparse.BooleanOptionalAction, default=True,
                         help="also render a PNG next to the CSV")
    p_slice.add_argument("--config", default=None, help="key=value defaults file")
    p_slice.set_defaults(func=cmd_slice)

    p_thresh = sub.add_parser("thresholds", help="diagonal branch and advantage thresholds")
    p_thresh.add_argument("--format", choices=("json", "text"), default="text")
    p_thresh.set_defaults(func=cmd_thresholds)

    p_verify = sub.add_parser("verify", help="run the oracle cross-check suite")
    p_verify.add_argument("--resolution", type=int, default=None, help="grid points per axis (default 21)")
    p_verify.add_argument("--tol", type=float, default=None,
                          help="tolerance for entropy/eigenvalue checks (default 1e-10)")
    p_verify.add_argument("--seed", type=int, default=None, help="RNG seed (default 42)")
    p_verify.add_argument("--config", default=None, help="key=value defaults file")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

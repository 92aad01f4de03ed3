"""Command line front end: sweep, rate, alloc, and verify subcommands.

A sweep can read its settings from a plain key=value config file (keys spelled
like the long flags, without the leading dashes); explicit flags override the
file.  `sweep --out report.csv --plot` writes the CSV plus a rendered figure
beside it.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .channel import ChannelSpec, DomainError, PowerConfig, line_geometry, normalize
from .allocator import af_alloc, cf_full_alloc
from .harness import (
    SUITE_NAMES,
    SweepConfig,
    SweepError,
    evaluate_point,
    format_cell,
    render_csv,
    run_sweep,
    run_verify,
    write_csv,
)


def load_config(path: str | Path) -> dict[str, str]:
    """Parse a key=value config file; '#' starts a comment, blank lines ignored."""
    values: dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise DomainError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, value = line.split("=", 1)
        values[key.strip()] = value.strip()
    return values


def _merged(args: argparse.Namespace, config: dict[str, str], key: str, cast, default=None):
    """CLI flag wins, then the config file, then the built-in default."""
    flag_value = getattr(args, key.replace("-", "_"), None)
    if flag_value is not None:
        return flag_value
    if key in config:
        raw = config[key]
        if cast is bool:
            return raw.lower() in ("1", "true", "yes", "on")
        return cast(raw)
    return default


def _channel_from(args, config) -> ChannelSpec:
    d = _merged(args, config, "d", float)
    if d is not None:
        return line_geometry(d)
    keys = ("h21", "h32", "h31")
    if all(k in config for k in keys):
        return ChannelSpec(
            h21=float(config["h21"]),
            h32=float(config["h32"]),
            h31=float(config["h31"]),
            N1=float(config.get("n1", 1.0)),
            N=float(config.get("n", 1.0)),
        )
    raise DomainError("no channel given: pass --d or put h21/h32/h31 in the config file")


def _build_sweep_config(args, config) -> SweepConfig:
    mode = _merged(args, config, "mode", str, "full")
    alpha = _merged(args, config, "alpha", float, 0.5)
    if mode == "full":
        powers = PowerConfig.full(
            _merged(args, config, "p1", float, 1.0),
            _merged(args, config, "p2", float, 1.0),
        )
    else:
        powers = PowerConfig.half(
            _merged(args, config, "p1-1", float, 1.0),
            _merged(args, config, "p1-2", float, 1.0),
            _merged(args, config, "p2", float, 2.0),
            alpha,
        )
    return SweepConfig(
        mode=mode,
        spec=_channel_from(args, config),
        rho_z_points=_merged(args, config, "rho-z-points", int, 201),
        rho_z_lo=_merged(args, config, "rho-z-min", float, -1.0),
        rho_z_hi=_merged(args, config, "rho-z-max", float, 1.0),
        powers=powers,
        af_p1_1=_merged(args, config, "af-p1-1", float, 2.0),
        af_p2=_merged(args, config, "af-p2", float, 2.0),
        alpha_policy="optimize" if _merged(args, config, "optimize-alpha", bool, False) else "fixed",
        power_policy=_merged(args, config, "power-policy", str, "fixed"),
        pt=_merged(args, config, "pt", float),
    )


def _add_channel_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="key=value config file; flags override it")
    p.add_argument("--mode", choices=("full", "half"))
    p.add_argument("--d", type=float, help="relay position on the unit line, in (0, 1)")
    p.add_argument("--alpha", type=float, help="half-duplex listening fraction")
    p.add_argument("--p1", type=float, help="full-duplex source power")
    p.add_argument("--p2", type=float, help="relay power")
    p.add_argument("--p1-1", type=float, help="half-duplex phase-1 source power")
    p.add_argument("--p1-2", type=float, help="half-duplex phase-2 source power")
    p.add_argument("--af-p1-1", type=float, help="AF phase-1 source power (default 2)")
    p.add_argument("--af-p2", type=float, help="AF relay power (default 2)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relaycap",
        description="Capacity bounds, relaying rates and power allocation for "
                    "Gaussian relay channels with correlated noises.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="evaluate all rates over a rho_z grid and emit CSV")
    _add_channel_flags(p_sweep)
    p_sweep.add_argument("--rho-z-points", type=int, help="grid size (default 201)")
    p_sweep.add_argument("--rho-z-min", type=float)
    p_sweep.add_argument("--rho-z-max", type=float)
    p_sweep.add_argument("--optimize-alpha", action="store_const", const=True, default=None)
    p_sweep.add_argument("--power-policy", choices=("fixed", "optimal-cf", "optimal-af"))
    p_sweep.add_argument("--pt", type=float, help="total power budget for optimal policies")
    p_sweep.add_argument("--out", help="CSV output path (stdout when omitted)")
    p_sweep.add_argument("--plot", nargs="?", const="", default=None,
                         help="also render a figure (PATH optional; defaults beside --out)")

    p_rate = sub.add_parser("rate", help="single-point evaluation, prints one CSV row")
    _add_channel_flags(p_rate)
    p_rate.add_argument("--rho-z", type=float, required=True)

    p_alloc = sub.add_parser("alloc", help="closed-form total-power allocation")
    p_alloc.add_argument("--scheme", choices=("cf-full", "af"), required=True)
    p_alloc.add_argument("--config")
    p_alloc.add_argument("--d", type=float)
    p_alloc.add_argument("--rho-z", type=float, required=True)
    p_alloc.add_argument("--pt", type=float, required=True)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", default="all", choices=SUITE_NAMES + ("all",))
    p_verify.add_argument("--draws", type=int, default=None,
                          help="override the randomized sample count (for quick runs)")
    return parser


def _cmd_sweep(args) -> int:
    config = load_config(args.config) if args.config else {}
    cfg = _build_sweep_config(args, config)
    result = run_sweep(cfg)
    out = _merged(args, config, "out", str)
    if out:
        write_csv(result, out)
    else:
        sys.stdout.write(render_csv(result))
    if args.plot is not None or "plot" in config:
        plot_path = (args.plot if args.plot is not None else "") or config.get("plot", "")
        if not plot_path:
            if not out:
                raise DomainError("--plot needs a path when no --out is given")
            plot_path = str(Path(out).with_suffix(".png"))
        from .plotting import render_sweep

        render_sweep(result, plot_path, title=f"{cfg.mode}-duplex sweep")
    return 0


def _cmd_rate(args) -> int:
    config = load_config(args.config) if args.config else {}
    cfg = _build_sweep_config(args, config)
    result = evaluate_point(cfg, args.rho_z)
    sys.stdout.write(",".join(result.columns) + "\n")
    sys.stdout.write(",".join(format_cell(result.rows[0].get(c)) for c in result.columns) + "\n")
    return 0


def _cmd_alloc(args) -> int:
    config = load_config(args.config) if args.config else {}
    spec = _channel_from(args, config)
    g = normalize(spec)
    result = (cf_full_alloc if args.scheme == "cf-full" else af_alloc)(g, args.rho_z, args.pt)
    for name in ("P1_star", "P2_star", "rate", "branch", "condition_value"):
        value = getattr(result, name)
        if isinstance(value, float):
            print(f"{name}={value:.12g}")
        else:
            print(f"{name}={value}")
    return 0


def _cmd_verify(args) -> int:
    report = run_verify(args.suite, draws=args.draws)
    for o in report.details:
        status = "PASS" if o.passed else "FAIL"
        extra = f"  ({o.detail})" if o.detail else ""
        print(f"{status} {o.suite}/{o.name} worst={o.worst:.6g}{extra}")
    print(f"{report.passed} passed, {report.failed} failed")
    return 0 if report.ok else 1


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {"sweep": _cmd_sweep, "rate": _cmd_rate, "alloc": _cmd_alloc, "verify": _cmd_verify}
    try:
        return handlers[args.command](args)
    except (DomainError, SweepError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

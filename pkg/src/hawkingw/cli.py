"""Command-line entry point: ``hawkingw {eval,sweep,figure,verify}``.

Exit codes: 0 success, 1 verification failure, 2 argument error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from pathlib import Path

from .closedform import SCENARIO_MODES, verify_point
from .modes import bogoliubov
from .sweep import (
    DEFAULT_T_MAX,
    DEFAULT_T_MIN,
    DEFAULT_T_POINTS,
    SweepConfig,
    evaluate,
    fmt,
    run_sweep,
    standard_temperatures,
    temperature_grid,
    to_svg,
)

FIGURES = {
    "fig1": ("ABC", False),
    "fig2": ("Abc", False),
    "fig3": ("ABc", False),
    "fig4": ("ABC", True),
    "fig5": ("Abc", True),
    "fig6": ("ABc", True),
}
FIGURE_GAMMAS = (1 / 3, 1 / 2, 2 / 3)
VERIFY_GAMMAS = (None, 1 / 3, 1 / 2, 2 / 3)

BUILTIN_DEFAULTS = {
    "scenario": "ABC",
    "T": None,
    "omega": 1.0,
    "gamma": None,
    "t_min": DEFAULT_T_MIN,
    "t_max": DEFAULT_T_MAX,
    "t_points": DEFAULT_T_POINTS,
    "t_scale": "log",
    "output": None,
    "format": "csv",
    "tolerance": 1e-10,
    "limits": False,
}


class UsageError(Exception):
    pass


def _temperature(s: str) -> float:
    try:
        T = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a temperature: {s!r}") from None
    if math.isnan(T) or T < 0:
        raise argparse.ArgumentTypeError("temperature must be >= 0 or 'inf'")
    return T


def _gamma(s):
    if s is None:
        return None
    if isinstance(s, str) and s.lower() == "none":
        return None
    try:
        g = float(s)
    except (TypeError, ValueError):
        raise argparse.ArgumentTypeError(f"not a damping probability: {s!r}") from None
    if not 0.0 <= g <= 1.0:
        raise argparse.ArgumentTypeError("damping probability out of range")
    return g


def _positive(s: str) -> float:
    v = float(s)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {s}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file of option values; flags override it")
    common.add_argument("--scenario", choices=sorted(SCENARIO_MODES), default=None)
    common.add_argument("--omega", type=_positive, default=None)

    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--t-min", dest="t_min", type=_temperature, default=None)
    grid.add_argument("--t-max", dest="t_max", type=_temperature, default=None)
    grid.add_argument("--t-points", dest="t_points", type=int, default=None)
    grid.add_argument("--t-scale", dest="t_scale", choices=["linear", "log"], default=None)

    p = argparse.ArgumentParser(prog="hawkingw", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", parents=[common], help="all measures at one parameter point")
    e.add_argument("--T", dest="T", type=_temperature, default=None, help="Hawking temperature (real or 'inf')")
    e.add_argument("--gamma", type=_gamma, default=None, help="amplitude-damping probability")

    s = sub.add_parser("sweep", parents=[common, grid], help="measures over a temperature grid")
    s.add_argument("--gamma", type=_gamma, default=None)
    s.add_argument("--output", default=None, help="output file (stdout if omitted)")
    s.add_argument("--format", choices=["csv", "svg"], default=None)
    s.add_argument("--limits", action="store_true", default=None, help="add T=0 and T=inf rows")

    f = sub.add_parser("figure", parents=[common, grid], help="data behind one published figure")
    f.add_argument("figure_id", choices=sorted(FIGURES))
    f.add_argument("--gamma", type=_gamma, action="append", default=None,
                   help="damping probability (repeatable; figures 4-6 only)")
    f.add_argument("--output", default=None, help="output directory (default: current)")
    f.add_argument("--format", choices=["csv", "svg"], default=None,
                   help="svg writes a chart next to each csv")

    v = sub.add_parser("verify", parents=[common, grid], help="numeric pipeline vs closed forms")
    v.add_argument("--gamma", type=_gamma, action="append", default=None,
                   help="restrict to these damping probabilities ('none' = no channel)")
    v.add_argument("--tolerance", type=_positive, default=None)
    return p


def resolve(args: argparse.Namespace) -> dict:
    """Merge built-in defaults, the ``--config`` file, then explicit flags."""
    opts = dict(BUILTIN_DEFAULTS)
    if getattr(args, "config", None):
        try:
            data = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from None
        if not isinstance(data, dict):
            raise UsageError("config must be a JSON object")
        for k, val in data.items():
            key = k.replace("-", "_")
            if key not in opts:
                raise UsageError(f"unknown config key {k!r}")
            opts[key] = val
    for k, val in vars(args).items():
        if val is not None and k != "config":
            opts[k] = val
    try:
        if opts["T"] is not None:
            opts["T"] = _temperature(str(opts["T"]))
        g = opts["gamma"]
        opts["gamma"] = [_gamma(x) for x in g] if isinstance(g, list) else _gamma(g)
        for k in ("omega", "t_min", "t_max", "tolerance"):
            opts[k] = float(opts[k])
        opts["t_points"] = int(opts["t_points"])
    except (argparse.ArgumentTypeError, TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    return opts


def cmd_eval(opts: dict, out=sys.stdout) -> int:
    if opts["T"] is None:
        raise UsageError("eval needs --T")
    params, rep = evaluate(opts["scenario"], opts["T"], opts["omega"], opts["gamma"])
    gamma = "none" if opts["gamma"] is None else fmt(opts["gamma"])
    print(f"scenario={opts['scenario']}", file=out)
    print(f"T={fmt(params.T)}", file=out)
    print(f"omega={fmt(params.omega)}", file=out)
    print(f"gamma={gamma}", file=out)
    print(f"alpha={fmt(params.alpha)}", file=out)
    print(f"beta={fmt(params.beta)}", file=out)
    for name in ("c_l1", "foc", "gc", "cf", "tradeoff"):
        print(f"{name}={fmt(getattr(rep, name))}", file=out)
    print(f"cf_clamped={int(rep.cf_clamped)}", file=out)
    return 0


def _config(opts: dict, **over) -> SweepConfig:
    kw = dict(
        scenario=opts["scenario"], omega=opts["omega"], t_min=opts["t_min"], t_max=opts["t_max"],
        t_points=opts["t_points"], t_scale=opts["t_scale"], gamma=opts["gamma"],
        limits=bool(opts["limits"]), output=opts["output"], format=opts["format"],
    )
    kw.update(over)
    try:
        return SweepConfig(**kw)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _write(path: Path, text: str) -> None:
    path.write_text(text, encoding="utf-8", newline="\n")


def cmd_sweep(opts: dict, out=sys.stdout) -> int:
    cfg = _config(opts)
    sweep = run_sweep(cfg)
    text = to_svg(sweep, title=f"{cfg.scenario}") if cfg.format == "svg" else sweep.to_csv()
    if cfg.output is None:
        out.write(text)
    else:
        _write(Path(cfg.output), text)
    return 0


def figure_name(figure_id: str, gamma: float | None) -> str:
    return figure_id if gamma is None else f"{figure_id}_g{gamma:.3g}"


def cmd_figure(opts: dict, out=sys.stdout) -> int:
    fid = opts["figure_id"]
    scenario, noisy = FIGURES[fid]
    if noisy:
        gammas = opts["gamma"] or list(FIGURE_GAMMAS)
    else:
        if opts["gamma"]:
            raise UsageError(f"{fid} has no damping channel; drop --gamma")
        gammas = [None]
    outdir = Path(opts["output"] or ".")
    outdir.mkdir(parents=True, exist_ok=True)
    for g in gammas:
        cfg = _config(opts, scenario=scenario, gamma=g, limits=True)
        sweep = run_sweep(cfg)
        stem = figure_name(fid, g)
        _write(outdir / f"{stem}.csv", sweep.to_csv())
        print(outdir / f"{stem}.csv", file=out)
        if cfg.format == "svg":
            title = f"{scenario}" if g is None else f"{scenario}, gamma={g:.3g}"
            _write(outdir / f"{stem}.svg", to_svg(sweep, title=title))
            print(outdir / f"{stem}.svg", file=out)
    return 0


def run_verification(scenarios, gammas, temperatures, omega: float = 1.0):
    """``verify_point`` over the full product of the given axes."""
    reports = []
    for sc in scenarios:
        for g in gammas:
            for T in temperatures:
                reports.append(verify_point(sc, bogoliubov(T, omega), g))
    return reports


def cmd_verify(opts: dict, out=sys.stdout, max_failures: int = 20) -> int:
    tol = opts["tolerance"]
    scenarios = [opts["scenario"]] if opts.get("_scenario_given") else list(SCENARIO_MODES)
    gammas = opts["gamma"] if opts["gamma"] else list(VERIFY_GAMMAS)
    if opts.get("_grid_given"):
        try:
            temps = [0.0, *temperature_grid(opts["t_min"], opts["t_max"], opts["t_points"],
                                            opts["t_scale"]).tolist(), math.inf]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if temps[1] == 0.0:
            temps.pop(0)
    else:
        temps = standard_temperatures()

    start = time.perf_counter()
    reports = run_verification(scenarios, gammas, temps, opts["omega"])
    elapsed = time.perf_counter() - start

    failures = []
    for sc in scenarios:
        mine = [r for r in reports if r.scenario == sc]
        worst = max(r.max_deviation for r in mine)
        status = "PASS" if worst < tol else "FAIL"
        print(f"{sc}: {len(mine)} points, max deviation {worst:.3e} [{status}]", file=out)
        for r in mine:
            for d in r.failures(tol):
                failures.append((r, d))

    print(f"tolerance {tol:.1e}, {len(reports)} points in {elapsed:.2f}s", file=out)
    for r, d in failures[:max_failures]:
        g = "none" if r.gamma is None else fmt(r.gamma)
        print(f"FAIL scenario={r.scenario} T={fmt(r.T)} gamma={g} quantity={d.quantity} "
              f"numeric={d.numeric} closed={d.closed} deviation={d.deviation:.3e}", file=out)
    if len(failures) > max_failures:
        print(f"... {len(failures) - max_failures} more failures", file=out)
    return 1 if failures else 0


COMMANDS = {"eval": cmd_eval, "sweep": cmd_sweep, "figure": cmd_figure, "verify": cmd_verify}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        opts = resolve(args)
        opts["_scenario_given"] = args.scenario is not None or "scenario" in _config_keys(args)
        opts["_grid_given"] = any(getattr(args, k, None) is not None
                                  for k in ("t_min", "t_max", "t_points", "t_scale"))
        opts["_grid_given"] |= bool({"t_min", "t_max", "t_points", "t_scale"} & _config_keys(args))
        return COMMANDS[args.command](opts, out=out)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


def _config_keys(args) -> set:
    if not getattr(args, "config", None):
        return set()
    try:
        return {k.replace("-", "_") for k in json.loads(Path(args.config).read_text())}
    except (OSError, ValueError, AttributeError):
        return set()


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: ``solve`` (one scenario, three-way comparison), ``sweep``
(deadline sweep to CSV), ``surface`` (power-plane sampling to CSV) and
``verify`` (randomized certification campaign). Scenario parameters may come
from flags or from a JSON config file (flags win). Exit codes: 0 success,
1 invalid input, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, fields

from ._version import __version__
from .closed_form import hybrid_powers, oma_power_m
from .errors import FileUnreadable, MissingKey, NomaMecError, TypeMismatch
from .experiments import (
    deadline_sweep,
    render_campaign_summary,
    render_surface_csv,
    render_sweep_csv,
    surface_export,
    verification_campaign,
)
from .model import validate_scenario
from .strategy import select_strategy

_SCENARIO_KEYS = ("n", "dm", "dn", "hm2", "hn2")
_SWEEP_KEYS = ("from", "to", "steps")
_SURFACE_KEYS = ("tn", "p1max", "p2max", "resolution")


@dataclass
class CliConfig:
    """Merged scenario and subcommand options; None means 'not provided'."""

    n: float | None = None
    dm: float | None = None
    dn: float | None = None
    hm2: float | None = None
    hn2: float | None = None
    sweep_from: float | None = None
    sweep_to: float | None = None
    steps: int | None = None
    tn: float | None = None
    p1max: float | None = None
    p2max: float | None = None
    resolution: int | None = None
    tol: float | None = None
    seed: int | None = None
    count: int | None = None


def _as_float(key: str, value) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise TypeMismatch(key, f'config key "{key}" must be a number, got {value!r}')
    return float(value)


def _as_int(key: str, value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeMismatch(key, f'config key "{key}" must be an integer, got {value!r}')
    return value


def load_scenario_file(path: str) -> CliConfig:
    """Read a JSON scenario document.

    Flat keys ``n, dm, dn, hm2, hn2`` describe the scenario; optional
    ``sweep`` (``from, to, steps``) and ``surface`` (``tn, p1max, p2max,
    resolution``) objects carry subcommand options.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise FileUnreadable(path, f"cannot read config file {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FileUnreadable(path, f"config file {path!r} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise FileUnreadable(path, f"config file {path!r} must hold a JSON object")

    config = CliConfig()
    for key in _SCENARIO_KEYS:
        if key in raw:
            setattr(config, key, _as_float(key, raw[key]))
    sweep = raw.get("sweep", {})
    if not isinstance(sweep, dict):
        raise TypeMismatch("sweep", '"sweep" must be an object')
    if "from" in sweep:
        config.sweep_from = _as_float("from", sweep["from"])
    if "to" in sweep:
        config.sweep_to = _as_float("to", sweep["to"])
    if "steps" in sweep:
        config.steps = _as_int("steps", sweep["steps"])
    surface = raw.get("surface", {})
    if not isinstance(surface, dict):
        raise TypeMismatch("surface", '"surface" must be an object')
    if "tn" in surface:
        config.tn = _as_float("tn", surface["tn"])
    if "p1max" in surface:
        config.p1max = _as_float("p1max", surface["p1max"])
    if "p2max" in surface:
        config.p2max = _as_float("p2max", surface["p2max"])
    if "resolution" in surface:
        config.resolution = _as_int("resolution", surface["resolution"])
    return config


def _merge(args: argparse.Namespace) -> CliConfig:
    """Overlay command-line flags on the config file; flags win."""
    config = load_scenario_file(args.config) if getattr(args, "config", None) else CliConfig()
    overlay = {
        "n": getattr(args, "n", None),
        "dm": getattr(args, "dm", None),
        "dn": getattr(args, "dn", None),
        "hm2": getattr(args, "hm2", None),
        "hn2": getattr(args, "hn2", None),
        "sweep_from": getattr(args, "sweep_from", None),
        "sweep_to": getattr(args, "sweep_to", None),
        "steps": getattr(args, "steps", None),
        "tn": getattr(args, "tn", None),
        "p1max": getattr(args, "p1max", None),
        "p2max": getattr(args, "p2max", None),
        "resolution": getattr(args, "resolution", None),
        "tol": getattr(args, "tol", None),
        "seed": getattr(args, "seed", None),
        "count": getattr(args, "count", None),
    }
    for field in fields(CliConfig):
        value = overlay.get(field.name)
        if value is not None:
            setattr(config, field.name, value)
    return config


def _required(config: CliConfig, *keys: str) -> list[float]:
    values = []
    for key in keys:
        value = getattr(config, key)
        if value is None:
            raise MissingKey(
                key, f'missing required parameter "{key}" (pass --{key} or put it in --config)'
            )
        values.append(value)
    return values


def _scenario(config: CliConfig, dn_default: float | None = None):
    n, dm = _required(config, "n", "dm")
    dn = config.dn if config.dn is not None else dn_default
    if dn is None:
        raise MissingKey("dn", 'missing required parameter "dn" (pass --dn or put it in --config)')
    hm2 = config.hm2 if config.hm2 is not None else 1.0
    hn2 = config.hn2 if config.hn2 is not None else 1.0
    return validate_scenario(n, dm, dn, hm2, hn2)


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _fmt(x: float) -> str:
    return repr(float(x))


def _cmd_solve(args: argparse.Namespace) -> int:
    config = _merge(args)
    scenario = _scenario(config)
    table = select_strategy(scenario)
    t_star = min(scenario.d_n - scenario.d_m, scenario.d_m)
    p1_star, p2_star = hybrid_powers(scenario, t_star)
    chosen = {
        table.hybrid.strategy: table.hybrid,
        table.pure_noma.strategy: table.pure_noma,
        table.oma.strategy: table.oma,
    }[table.selected]
    lines = [
        f"# noma-mec {__version__} solve",
        f"nats={_fmt(scenario.nats)}",
        f"d_m={_fmt(scenario.d_m)}",
        f"d_n={_fmt(scenario.d_n)}",
        f"h_m_sq={_fmt(scenario.h_m_sq)}",
        f"h_n_sq={_fmt(scenario.h_n_sq)}",
        f"regime={table.regime.value}",
        f"selected={table.selected.value}",
        f"t_n_star={_fmt(t_star)}",
        f"p_n1_star={_fmt(p1_star)}",
        f"p_n2_star={_fmt(p2_star)}",
        f"energy={_fmt(chosen.energy)}",
        f"normalized_energy={_fmt(chosen.normalized_energy)}",
        f"oma_power_m={_fmt(oma_power_m(scenario))}",
        "strategy,energy,normalized_energy,phase1_energy,phase2_energy,feasible",
    ]
    for report in (table.hybrid, table.pure_noma, table.oma):
        lines.append(
            ",".join(
                (
                    report.strategy.value,
                    _fmt(report.energy),
                    _fmt(report.normalized_energy),
                    _fmt(report.phase1_energy),
                    _fmt(report.phase2_energy),
                    "true" if report.feasible else "false",
                )
            )
        )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    config = _merge(args)
    n, dm = _required(config, "n", "dm")
    hm2 = config.hm2 if config.hm2 is not None else 1.0
    hn2 = config.hn2 if config.hn2 is not None else 1.0
    d_n_from = config.sweep_from if config.sweep_from is not None else dm
    d_n_to = config.sweep_to if config.sweep_to is not None else 2.0 * dm
    steps = config.steps if config.steps is not None else 81
    rows = deadline_sweep(n, dm, d_n_from, d_n_to, steps, hm2, hn2)
    _emit(render_sweep_csv(rows, n, dm, hm2, hn2), args.out)
    return 0


def _cmd_surface(args: argparse.Namespace) -> int:
    config = _merge(args)
    n, dm = _required(config, "n", "dm")
    tn = config.tn if config.tn is not None else dm / 4.0
    scenario = _scenario(config, dn_default=dm + tn)
    records = surface_export(
        scenario,
        tn,
        p1_max=config.p1max,
        p2_max=config.p2max,
        resolution=config.resolution if config.resolution is not None else 200,
    )
    _emit(render_surface_csv(records, scenario, tn), args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    config = _merge(args)
    seed = config.seed if config.seed is not None else 42
    count = config.count if config.count is not None else 200
    tol = config.tol if config.tol is not None else 1e-10
    summary = verification_campaign(seed, count, tol=tol)
    _emit(render_campaign_summary(summary), args.out)
    return 0 if summary.passed else 2


def _add_scenario_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=float, help="task size in nats")
    parser.add_argument("--dm", type=float, help="user m's deadline (normalized time units)")
    parser.add_argument("--dn", type=float, help="user n's deadline (normalized time units)")
    parser.add_argument("--hm2", type=float, help="user m's squared channel gain over noise (default 1)")
    parser.add_argument("--hn2", type=float, help="user n's squared channel gain over noise (default 1)")
    parser.add_argument("--config", help="JSON scenario file; flags override its values")
    parser.add_argument("--out", help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="noma-mec",
        description="Energy-optimal power and time allocation for two-user NOMA-assisted MEC offloading.",
    )
    parser.add_argument("--version", action="version", version=f"noma-mec {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve one scenario and print the strategy comparison")
    _add_scenario_flags(p_solve)
    p_solve.set_defaults(func=_cmd_solve)

    p_sweep = sub.add_parser("sweep", help="sweep user n's deadline and emit CSV")
    _add_scenario_flags(p_sweep)
    p_sweep.add_argument("--from", dest="sweep_from", type=float,
                         help="first deadline d_n of the sweep (normalized time units, default: dm)")
    p_sweep.add_argument("--to", dest="sweep_to", type=float,
                         help="last deadline d_n of the sweep (normalized time units, default: 2*dm)")
    p_sweep.add_argument("--steps", type=int, help="number of sweep samples (default: 81)")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_surface = sub.add_parser("surface", help="sample the power-plane energy surface and emit CSV")
    _add_scenario_flags(p_surface)
    p_surface.add_argument("--tn", type=float,
                           help="solo-extension length (normalized time units, default: dm/4)")
    p_surface.add_argument("--p1max", type=float,
                           help="upper edge of the shared-slot power axis (normalized power, default: twice the optimum)")
    p_surface.add_argument("--p2max", type=float,
                           help="upper edge of the solo-phase power axis (normalized power, default: twice the optimum)")
    p_surface.add_argument("--resolution", type=int, help="samples per axis (default: 200)")
    p_surface.set_defaults(func=_cmd_surface)

    p_verify = sub.add_parser("verify", help="run the randomized certification campaign")
    p_verify.add_argument("--seed", type=int, help="campaign seed (default: 42)")
    p_verify.add_argument("--count", type=int, help="number of random scenarios (default: 200)")
    p_verify.add_argument("--tol", type=float, help="oracle bracket tolerance (default: 1e-10)")
    p_verify.add_argument("--config", help="JSON scenario file (unused keys are ignored)")
    p_verify.add_argument("--out", help="write the summary to this path instead of stdout")
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def run(argv: list[str]) -> int:
    """Parse and dispatch; returns the process exit code instead of exiting."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help/--version and 2 for bad flags; bad input is 1 here.
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except NomaMecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

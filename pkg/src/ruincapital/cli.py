"""Command-line front end.

Subcommands:

* ``constants``: derived model constants (c*, M, D^2, ...) for one or more
  configured models;
* ``reproduce <preset>``: emit the CSV files and verification sidecar for
  a named reference figure or table;
* ``capital``: capitals on a premium-rate grid for the requested methods;
* ``ruinprob``: finite-horizon ruin probabilities on a premium-rate grid.

Configuration comes from a JSON file (``--config``) and/or flags; flags
override file values.  Output is CSV with '#'-prefixed metadata comment
lines.  Exit codes: 0 success, 2 usage error, 3 numeric failure, 4 model
incompatibility.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__, approx, capital, exact, montecarlo, presets
from .capital import SolveSpec
from .dist import distribution_from_config
from .errors import (
    BackendIncompatibleError,
    BracketError,
    ConstantsUnavailableError,
    DomainError,
    ExcludedCaseError,
    InfiniteCapitalError,
    IntegrationError,
    NoAdjustmentCoefficientError,
    UnsupportedDistributionError,
)
from .exact import ExpPair
from .model import RiskModel
from .montecarlo import SimConfig
from .table import CurveTable

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_INCOMPATIBLE = 4

_METHODS = ("exact", "ig", "clt", "mc", "cramer")


class _CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _load_config(path):
    if path is None:
        return {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise _CliError(f"cannot read config: {exc}", EXIT_USAGE) from exc
    except json.JSONDecodeError as exc:
        raise _CliError(f"config is not valid JSON: {exc}", EXIT_USAGE) from exc
    if not isinstance(cfg, dict):
        raise _CliError("config root must be an object", EXIT_USAGE)
    return cfg


def _model_from_config(cfg: dict) -> RiskModel:
    try:
        spec = cfg["model"]
        t_law = distribution_from_config(spec["t_law"])
        y_law = distribution_from_config(spec["y_law"])
    except KeyError as exc:
        raise _CliError(f"config missing field: {exc}", EXIT_USAGE) from exc
    except DomainError as exc:
        raise _CliError(f"bad model config: {exc}", EXIT_USAGE) from exc
    return RiskModel(t_law, y_law)


def _merged(cfg: dict, args, key: str, flag_value, default=None):
    if flag_value is not None:
        return flag_value
    if key in cfg:
        return cfg[key]
    return default


def _c_grid(cfg: dict, args) -> list[float]:
    grid = dict(cfg.get("c_grid", {}))
    if args.c_start is not None:
        grid["start"] = args.c_start
    if args.c_stop is not None:
        grid["stop"] = args.c_stop
    if args.c_step is not None:
        grid["step"] = args.c_step
    try:
        start, stop, step = grid["start"], grid["stop"], grid["step"]
    except KeyError as exc:
        raise _CliError(
            "premium grid incomplete: need --c-start/--c-stop/--c-step or "
            "a c_grid config section",
            EXIT_USAGE,
        ) from exc
    if step <= 0 or stop < start:
        raise _CliError("bad premium grid: need step > 0 and stop >= start", EXIT_USAGE)
    n = int(round((stop - start) / step)) + 1
    return [round(start + i * step, 12) for i in range(n)]


def _sim_config(cfg: dict, args, t: float) -> SimConfig:
    sim = dict(cfg.get("sim", {}))
    n_paths = args.paths if args.paths is not None else sim.get("n_paths", 1000)
    seed = args.seed if args.seed is not None else sim.get("seed", 20240817)
    stream_count = sim.get("stream_count", 1)
    return SimConfig(n_paths=int(n_paths), seed=int(seed), t=t, stream_count=int(stream_count))


def _emit(table: CurveTable, out_path) -> None:
    if out_path is None or out_path == "-":
        sys.stdout.write(table.to_text())
    else:
        table.write_csv(out_path)


def _echo_config(table: CurveTable, cfg: dict, args_dict: dict) -> None:
    table.metadata["config"] = cfg
    table.metadata["flags"] = {
        k: v for k, v in args_dict.items() if v is not None and k != "func"
    }
    table.metadata["version"] = __version__


def cmd_constants(args) -> int:
    cfg = _load_config(args.config)
    if "models" in cfg:
        entries = cfg["models"]
    elif "model" in cfg:
        entries = [cfg["model"]]
    else:
        raise _CliError("config must contain 'model' or 'models'", EXIT_USAGE)
    named = []
    for i, spec in enumerate(entries):
        m = _model_from_config({"model": spec})
        label = spec.get("name", f"model{i + 1}")
        named.append((label, m))
    try:
        table = presets.constants_table(named)
    except ConstantsUnavailableError as exc:
        raise _CliError(str(exc), EXIT_INCOMPATIBLE) from exc
    _echo_config(table, cfg, vars(args))
    _emit(table, args.out)
    return EXIT_OK


def cmd_reproduce(args) -> int:
    n_paths = args.paths if args.paths is not None else 1000
    seed = args.seed if args.seed is not None else 20240817
    try:
        files, sidecar = presets.run_preset(args.preset, n_paths=n_paths, seed=seed)
    except DomainError as exc:
        raise _CliError(str(exc), EXIT_USAGE) from exc
    outdir = Path(args.out) if args.out else Path.cwd()
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for name, table in files.items():
        table.metadata.setdefault("preset", args.preset)
        table.metadata.setdefault("version", __version__)
        path = outdir / f"{args.preset}_{name}.csv"
        table.write_csv(path)
        written.append(str(path))
    sidecar_path = outdir / f"{args.preset}_sidecar.json"
    with open(sidecar_path, "w", encoding="utf-8") as fh:
        json.dump(sidecar, fh, indent=2, sort_keys=True)
        fh.write("\n")
    written.append(str(sidecar_path))
    for path in written:
        print(path)
    return EXIT_OK


def _parse_methods(cfg, args, default):
    raw = _merged(cfg, args, "methods", args.method, default)
    if isinstance(raw, str):
        raw = [s.strip() for s in raw.split(",") if s.strip()]
    for mth in raw:
        if mth not in _METHODS:
            raise _CliError(
                f"unknown method {mth!r}; expected subset of {_METHODS}", EXIT_USAGE
            )
    return list(raw)


def cmd_capital(args) -> int:
    cfg = _load_config(args.config)
    m = _model_from_config(cfg)
    alpha = float(_merged(cfg, args, "alpha", args.alpha, 0.05))
    t = float(_merged(cfg, args, "t", args.t, 200.0))
    kind = _merged(cfg, args, "kind", args.kind, "nonruin")
    if kind not in ("var", "nonruin", "ultimate"):
        raise _CliError(f"unknown capital kind {kind!r}", EXIT_USAGE)
    methods = _parse_methods(cfg, args, ["exact"])
    grid = _c_grid(cfg, args)
    if "cramer" in methods:
        raise _CliError(
            "the normal ruin approximation is not a capital backend", EXIT_USAGE
        )

    columns = ["c"] + [f"{kind}_{mth}" for mth in methods]
    if "mc" in methods:
        columns.append("mc_stderr")
    warnings_log: list[str] = []
    table = CurveTable(
        columns=columns,
        metadata={"alpha": alpha, "t": t, "kind": kind, "warnings": warnings_log},
    )
    backend_map = {"exact": "exact_exp", "ig": "inverse_gaussian", "clt": "clt", "mc": "monte_carlo"}
    sim = _sim_config(cfg, args, t) if "mc" in methods else None
    if sim is not None:
        table.metadata["seed"] = sim.seed
        table.metadata["n_paths"] = sim.n_paths
    solver = {"var": capital.var_capital, "nonruin": capital.nonruin_capital}
    for c in grid:
        row = [c]
        stderr = None
        for mth in methods:
            spec = SolveSpec(backend=backend_map[mth], sim=sim)
            try:
                if kind == "ultimate":
                    point = capital.ultimate_capital(m, alpha, c, spec)
                else:
                    point = solver[kind](m, alpha, t, c, spec)
                row.append(point.value)
                if mth == "mc" and point.ci95 is not None:
                    stderr = (point.ci95[1] - point.ci95[0]) / (2.0 * 1.96)
            except (
                BackendIncompatibleError,
                BracketError,
                DomainError,
                ExcludedCaseError,
                IntegrationError,
                NoAdjustmentCoefficientError,
                UnsupportedDistributionError,
                ConstantsUnavailableError,
                InfiniteCapitalError,
            ) as exc:
                warnings_log.append(f"{mth}@c={c:g}: {exc}")
                row.append(None)
        if "mc" in methods:
            row.append(stderr)
        table.append(row)
    _echo_config(table, cfg, vars(args))
    _emit(table, args.out)
    return EXIT_OK


def cmd_ruinprob(args) -> int:
    cfg = _load_config(args.config)
    m = _model_from_config(cfg)
    t = float(_merged(cfg, args, "t", args.t, 200.0))
    u = _merged(cfg, args, "u", args.u)
    if u is None:
        raise _CliError("ruinprob requires --u (initial capital)", EXIT_USAGE)
    u = float(u)
    methods = _parse_methods(cfg, args, ["exact"])
    grid = _c_grid(cfg, args)
    if "clt" in methods:
        raise _CliError(
            "the CLT method approximates the terminal shortfall, not the "
            "ruin probability",
            EXIT_USAGE,
        )

    columns = ["c"] + [f"ruin_{mth}" for mth in methods]
    if "mc" in methods:
        columns.append("mc_stderr")
    warnings_log: list[str] = []
    table = CurveTable(
        columns=columns, metadata={"u": u, "t": t, "warnings": warnings_log}
    )
    sim = _sim_config(cfg, args, t) if "mc" in methods else None
    if sim is not None:
        table.metadata["seed"] = sim.seed
        table.metadata["n_paths"] = sim.n_paths
    pair = (
        ExpPair(m.t_law.rate, m.y_law.rate) if m.is_exponential_pair() else None
    )
    for c in grid:
        row = [c]
        stderr = None
        for mth in methods:
            try:
                if mth == "exact":
                    if pair is None:
                        raise BackendIncompatibleError(
                            "exact requires exponential pair"
                        )
                    row.append(exact.ruin_finite_exp(pair, u, c, t))
                elif mth == "ig":
                    row.append(approx.ig_ruin_probability(m, u, c, t, "closed"))
                elif mth == "cramer":
                    if pair is None:
                        raise BackendIncompatibleError(
                            "the normal approximation requires an exponential pair"
                        )
                    row.append(approx.cramer_ruin_exp(pair, u, c, t))
                elif mth == "mc":
                    est = montecarlo.estimate_ruin_prob(m, u, c, sim)
                    row.append(est.point)
                    stderr = est.stderr
            except (
                BackendIncompatibleError,
                DomainError,
                ExcludedCaseError,
                IntegrationError,
                UnsupportedDistributionError,
                ConstantsUnavailableError,
            ) as exc:
                warnings_log.append(f"{mth}@c={c:g}: {exc}")
                row.append(None)
        if "mc" in methods:
            row.append(stderr)
        table.append(row)
    _echo_config(table, cfg, vars(args))
    _emit(table, args.out)
    return EXIT_OK


def _add_common(p):
    p.add_argument("--config", help="JSON configuration file")
    p.add_argument("--alpha", type=float, help="target probability level")
    p.add_argument("--t", type=float, help="time horizon")
    p.add_argument("--c-start", type=float, dest="c_start", help="grid start")
    p.add_argument("--c-stop", type=float, dest="c_stop", help="grid stop")
    p.add_argument("--c-step", type=float, dest="c_step", help="grid step")
    p.add_argument(
        "--method", help="comma-separated methods: exact, ig, clt, mc, cramer"
    )
    p.add_argument("--paths", type=int, help="Monte Carlo path count")
    p.add_argument("--seed", type=int, help="Monte Carlo seed")
    p.add_argument("--out", help="output file ('-' for stdout) or directory")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ruincapital",
        description="risk capitals and ruin probabilities for compound "
        "renewal models",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", help="derived model constants")
    _add_common(p)
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("reproduce", help="reference figure/table presets")
    p.add_argument("preset", help=f"one of: {', '.join(presets.PRESET_IDS)}")
    _add_common(p)
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("capital", help="capital curves on a premium grid")
    _add_common(p)
    p.add_argument("--kind", help="var, nonruin or ultimate (default nonruin)")
    p.set_defaults(func=cmd_capital)

    p = sub.add_parser("ruinprob", help="ruin probabilities on a premium grid")
    _add_common(p)
    p.add_argument("--u", type=float, help="initial capital")
    p.set_defaults(func=cmd_ruinprob)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors and 0 on --help/--version
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (IntegrationError, BracketError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (
        BackendIncompatibleError,
        UnsupportedDistributionError,
        ConstantsUnavailableError,
        NoAdjustmentCoefficientError,
    ) as exc:
        print(f"model incompatibility: {exc}", file=sys.stderr)
        return EXIT_INCOMPATIBLE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

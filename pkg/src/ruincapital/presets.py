"""Preset grids reproducing the library's reference figures and table.

Each preset returns the CSV-ready tables for one figure plus a sidecar
dictionary listing the published grid-line values next to the values this
implementation achieves, so a reader can audit agreement point by point.
Presets use the caption parameters verbatim, with one documented exception
(the first bounds figure, whose caption and body text disagree; the body
text is used because it matches the printed c* = 4/3 and M = 0.75).
"""

from __future__ import annotations

import math
import warnings
from typing import Callable, Optional

import numpy as np

from . import approx, bounds, capital, exact, model, montecarlo
from .capital import SolveSpec
from .dist import Erlang, Exponential, Kummer, MixtureExp2, Pareto
from .errors import DomainError, ExcludedCaseError
from .exact import ExpPair
from .model import RiskModel, derived_constants
from .montecarlo import SimConfig
from .table import CurveTable

__all__ = ["PRESET_IDS", "run_preset", "constants_table", "TABLE1_MODELS"]

_EXP_UNIT = RiskModel(Exponential(1.0), Exponential(1.0))
_MODEL_I = RiskModel(Exponential(4.0 / 5.0), Exponential(3.0 / 5.0))
_MODEL_IV = RiskModel(Erlang(8.0 / 5.0, 2), Exponential(3.0 / 5.0))
_MIX_PARETO = RiskModel(MixtureExp2(1.0, 2.0, 2.0 / 3.0), Pareto(4.0, 0.35))

TABLE1_MODELS = [
    ("exponential/exponential", _EXP_UNIT),
    ("mixture2/pareto", _MIX_PARETO),
    ("erlang/pareto", RiskModel(Erlang(6.0, 4), Pareto(4.0, 0.4))),
    ("pareto/pareto", RiskModel(Pareto(4.0, 0.4), Pareto(4.0, 0.4))),
]


def _grid(start: float, stop: float, step: float) -> np.ndarray:
    n = int(round((stop - start) / step)) + 1
    return start + step * np.arange(n)


def constants_table(models: list[tuple[str, RiskModel]]) -> CurveTable:
    """Derived constants, one row per model, rounded to 4 decimals."""
    cols = ["c_star", "m_big", "d2_big", "m_v", "d2_v", "m_n", "d2_n"]
    table = CurveTable(
        columns=cols, metadata={"models": [name for name, _ in models]}
    )
    for _, m in models:
        k = derived_constants(m)
        table.append([round(getattr(k, c), 4) for c in cols])
    return table


def _mc_nonruin_column(
    m: RiskModel, alpha: float, t: float, cs, n_paths: int, seed: int
):
    cfg = SimConfig(n_paths=n_paths, seed=seed, t=t)
    tab = montecarlo.simulate_curve(m, alpha, cs, cfg)
    return tab.column("nonruin_cap")


def _fig1(n_paths: int, seed: int):
    cs = _grid(0.0, 2.5, 0.05)
    tab = capital.capital_curve(
        _EXP_UNIT, 0.05, 200.0, cs, SolveSpec(backend="exact_exp")
    )
    tab.columns = ["c", "var_exact", "nonruin_exact"]
    at_cstar = capital.nonruin_capital(
        _EXP_UNIT, 0.05, 200.0, 1.0, SolveSpec(backend="exact_exp")
    ).value
    sidecar = {
        "grid_lines": {"nonruin_at_cstar": 40.0844, "c_star": 1.0},
        "achieved": {"nonruin_at_cstar": at_cstar},
    }
    return {"curve": tab}, sidecar


def _fig2(n_paths: int, seed: int):
    cs = _grid(0.0, 2.5, 0.05)
    tab = capital.capital_curve(
        _EXP_UNIT,
        0.05,
        200.0,
        cs,
        SolveSpec(backend="exact_exp"),
        kinds=("nonruin", "ultimate"),
    )
    tab.columns = ["c", "nonruin_exact", "ultimate_exact"]
    at_cstar = capital.nonruin_capital(
        _EXP_UNIT, 0.05, 200.0, 1.0, SolveSpec(backend="exact_exp")
    ).value
    sidecar = {
        "grid_lines": {"nonruin_at_cstar": 40.08, "c_star": 1.0},
        "achieved": {"nonruin_at_cstar": at_cstar},
        "notes": ["ultimate capital is infinite for c <= c*; cells are NA there"],
    }
    return {"curve": tab}, sidecar


def _fig3(n_paths: int, seed: int):
    # profile U(x): the sqrt(t)-scale shape of the non-ruin capital,
    # recovered from the exact curve via
    # u(c) = (c* - c) t + (sqrt(2 delta)/rho) U(x) sqrt(t),
    # x = rho (c* - c) sqrt(t) / sqrt(2 delta)
    t = 200.0
    scale = math.sqrt(2.0)  # sqrt(2 delta)/rho at delta = rho = 1
    spec = SolveSpec(backend="exact_exp")
    xs = np.linspace(0.0, 8.0, 81)
    rows = []
    for x in xs:
        c = 1.0 - x * scale / math.sqrt(t)
        u = capital.nonruin_capital(_EXP_UNIT, 0.05, t, float(c), spec).value
        prof = (u - (1.0 - c) * t) / (scale * math.sqrt(t))
        rows.append([float(x), prof])
    tab = CurveTable(columns=["x", "profile"], rows=rows, metadata={"t": t})
    sidecar = {
        "grid_lines": {"z_alpha": 1.645, "z_half_alpha": 1.960},
        "achieved": {"profile_at_0": rows[0][1], "profile_at_8": rows[-1][1]},
        "notes": [
            "profile recovered by inverting the exact capital curve; its "
            "value at 0 approaches the alpha/2 normal quantile and its "
            "large-x limit the alpha quantile"
        ],
    }
    return {"curve": tab}, sidecar


def _ruin_figure(with_cramer: bool, with_ig: bool, n_paths: int, seed: int):
    p = ExpPair(1.0, 1.0)
    u, t = 50.0, 1000.0
    cs = _grid(0.5, 1.5, 0.05)
    cfg = SimConfig(n_paths=n_paths, seed=seed, t=t)
    cols = ["c", "exact"]
    if with_cramer:
        cols.append("cramer")
    if with_ig:
        cols.append("ig")
    cols += ["mc", "mc_stderr"]
    tab = CurveTable(columns=cols, metadata={"u": u, "t": t, "seed": seed})
    for c in cs:
        c = float(c)
        row = [c, exact.ruin_finite_exp(p, u, c, t)]
        if with_cramer:
            try:
                row.append(approx.cramer_ruin_exp(p, u, c, t))
            except ExcludedCaseError:
                row.append(None)
        if with_ig:
            row.append(approx.ig_ruin_probability(_EXP_UNIT, u, c, t, "closed"))
        est = montecarlo.estimate_ruin_prob(_EXP_UNIT, u, c, cfg)
        row += [est.point, est.stderr]
        tab.append(row)
    achieved = exact.ruin_finite_exp(p, u, 1.0, t)
    sidecar = {
        "grid_lines": {"ruin_at_cstar": 0.26},
        "achieved": {"ruin_at_cstar": achieved},
    }
    return {"curve": tab}, sidecar


def _fig4(n_paths: int, seed: int):
    files, sidecar = _ruin_figure(True, False, n_paths, seed)
    sidecar["notes"] = [
        "the normal approximation is undefined at c = c* = 1; that cell is NA"
    ]
    return files, sidecar


def _fig5(n_paths: int, seed: int):
    return _ruin_figure(False, True, n_paths, seed)


def _fig6(n_paths: int, seed: int):
    u, t = 40.0, 1000.0
    cs = _grid(0.6, 1.6, 0.05)
    cfg = SimConfig(n_paths=n_paths, seed=seed, t=t)
    tab = CurveTable(
        columns=["c", "ig", "mc", "mc_stderr"],
        metadata={"u": u, "t": t, "seed": seed},
    )
    for c in cs:
        c = float(c)
        ig = approx.ig_ruin_probability(_MIX_PARETO, u, c, t, "closed")
        est = montecarlo.estimate_ruin_prob(_MIX_PARETO, u, c, cfg)
        tab.append([c, ig, est.point, est.stderr])
    k = derived_constants(_MIX_PARETO)
    sidecar = {
        "grid_lines": {},
        "achieved": {"c_star": round(k.c_star, 4), "m_big": round(k.m_big, 4)},
        "notes": ["no numeric grid line published for this figure"],
    }
    return {"curve": tab}, sidecar


def _bounds_columns(
    m: RiskModel, alpha: float, t: float, cs, upper_for_super: Optional[Callable]
):
    """Asymptotic band on [0, c*]; optional upper bound beyond c*."""
    c_star = derived_constants(m).c_star
    lower, upper = [], []
    for c in cs:
        c = float(c)
        if c <= c_star:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                lo, hi = approx.capital_asymptotic_bounds(m, alpha, t, c)
            lower.append(lo)
            upper.append(hi)
        else:
            lower.append(None)
            upper.append(upper_for_super(c) if upper_for_super else None)
    return lower, upper


def _fig7(n_paths: int, seed: int):
    m = _MODEL_I
    alpha, t = 0.05, 200.0
    cs = _grid(0.0, 2.5, 0.05)
    p = ExpPair(4.0 / 5.0, 3.0 / 5.0)
    lower, upper = _bounds_columns(
        m, alpha, t, cs, lambda c: bounds.capital_upper_bound_exp(p, alpha, c)
    )
    spec = SolveSpec(backend="exact_exp")
    tab = capital.capital_curve(m, alpha, t, cs, spec, kinds=("nonruin",))
    sim = _mc_nonruin_column(m, alpha, t, cs, n_paths, seed)
    out = CurveTable(
        columns=["c", "lower_bound", "upper_bound", "nonruin_exact", "sim_nonruin"],
        metadata={"alpha": alpha, "t": t, "seed": seed},
    )
    for i, c in enumerate(cs):
        out.append([float(c), lower[i], upper[i], tab.rows[i][1], sim[i]])
    at_cstar = capital.nonruin_capital(m, alpha, t, 4.0 / 3.0, spec).value
    sidecar = {
        "grid_lines": {"c_star": 4.0 / 3.0, "nonruin_at_cstar": 59.9033},
        "achieved": {"nonruin_at_cstar": at_cstar},
        "notes": [
            "the published caption swaps the two exponential rates relative "
            "to the accompanying text; this preset follows the text "
            "(rates 4/5 for inter-claim times and 3/5 for claim sizes), "
            "which matches the printed c* = 4/3 and M = 0.75"
        ],
    }
    return {"curve": out}, sidecar


def _fig8(n_paths: int, seed: int):
    m = _MODEL_IV
    alpha, t = 0.05, 200.0
    cs = _grid(0.0, 2.5, 0.05)
    lower, upper = _bounds_columns(
        m, alpha, t, cs, lambda c: bounds.capital_upper_bound_lundberg(m, alpha, c)
    )
    sim = _mc_nonruin_column(m, alpha, t, cs, n_paths, seed)
    out = CurveTable(
        columns=["c", "lower_bound", "upper_bound", "sim_nonruin"],
        metadata={"alpha": alpha, "t": t, "seed": seed},
    )
    for i, c in enumerate(cs):
        out.append([float(c), lower[i], upper[i], sim[i]])
    i_star = int(np.argmin(np.abs(cs - 4.0 / 3.0)))
    ep = approx.capital_asymptotic_endpoints(m, alpha, t)
    sidecar = {
        "grid_lines": {"c_star": 4.0 / 3.0, "nonruin_at_cstar": 48.0},
        "achieved": {
            "sim_nonruin_at_cstar": sim[i_star],
            "endpoint_formula_at_cstar": ep.u_at_cstar,
        },
        "notes": [
            "the published grid value 48 came from a 1000-path simulation; "
            "large simulations of this implementation concentrate near 51.5"
        ],
    }
    return {"curve": out}, sidecar


def _fig9(n_paths: int, seed: int):
    alpha, t = 0.05, 200.0
    cs = _grid(0.0, 2.5, 0.05)
    m_dots = RiskModel(Exponential(4.0 / 5.0), Pareto(10.0, 0.05))
    m_cross = RiskModel(Exponential(4.0 / 5.0), Pareto(3.0, 0.3))
    cols = ["c"]
    data = []
    notes = []
    for label, m in (("dots", m_dots), ("crosses", m_cross)):
        lower, upper = _bounds_columns(m, alpha, t, cs, None)
        sim = _mc_nonruin_column(m, alpha, t, cs, n_paths, seed)
        data += [lower, upper, sim]
        cols += [f"{label}_lower", f"{label}_upper", f"{label}_sim"]
        rep = model.theorem_preconditions(m)
        if not rep.capital_asymptotics_ok:
            notes.append(
                f"{label}: third claim-size moment not finite; the bound "
                "formulas are applied outside their stated hypotheses"
            )
    out = CurveTable(
        columns=cols, metadata={"alpha": alpha, "t": t, "seed": seed}
    )
    for i, c in enumerate(cs):
        out.append([float(c)] + [col[i] for col in data])
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        ep = approx.capital_asymptotic_endpoints(m_dots, alpha, t)
    sidecar = {
        "grid_lines": {
            "c_star_dots": 1.7778,
            "c_star_crosses": 1.3333,
            "nonruin_at_cstar": 80.0,
        },
        "achieved": {
            "c_star_dots": round(derived_constants(m_dots).c_star, 4),
            "c_star_crosses": round(derived_constants(m_cross).c_star, 4),
            "endpoint_formula_dots": ep.u_at_cstar,
        },
        "notes": notes,
    }
    return {"curve": out}, sidecar


def _fig10(n_paths: int, seed: int):
    alpha, t = 0.05, 200.0
    cs = _grid(0.0, 2.5, 0.05)
    m_dots = RiskModel(Exponential(4.0 / 5.0), Kummer(5.0, 5.0))
    m_cross = RiskModel(Exponential(4.0 / 5.0), Kummer(200.0, 200.0))
    cols = ["c"]
    data = []
    for label, m in (("dots", m_dots), ("crosses", m_cross)):
        lower, upper = _bounds_columns(m, alpha, t, cs, None)
        data += [lower, upper]
        cols += [f"{label}_lower", f"{label}_upper"]
    out = CurveTable(
        columns=cols, metadata={"alpha": alpha, "t": t}
    )
    for i, c in enumerate(cs):
        out.append([float(c)] + [col[i] for col in data])
    sidecar = {
        "grid_lines": {
            "c_star_dots": 1.3333,
            "c_star_crosses": 0.8081,
            "sim_nonruin_at_cstar_dots": 102.0,
            "sim_nonruin_at_cstar_crosses": 36.0,
        },
        "achieved": {
            "c_star_dots": round(derived_constants(m_dots).c_star, 4),
            "c_star_crosses": round(derived_constants(m_cross).c_star, 4),
        },
        "limitations": [
            "no sampler is implemented for the gamma-ratio claim-size "
            "family, so the simulated capital curves cannot be reproduced; "
            "only the equilibrium premium rates and the asymptotic bounds "
            "band are computed",
            "the published simulated values 102 (dots) and 36 (crosses) at "
            "c* are recorded here as non-reproduced reference values",
        ],
    }
    return {"curve": out}, sidecar


def _table1(n_paths: int, seed: int):
    tab = constants_table(TABLE1_MODELS)
    sidecar = {
        "grid_lines": {
            "m_big": [1.0, 0.8750, 0.8, 1.0],
            "d2_big": [2.0, 2.3042, 1.2, 1.3333],
        },
        "achieved": {
            "m_big": tab.column("m_big"),
            "d2_big": tab.column("d2_big"),
        },
    }
    return {"constants": tab}, sidecar


_PRESETS = {
    "fig1": _fig1,
    "fig2": _fig2,
    "fig3": _fig3,
    "fig4": _fig4,
    "fig5": _fig5,
    "fig6": _fig6,
    "fig7": _fig7,
    "fig8": _fig8,
    "fig9": _fig9,
    "fig10": _fig10,
    "table1": _table1,
}

PRESET_IDS = tuple(_PRESETS)


def run_preset(preset_id: str, n_paths: int = 1000, seed: int = 20240817):
    """Build the tables and sidecar for one preset id.

    Returns (files, sidecar) where files maps a short curve name to a
    CurveTable.
    """
    if preset_id not in _PRESETS:
        raise DomainError(
            f"unknown preset {preset_id!r}; expected one of {PRESET_IDS}"
        )
    return _PRESETS[preset_id](n_paths, seed)

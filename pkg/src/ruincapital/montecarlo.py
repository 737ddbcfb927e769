"""Monte Carlo engine for the compound renewal risk process.

One path sweep yields both capitals at once: for each path the engine
records the running maximum of the claim-surplus deficit V_s - c s over
claim epochs (the deficit only peaks at jump instants) and its terminal
value at the horizon.  Then

* P{ruin within [0, t] at capital u} = P{sup deficit > u}, and
* the two capitals are empirical (1 - alpha)-quantiles of the sup and
  terminal deficits, clamped at zero.

Randomness comes from counter-based Philox streams keyed by (seed, block):
paths are split into ``stream_count`` contiguous blocks, each with its own
stream, and results are merged in block order, so output is deterministic
regardless of how blocks are scheduled.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import dist
from .errors import DomainError
from .model import RiskModel
from .table import CurveTable

__all__ = [
    "SimConfig",
    "PathStats",
    "Estimate",
    "simulate_path",
    "simulate_paths",
    "estimate_ruin_prob",
    "estimate_capitals",
    "simulate_curve",
]


@dataclass(frozen=True)
class SimConfig:
    """Simulation size, horizon and random-stream layout."""

    n_paths: int
    seed: int
    t: float
    stream_count: int = 1

    def __post_init__(self):
        if self.n_paths < 1:
            raise DomainError("n_paths must be positive")
        if self.n_paths < 100:
            warnings.warn(
                "fewer than 100 paths: confidence intervals unreliable",
                RuntimeWarning,
                stacklevel=3,
            )
        if not self.t > 0.0:
            raise DomainError("horizon t must be positive")
        if self.stream_count < 1:
            raise DomainError("stream_count must be positive")
        if not 0 <= self.seed < 2**64:
            raise DomainError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class PathStats:
    """Pathwise deficit statistics of one simulated trajectory."""

    sup_deficit: float
    terminal_deficit: float


@dataclass(frozen=True)
class Estimate:
    """Point estimate with standard error and a 95% confidence interval."""

    point: float
    stderr: float
    ci95: tuple[float, float]


def _block_rng(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=(seed << 64) | block))


def _block_sizes(n: int, k: int) -> list[int]:
    q, r = divmod(n, k)
    return [q + (1 if b < r else 0) for b in range(k)]


def simulate_path(m: RiskModel, c: float, t: float, rng: np.random.Generator) -> PathStats:
    """Simulate one trajectory up to the horizon t.

    Claims arrive at the partial sums of T draws; the deficit V_s - c s is
    evaluated at each claim epoch (it decreases between jumps).  A path
    with no claim in [0, t] has sup_deficit 0.
    """
    if c < 0.0:
        raise DomainError("premium rate must be nonnegative")
    if not t > 0.0:
        raise DomainError("horizon t must be positive")
    s = 0.0
    v = 0.0
    sup = 0.0
    while True:
        s += float(dist.sample(m.t_law, rng))
        y = float(dist.sample(m.y_law, rng))
        if s > t:
            break
        v += y
        sup = max(sup, v - c * s)
    return PathStats(sup_deficit=sup, terminal_deficit=v - c * t)


def _simulate_block(
    m: RiskModel, c: float, t: float, n: int, rng: np.random.Generator
) -> tuple[np.ndarray, np.ndarray]:
    arrival = np.zeros(n)
    total = np.zeros(n)
    sup = np.zeros(n)
    active = np.ones(n, dtype=bool)
    while active.any():
        idx = np.nonzero(active)[0]
        gaps = dist.sample(m.t_law, rng, idx.size)
        sizes = dist.sample(m.y_law, rng, idx.size)
        arrival[idx] += gaps
        alive = arrival[idx] <= t
        j = idx[alive]
        total[j] += sizes[alive]
        sup[j] = np.maximum(sup[j], total[j] - c * arrival[j])
        active[idx[~alive]] = False
    return sup, total - c * t


def simulate_paths(m: RiskModel, c: float, cfg: SimConfig) -> tuple[np.ndarray, np.ndarray]:
    """Simulate all configured paths; returns (sup_deficits, terminal_deficits).

    Deterministic for a fixed (seed, stream_count, n_paths); drawing extra
    claims for a path that has already crossed the horizon never happens,
    so the draw sequence depends only on the T law and the horizon, which
    keeps draws common across premium rates (common random numbers).
    """
    if c < 0.0:
        raise DomainError("premium rate must be nonnegative")
    sups = []
    terms = []
    for block, size in enumerate(_block_sizes(cfg.n_paths, cfg.stream_count)):
        if size == 0:
            continue
        rng = _block_rng(cfg.seed, block)
        s, d = _simulate_block(m, c, cfg.t, size, rng)
        sups.append(s)
        terms.append(d)
    return np.concatenate(sups), np.concatenate(terms)


def estimate_ruin_prob(m: RiskModel, u: float, c: float, cfg: SimConfig) -> Estimate:
    """Estimate P{ruin within [0, t]} at capital u from one path sweep."""
    if u < 0.0:
        raise DomainError("capital u must be nonnegative")
    sup, _ = simulate_paths(m, c, cfg)
    return _prob_estimate(sup, u, cfg.n_paths)


def _prob_estimate(sup: np.ndarray, u: float, n: int) -> Estimate:
    p = float(np.count_nonzero(sup > u)) / n
    se = math.sqrt(p * (1.0 - p) / n)
    return Estimate(point=p, stderr=se, ci95=(max(0.0, p - 1.96 * se), min(1.0, p + 1.96 * se)))


def _quantile_estimate(x: np.ndarray, alpha: float) -> Estimate:
    """Upper order statistic at ceil((1-alpha) N) with a binomial-bracket CI."""
    n = x.size
    xs = np.sort(x)
    q = 1.0 - alpha
    k = math.ceil(q * n)
    point = max(0.0, float(xs[k - 1]))
    spread = 1.96 * math.sqrt(n * q * (1.0 - q))
    k_lo = max(1, math.floor(q * n - spread))
    k_hi = min(n, math.ceil(q * n + spread))
    lo = max(0.0, float(xs[k_lo - 1]))
    hi = max(0.0, float(xs[k_hi - 1]))
    return Estimate(point=point, stderr=(hi - lo) / (2.0 * 1.96), ci95=(lo, hi))


def estimate_capitals(
    m: RiskModel, alpha: float, c: float, cfg: SimConfig
) -> dict[str, Estimate]:
    """Both capitals as empirical (1 - alpha)-quantiles of pathwise deficits.

    Returns {"var_cap": ..., "nonruin_cap": ...}; the Value-at-Risk capital
    is the quantile of terminal deficits and never exceeds the non-ruin
    capital because the terminal deficit is dominated pathwise by the sup.
    """
    if not 0.0 < alpha < 0.5:
        raise DomainError("alpha must lie in (0, 1/2)")
    if cfg.n_paths * alpha < 50.0:
        warnings.warn(
            f"only {cfg.n_paths * alpha:.0f} expected tail paths at alpha="
            f"{alpha}; quantile estimate noisy (want n_paths >= 50/alpha)",
            RuntimeWarning,
            stacklevel=2,
        )
    sup, term = simulate_paths(m, c, cfg)
    return {
        "var_cap": _quantile_estimate(term, alpha),
        "nonruin_cap": _quantile_estimate(sup, alpha),
    }


def simulate_curve(
    m: RiskModel,
    alpha: float,
    c_grid,
    cfg: SimConfig,
    u: float | None = None,
) -> CurveTable:
    """Per-premium-rate estimates over a grid, with common random numbers.

    Every grid point reuses the same seed, so the same claim scenarios are
    priced at every premium rate and the resulting curves are smooth in c.
    Columns: c, var_cap, var_lo, var_hi, nonruin_cap, nonruin_lo,
    nonruin_hi, and when ``u`` is given additionally ruin_prob and
    ruin_stderr at that capital.
    """
    c_grid = [float(c) for c in c_grid]
    if any(b <= a for a, b in zip(c_grid, c_grid[1:])):
        raise DomainError("c_grid must be strictly increasing")
    if any(c < 0.0 for c in c_grid):
        raise DomainError("c_grid must be nonnegative")
    cols = ["c", "var_cap", "var_lo", "var_hi", "nonruin_cap", "nonruin_lo", "nonruin_hi"]
    if u is not None:
        cols += ["ruin_prob", "ruin_stderr"]
    table = CurveTable(
        columns=cols,
        metadata={
            "seed": cfg.seed,
            "n_paths": cfg.n_paths,
            "stream_count": cfg.stream_count,
            "t": cfg.t,
            "alpha": alpha,
        },
    )
    for c in c_grid:
        sup, term = simulate_paths(m, c, cfg)
        var_e = _quantile_estimate(term, alpha)
        non_e = _quantile_estimate(sup, alpha)
        row = [
            c,
            var_e.point,
            var_e.ci95[0],
            var_e.ci95[1],
            non_e.point,
            non_e.ci95[0],
            non_e.ci95[1],
        ]
        if u is not None:
            pe = _prob_estimate(sup, u, cfg.n_paths)
            row += [pe.point, pe.stderr]
        table.append(row)
    return table

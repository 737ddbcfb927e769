"""The compound renewal risk model and its derived scalar constants.

Claims arrive at renewal epochs with i.i.d. inter-claim times T; each claim
has an i.i.d. size Y, independent of the arrival sequence.  The risk
reserve at time s is ``u + c s - V_s`` where V is the cumulative payout.

Two normalizations of the same model coexist and must not be conflated:

* the level-crossing constants ``M = ET/EY`` and
  ``D^2 = ((ET)^2 DY + (EY)^2 DT) / (EY)^3`` drive the inverse Gaussian
  ruin approximation (capital per unit of money);
* the aggregate-claims constants ``M_V = EY/ET`` and
  ``D_V^2 = ((ET)^2 DY + (EY)^2 DT) / (ET)^3`` drive the CLT for V_t
  (money per unit of operational time).

``c* = EY/ET`` is the equilibrium premium rate and equals ``1/M``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import dist
from .dist import Distribution, Exponential
from .errors import ConstantsUnavailableError, MomentUndefinedError

__all__ = [
    "RiskModel",
    "DerivedConstants",
    "PreconditionReport",
    "derived_constants",
    "theorem_preconditions",
]


@dataclass(frozen=True)
class RiskModel:
    """A pair (T-law, Y-law) of independent strictly positive laws."""

    t_law: Distribution
    y_law: Distribution

    def is_exponential_pair(self) -> bool:
        return isinstance(self.t_law, Exponential) and isinstance(
            self.y_law, Exponential
        )


@dataclass(frozen=True)
class DerivedConstants:
    """All scalar constants derived from the first two moments of (T, Y)."""

    c_star: float
    m_big: float
    d2_big: float
    m_v: float
    d2_v: float
    m_n: float
    d2_n: float

    @property
    def d_big(self) -> float:
        return self.d2_big**0.5

    @property
    def d_v(self) -> float:
        return self.d2_v**0.5

    @property
    def capital_scale(self) -> float:
        """D / M^{3/2}, the sqrt(t) coefficient in the capital asymptotics."""
        return self.d_big / self.m_big**1.5


@dataclass(frozen=True)
class PreconditionReport:
    """Which published hypotheses the model satisfies (diagnostic only)."""

    bounded_density_t: bool
    bounded_density_y: bool
    third_moment_t_finite: bool
    third_moment_y_finite: bool
    d2_positive: bool
    light_tailed_y: bool

    @property
    def inverse_gaussian_ok(self) -> bool:
        """Hypotheses of the uniform inverse-Gaussian approximation."""
        return (
            self.bounded_density_t
            and self.bounded_density_y
            and self.third_moment_t_finite
            and self.third_moment_y_finite
            and self.d2_positive
        )

    # the capital asymptotics share the same hypotheses
    capital_asymptotics_ok = inverse_gaussian_ok

    @property
    def cramer_ok(self) -> bool:
        """Light-tailed-claims requirement of the normal approximation."""
        return self.light_tailed_y and self.bounded_density_t and self.bounded_density_y


def derived_constants(m: RiskModel) -> DerivedConstants:
    """Compute c*, (M, D^2), (M_V, D_V^2) and (M_N, D_N^2).

    D_V^2 = E(T EY - Y ET)^2 / (ET)^3 expands by independence to
    ((ET)^2 DY + (EY)^2 DT) / (ET)^3; D^2 is the same numerator over (EY)^3.

    Raises:
        ConstantsUnavailableError: when a required moment does not exist,
            naming the offending law.
    """
    try:
        mt = dist.moments(m.t_law)
    except MomentUndefinedError as exc:
        raise ConstantsUnavailableError(f"T law: {exc}") from exc
    try:
        my = dist.moments(m.y_law)
    except MomentUndefinedError as exc:
        raise ConstantsUnavailableError(f"Y law: {exc}") from exc

    et, dt = mt.mean, mt.variance
    ey, dy = my.mean, my.variance
    num = et**2 * dy + ey**2 * dt
    return DerivedConstants(
        c_star=ey / et,
        m_big=et / ey,
        d2_big=num / ey**3,
        m_v=ey / et,
        d2_v=num / et**3,
        m_n=1.0 / et,
        d2_n=dt / et**3,
    )


def _third_finite(d: Distribution) -> Optional[bool]:
    try:
        return dist.moments(d).third_moment is not None
    except MomentUndefinedError:
        return False


def theorem_preconditions(m: RiskModel) -> PreconditionReport:
    """Report whether the model satisfies the stated approximation hypotheses."""
    try:
        d2 = derived_constants(m).d2_big
        d2_positive = d2 > 0.0
    except ConstantsUnavailableError:
        d2_positive = False
    return PreconditionReport(
        bounded_density_t=dist.has_bounded_density(m.t_law),
        bounded_density_y=dist.has_bounded_density(m.y_law),
        third_moment_t_finite=bool(_third_finite(m.t_law)),
        third_moment_y_finite=bool(_third_finite(m.y_law)),
        d2_positive=d2_positive,
        light_tailed_y=not dist.is_heavy_tailed(m.y_law),
    )

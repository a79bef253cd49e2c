"""Closed-form optima for the two-phase offloading problem.

The energy objective ``d_m * p_n1 + t_n * p_n2`` is minimized subject to the
rate constraint in log-domain variables ``y_i = ln(x_i)`` where
``x_1 = 1 + exp(-nats/d_m) * h_n_sq * p_n1`` and ``x_2 = 1 + h_n_sq * p_n2``.
In those variables the problem is a geometric program, its KKT system has a
unique closed-form solution for any fixed extension length ``t_n``, and the
rate constraint is active at every optimum:

    y1 = nats * (d_m - t_n) / (d_m * (d_m + t_n))
    y2 = y1 + nats / d_m = 2 * nats / (d_m + t_n)

All functions here evaluate those forms (and the limiting pure-NOMA / OMA
cases) with overflow-safe primitives. Whenever an exponent exceeds
``EXP_CUTOFF`` the plain-domain value saturates to ``inf``; the ``log_*``
companions stay finite and should be used for comparisons in that range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NonPositiveParameter, RegimeViolation, TimeExtensionOutOfRange
from .model import OffloadScenario, PowerSchedule

# Exponent magnitude beyond which exp() products are at risk of overflowing a
# double; plain-domain energies saturate to inf past this point.
EXP_CUTOFF = 700.0


@dataclass(frozen=True)
class KktPoint:
    """Log-domain rate variables of the fixed-extension optimum.

    For hybrid points the coupling ``y2 - y1 == nats / d_m`` holds exactly in
    floating point (the subtraction producing ``y1`` is exact by Sterbenz'
    lemma) and the active constraint ``d_m * y1 + t_n * y2 == nats`` holds to
    a few ulp.
    """

    y1: float
    y2: float

    def __post_init__(self):
        if not (self.y1 >= 0.0 and self.y2 >= 0.0):
            raise NonPositiveParameter(
                f"log-domain rates must be nonnegative, got ({self.y1!r}, {self.y2!r})"
            )


def _check_extension(scenario: OffloadScenario, t_n: float) -> None:
    if not (0.0 <= t_n <= scenario.d_m):
        raise TimeExtensionOutOfRange(
            f"t_n must lie in [0, d_m] = [0, {scenario.d_m}], got {t_n!r}"
        )


def kkt_log_vars(scenario: OffloadScenario, t_n: float) -> KktPoint:
    """Optimal log-domain rates (y1, y2) for a fixed extension ``t_n`` in [0, d_m]."""
    _check_extension(scenario, t_n)
    rate_dm = scenario.nats / scenario.d_m
    y2 = 2.0 * scenario.nats / (scenario.d_m + t_n)
    # rate_dm lies in [y2/2, y2], so this subtraction is exact (Sterbenz);
    # y2 - y1 == rate_dm then holds bit-for-bit, and y1 == 0.0 exactly at t_n == d_m.
    y1 = y2 - rate_dm
    return KktPoint(y1=y1, y2=y2)


def hybrid_powers(scenario: OffloadScenario, t_n: float) -> tuple[float, float]:
    """Optimal powers (p_n1, p_n2) for a fixed extension ``t_n`` in [0, d_m].

    The resulting schedule meets the rate constraint with equality. At
    ``t_n == 0`` the first power coincides bit-for-bit with
    ``pure_noma_power``; at ``t_n == d_m`` it is exactly 0.
    """
    point = kkt_log_vars(scenario, t_n)
    rate_dm = scenario.nats / scenario.d_m
    if point.y1 == 0.0:
        p_n1 = 0.0
    elif rate_dm + point.y1 > EXP_CUTOFF:
        p_n1 = math.inf
    else:
        p_n1 = math.exp(rate_dm) * math.expm1(point.y1) / scenario.h_n_sq
    if point.y2 > EXP_CUTOFF:
        p_n2 = math.inf
    else:
        p_n2 = math.expm1(point.y2) / scenario.h_n_sq
    return p_n1, p_n2


def hybrid_schedule(scenario: OffloadScenario, t_n: float) -> PowerSchedule:
    """``hybrid_powers`` packaged as a PowerSchedule."""
    p_n1, p_n2 = hybrid_powers(scenario, t_n)
    return PowerSchedule(p_n1=p_n1, p_n2=p_n2, t_n=t_n)


def hybrid_energy(scenario: OffloadScenario, t_n: float) -> float:
    """Energy of the fixed-extension optimum; non-increasing in ``t_n`` on [0, d_m]."""
    p_n1, p_n2 = hybrid_powers(scenario, t_n)
    phase1 = scenario.d_m * p_n1
    phase2 = t_n * p_n2 if t_n > 0.0 else 0.0
    return phase1 + phase2


def pure_noma_power(scenario: OffloadScenario) -> float:
    """Shared-slot power when the whole task is offloaded during ``d_m``."""
    rate_dm = scenario.nats / scenario.d_m
    if 2.0 * rate_dm > EXP_CUTOFF:
        return math.inf
    return math.exp(rate_dm) * math.expm1(rate_dm) / scenario.h_n_sq


def pure_noma_energy(scenario: OffloadScenario) -> float:
    """Energy of the pure-NOMA strategy; equals ``hybrid_energy(scenario, 0)``."""
    return scenario.d_m * pure_noma_power(scenario)


def oma_power_m(scenario: OffloadScenario) -> float:
    """User m's power in plain OMA, solving ``d_m * ln(1 + p * h_m_sq) == nats``."""
    rate_dm = scenario.nats / scenario.d_m
    if rate_dm > EXP_CUTOFF:
        return math.inf
    return math.expm1(rate_dm) / scenario.h_m_sq


def oma_energy_n(scenario: OffloadScenario, slot: float) -> float:
    """User n's energy when it offloads everything in a dedicated slot of length ``slot``.

    Returns ``inf`` at ``slot == 0`` (no finite power completes the task) and
    when the required power overflows; ``log_oma_energy_n`` stays finite in
    the latter case.
    """
    if slot < 0.0:
        raise TimeExtensionOutOfRange(f"slot length must be nonnegative, got {slot!r}")
    if slot == 0.0:
        return math.inf
    rate = scenario.nats / slot
    if rate > EXP_CUTOFF:
        return math.inf
    return slot * math.expm1(rate) / scenario.h_n_sq


def optimal_time_extension(scenario: OffloadScenario) -> float:
    """Energy-optimal extension length ``d_n - d_m`` in the hybrid regime.

    Valid only for ``d_n < 2 d_m``; the monotone energy makes the largest
    admissible extension optimal. Raises RegimeViolation otherwise.
    """
    if scenario.d_n >= 2.0 * scenario.d_m:
        raise RegimeViolation(
            f"optimal extension is defined for d_n < 2 d_m, got d_n={scenario.d_n}, d_m={scenario.d_m}"
        )
    return scenario.d_n - scenario.d_m


def derivative_kernel(x: float) -> float:
    """Slope of the normalized energy expressed through the solo-phase rate x:
    ``exp(x) * (1 - x) - 1``. Zero at x = 0 and strictly negative for x > 0."""
    if x > EXP_CUTOFF:
        return -math.inf
    return math.exp(x) * (1.0 - x) - 1.0


def energy_derivative(scenario: OffloadScenario, t_n: float) -> float:
    """d/dt of the normalized energy ``h_n_sq * hybrid_energy`` at ``t_n``; always <= 0."""
    point = kkt_log_vars(scenario, t_n)
    return derivative_kernel(point.y2)


def _log_expm1(x: float) -> float:
    """ln(exp(x) - 1) without overflow; -inf at x == 0."""
    if x < 0.0:
        raise NonPositiveParameter(f"argument must be nonnegative, got {x!r}")
    if x == 0.0:
        return -math.inf
    if x > 0.693:
        return x + math.log1p(-math.exp(-x))
    return math.log(math.expm1(x))


def _log_add(a: float, b: float) -> float:
    if a == -math.inf:
        return b
    if b == -math.inf:
        return a
    hi, lo = (a, b) if a >= b else (b, a)
    return hi + math.log1p(math.exp(lo - hi))


def log_hybrid_energy(scenario: OffloadScenario, t_n: float) -> float:
    """ln of ``hybrid_energy``, finite even when the plain value saturates to inf."""
    point = kkt_log_vars(scenario, t_n)
    rate_dm = scenario.nats / scenario.d_m
    term1 = math.log(scenario.d_m) + rate_dm + _log_expm1(point.y1)
    term2 = math.log(t_n) + _log_expm1(point.y2) if t_n > 0.0 else -math.inf
    return _log_add(term1, term2) - math.log(scenario.h_n_sq)


def log_pure_noma_energy(scenario: OffloadScenario) -> float:
    """ln of ``pure_noma_energy``."""
    rate_dm = scenario.nats / scenario.d_m
    return math.log(scenario.d_m) + rate_dm + _log_expm1(rate_dm) - math.log(scenario.h_n_sq)


def log_oma_energy_n(scenario: OffloadScenario, slot: float) -> float:
    """ln of ``oma_energy_n``; +inf at ``slot == 0``."""
    if slot < 0.0:
        raise TimeExtensionOutOfRange(f"slot length must be nonnegative, got {slot!r}")
    if slot == 0.0:
        return math.inf
    return math.log(slot) + _log_expm1(scenario.nats / slot) - math.log(scenario.h_n_sq)

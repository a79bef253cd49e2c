"""Independent numerical verification of the closed forms.

Because the energy is strictly increasing in each power, the rate constraint
binds at any optimum. The oracle therefore never touches the closed-form
solutions: it parametrizes the active constraint by the fraction ``alpha`` of
the task carried during the shared slot, recovers the powers from that split,
and minimizes the resulting single-variable energy by golden-section search.
Agreement with the closed forms is the certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .closed_form import (
    EXP_CUTOFF,
    hybrid_powers,
    pure_noma_energy,
    pure_noma_power,
)
from .errors import NonConvergence, NonPositiveParameter, TimeExtensionOutOfRange
from .model import OffloadScenario, PowerSchedule, schedule_energy

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

# Boundary samples whose true offloaded total equals the task size can round a
# few ulp short; the feasibility mask keeps them.
FEASIBILITY_SLACK = 1e-12


@dataclass(frozen=True)
class OracleResult:
    """Numerically found minimum: powers, extension, energy, search effort."""

    p_n1: float
    p_n2: float
    t_n: float
    energy: float
    iterations: int
    tolerance_met: bool


@dataclass(frozen=True)
class SurfaceGrid:
    """Dense energy/feasibility sampling over the power plane at fixed ``t_n``.

    ``energy[i, j] == d_m * p1_axis[i] + t_n * p2_axis[j]``; ``feasible``
    marks samples whose offloaded total reaches the task size (up to
    FEASIBILITY_SLACK relative).
    """

    p1_axis: np.ndarray
    p2_axis: np.ndarray
    energy: np.ndarray
    feasible: np.ndarray

    def feasible_argmin(self) -> tuple[int, int] | None:
        """Indices of the cheapest feasible sample, or None if none is feasible."""
        if not self.feasible.any():
            return None
        masked = np.where(self.feasible, self.energy, np.inf)
        i, j = np.unravel_index(int(np.argmin(masked)), masked.shape)
        return int(i), int(j)


def split_schedule(scenario: OffloadScenario, t_n: float, alpha: float) -> PowerSchedule:
    """Schedule that puts ``alpha`` of the task in the shared slot, the rest in ``t_n``,
    with the rate constraint met with equality in both phases."""
    if not (0.0 < t_n):
        raise TimeExtensionOutOfRange(f"t_n must be positive, got {t_n!r}")
    if not (0.0 <= alpha <= 1.0):
        raise NonPositiveParameter(f"alpha must lie in [0, 1], got {alpha!r}")
    rate_dm = scenario.nats / scenario.d_m
    y1 = alpha * scenario.nats / scenario.d_m
    y2 = (1.0 - alpha) * scenario.nats / t_n
    if rate_dm + y1 > EXP_CUTOFF:
        p_n1 = math.inf if y1 > 0.0 else 0.0
    else:
        p_n1 = math.exp(rate_dm) * math.expm1(y1) / scenario.h_n_sq
    p_n2 = math.inf if y2 > EXP_CUTOFF else math.expm1(y2) / scenario.h_n_sq
    return PowerSchedule(p_n1=p_n1, p_n2=p_n2, t_n=t_n)


def split_energy(scenario: OffloadScenario, t_n: float, alpha: float) -> float:
    """Energy of ``split_schedule``; strictly convex in ``alpha``."""
    return schedule_energy(scenario, split_schedule(scenario, t_n, alpha))


def oracle_fixed_t(
    scenario: OffloadScenario,
    t_n: float,
    tol: float = 1e-10,
    max_iter: int = 200,
) -> OracleResult:
    """Minimize the constraint-split energy over ``alpha`` by golden-section search.

    ``tol`` is the final bracket width on alpha; ``max_iter`` caps objective
    evaluations and exceeding it raises NonConvergence. The returned point is
    the best of the final bracket's endpoints and midpoint, so it is never
    worse than any alpha-grid sample at resolution ``tol``.
    """
    if not (0.0 < t_n <= scenario.d_m):
        raise TimeExtensionOutOfRange(
            f"t_n must lie in (0, d_m] = (0, {scenario.d_m}], got {t_n!r}"
        )
    if not (tol > 0.0):
        raise NonPositiveParameter(f"tol must be positive, got {tol!r}")

    def objective(alpha: float) -> float:
        return split_energy(scenario, t_n, alpha)

    lo, hi = 0.0, 1.0
    evals = 0
    inner_lo = hi - _INV_PHI * (hi - lo)
    inner_hi = lo + _INV_PHI * (hi - lo)
    f_lo, f_hi = objective(inner_lo), objective(inner_hi)
    evals += 2
    while (hi - lo) > tol:
        if evals >= max_iter:
            raise NonConvergence(
                f"golden-section spent {evals} evaluations without reaching width {tol}"
            )
        if f_lo < f_hi:
            hi, inner_hi, f_hi = inner_hi, inner_lo, f_lo
            inner_lo = hi - _INV_PHI * (hi - lo)
            f_lo = objective(inner_lo)
        else:
            lo, inner_lo, f_lo = inner_lo, inner_hi, f_hi
            inner_hi = lo + _INV_PHI * (hi - lo)
            f_hi = objective(inner_hi)
        evals += 1

    candidates = (lo, 0.5 * (lo + hi), hi)
    energies = [objective(a) for a in candidates]
    evals += 3
    best = min(range(3), key=lambda k: energies[k])
    schedule = split_schedule(scenario, t_n, candidates[best])
    return OracleResult(
        p_n1=schedule.p_n1,
        p_n2=schedule.p_n2,
        t_n=t_n,
        energy=energies[best],
        iterations=evals,
        tolerance_met=True,
    )


def oracle_joint(
    scenario: OffloadScenario,
    t_steps: int = 256,
    tol: float = 1e-10,
) -> OracleResult:
    """Joint search: run ``oracle_fixed_t`` on a uniform extension grid and take the argmin.

    The grid covers ``(0, min(d_n - d_m, d_m)]`` with ``t_steps`` points
    including the right endpoint. With ``d_n == d_m`` the interval is empty
    and the pure-NOMA point is returned directly. ``iterations`` aggregates
    the evaluations of all grid searches.
    """
    if t_steps < 2:
        raise NonPositiveParameter(f"t_steps must be at least 2, got {t_steps!r}")
    t_max = min(scenario.d_n - scenario.d_m, scenario.d_m)
    if t_max == 0.0:
        return OracleResult(
            p_n1=pure_noma_power(scenario),
            p_n2=0.0,
            t_n=0.0,
            energy=pure_noma_energy(scenario),
            iterations=0,
            tolerance_met=True,
        )
    best: OracleResult | None = None
    total_evals = 0
    for i in range(1, t_steps + 1):
        t_n = t_max * i / t_steps
        result = oracle_fixed_t(scenario, t_n, tol=tol)
        total_evals += result.iterations
        if best is None or result.energy < best.energy:
            best = result
    assert best is not None
    return OracleResult(
        p_n1=best.p_n1,
        p_n2=best.p_n2,
        t_n=best.t_n,
        energy=best.energy,
        iterations=total_evals,
        tolerance_met=True,
    )


def energy_surface(
    scenario: OffloadScenario,
    t_n: float,
    p1_max: float | None = None,
    p2_max: float | None = None,
    resolution: int = 200,
) -> SurfaceGrid:
    """Sample energy and rate-feasibility over ``[0, p1_max) x [0, p2_max)``.

    Each axis carries ``resolution`` uniform samples starting at 0, spaced
    ``max / resolution`` (the right endpoint is excluded). Ranges default to
    twice the closed-form powers at ``t_n``; that puts the closed-form
    optimum exactly on the sample lattice, where it is also the cheapest
    feasible sample. With hand-picked ranges the optimum generally falls
    between samples and the cheapest feasible sample can sit a few cells away
    along the constraint boundary.
    """
    if not (t_n > 0.0):
        raise TimeExtensionOutOfRange(f"t_n must be positive, got {t_n!r}")
    if resolution < 2:
        raise NonPositiveParameter(f"resolution must be at least 2, got {resolution!r}")
    if p1_max is None or p2_max is None:
        star1, star2 = hybrid_powers(scenario, t_n)
        if p1_max is None:
            p1_max = 2.0 * star1
        if p2_max is None:
            p2_max = 2.0 * star2
    if not (p1_max > 0.0 and p2_max > 0.0):
        raise NonPositiveParameter(
            f"power ranges must be positive, got p1_max={p1_max!r}, p2_max={p2_max!r}"
        )

    p1_axis = np.linspace(0.0, p1_max, resolution, endpoint=False)
    p2_axis = np.linspace(0.0, p2_max, resolution, endpoint=False)
    energy = scenario.d_m * p1_axis[:, None] + t_n * p2_axis[None, :]
    discount = math.exp(-scenario.nats / scenario.d_m)
    offloaded = (
        scenario.d_m * np.log1p(discount * scenario.h_n_sq * p1_axis)[:, None]
        + t_n * np.log1p(scenario.h_n_sq * p2_axis)[None, :]
    )
    feasible = offloaded >= scenario.nats * (1.0 - FEASIBILITY_SLACK)
    return SurfaceGrid(p1_axis=p1_axis, p2_axis=p2_axis, energy=energy, feasible=feasible)

"""Energy-optimal power and time allocation for two-user NOMA-assisted MEC offloading.

The library solves, in closed form, how a deadline-constrained user should
split its uplink offloading between a slot shared with another user (NOMA)
and a solo extension, selects among the hybrid-NOMA / pure-NOMA / OMA
strategies, and certifies every closed form against an independent numerical
oracle.
"""

from ._version import __version__
from .closed_form import (
    EXP_CUTOFF,
    KktPoint,
    derivative_kernel,
    energy_derivative,
    hybrid_energy,
    hybrid_powers,
    hybrid_schedule,
    kkt_log_vars,
    log_hybrid_energy,
    log_oma_energy_n,
    log_pure_noma_energy,
    oma_energy_n,
    oma_power_m,
    optimal_time_extension,
    pure_noma_energy,
    pure_noma_power,
)
from .errors import (
    ConfigError,
    DeadlineOrderViolation,
    FileUnreadable,
    MissingKey,
    NomaMecError,
    NonConvergence,
    NonPositiveParameter,
    RegimeViolation,
    TimeExtensionOutOfRange,
    TypeMismatch,
)
from .experiments import (
    CampaignSummary,
    SweepRow,
    SurfaceRecord,
    deadline_sweep,
    render_campaign_summary,
    render_surface_csv,
    render_sweep_csv,
    surface_export,
    verification_campaign,
)
from .model import (
    EnergyReport,
    OffloadScenario,
    PowerSchedule,
    StrategyKind,
    TaskSpec,
    UserChannel,
    offloaded_nats,
    schedule_energy,
    validate_scenario,
)
from .oracle import (
    OracleResult,
    SurfaceGrid,
    energy_surface,
    oracle_fixed_t,
    oracle_joint,
    split_energy,
    split_schedule,
)
from .strategy import (
    ComparisonTable,
    Regime,
    classify_regime,
    hybrid_lower_bound,
    noma_oma_gap,
    normalized_gap,
    select_strategy,
)

__all__ = [
    "__version__",
    "CampaignSummary",
    "ComparisonTable",
    "ConfigError",
    "DeadlineOrderViolation",
    "EXP_CUTOFF",
    "EnergyReport",
    "FileUnreadable",
    "KktPoint",
    "MissingKey",
    "NomaMecError",
    "NonConvergence",
    "NonPositiveParameter",
    "OffloadScenario",
    "OracleResult",
    "PowerSchedule",
    "Regime",
    "RegimeViolation",
    "StrategyKind",
    "SurfaceGrid",
    "SurfaceRecord",
    "SweepRow",
    "TaskSpec",
    "TimeExtensionOutOfRange",
    "TypeMismatch",
    "UserChannel",
    "classify_regime",
    "deadline_sweep",
    "derivative_kernel",
    "energy_derivative",
    "energy_surface",
    "hybrid_energy",
    "hybrid_lower_bound",
    "hybrid_powers",
    "hybrid_schedule",
    "kkt_log_vars",
    "log_hybrid_energy",
    "log_oma_energy_n",
    "log_pure_noma_energy",
    "noma_oma_gap",
    "normalized_gap",
    "offloaded_nats",
    "oma_energy_n",
    "oma_power_m",
    "optimal_time_extension",
    "oracle_fixed_t",
    "oracle_joint",
    "pure_noma_energy",
    "pure_noma_power",
    "render_campaign_summary",
    "render_surface_csv",
    "render_sweep_csv",
    "schedule_energy",
    "select_strategy",
    "split_energy",
    "split_schedule",
    "surface_export",
    "validate_scenario",
    "verification_campaign",
]

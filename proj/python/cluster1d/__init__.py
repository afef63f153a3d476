"""1D individual-clustering model: coupled density/velocity solvers and diagnostics."""

from ._cluster1d import (
    DiagRecord,
    ModelParams,
    PicardResult,
    ReproductionLaw,
    RunResult,
    SolverAbort,
    SteadyStateStudy,
    StepperConfig,
    SweepResult,
    chemorepulsion_crosscheck,
    compute_record,
    compute_velocity,
    epsilon_sweep,
    grid_nodes,
    heat_semigroup_apply,
    picard_iterate,
    run,
    run_limit,
    solve_elliptic,
    solve_elliptic_neumann,
    spectral_derivative,
    steady_state_study,
    step,
    step_limit,
)

__all__ = [
    "DiagRecord",
    "ModelParams",
    "PicardResult",
    "ReproductionLaw",
    "RunResult",
    "SolverAbort",
    "SteadyStateStudy",
    "StepperConfig",
    "SweepResult",
    "chemorepulsion_crosscheck",
    "compute_record",
    "compute_velocity",
    "epsilon_sweep",
    "grid_nodes",
    "heat_semigroup_apply",
    "picard_iterate",
    "run",
    "run_limit",
    "solve_elliptic",
    "solve_elliptic_neumann",
    "spectral_derivative",
    "steady_state_study",
    "step",
    "step_limit",
]

// Limiting parabolic solver, epsilon sweep, chemorepulsion cross-check and
// large-time steady-state studies.
#pragma once

#include <string>
#include <vector>

#include "cluster1d/stepper.hpp"

namespace cluster1d {

// One step of u_t = (delta u + u^2/2)_xx + r u (1-u) with Neumann ends:
// lagged-mobility form ( (delta+u) u_x )_x, implicit in the linearized operator.
SimState step_limit(const SimState& state, const ModelParams& p, const StepperConfig& cfg);

RunResult run_limit(const Field& u0, const ModelParams& p, const StepperConfig& cfg,
                    double t_final, int sample_every,
                    const std::vector<double>& snapshot_times = {});

struct SweepResult {
    std::vector<double> epsilon_list;
    std::vector<double> errors;            // int_0^T ||u_eps - u||_2^2 dt per epsilon
    std::vector<double> runtime_seconds;
};

// Coupled runs for each epsilon against the single limit-solver run, identical
// grid/dt/snapshot schedule; sweep members run on a bounded worker pool.
SweepResult epsilon_sweep(const Field& u0, const ModelParams& p_base, const StepperConfig& cfg,
                          double T, const std::vector<double>& epsilon_list, int workers = 0);

// One step of the chemorepulsion system (velocity -psi_x from the Neumann solve
// of -eps psi_xx + psi = u); shares the advection/diffusion machinery.
SimState step_chemorepulsion(const SimState& state, const ModelParams& p,
                             const StepperConfig& cfg);

// Max over snapshots of ||u_rep - u_model||_2 between the chemorepulsion
// discretization and the coupled monostable run. Requires r = 0.
double chemorepulsion_crosscheck(const Field& u0, double delta, double epsilon,
                                 const StepperConfig& cfg, double T, int compare_every = 100);

struct SteadyStateStudy {
    std::vector<double> times;
    std::vector<double> distance;  // ||u(t) - limit||_2
    double limit_value = 0.0;      // the constant limit (mean for r=0; 0 or 1 for r>0)
    std::string classification;    // "mean", "0", "1" or "undecided"
    double final_distance = 0.0;
    bool converged = false;
};

SteadyStateStudy steady_state_study(const Field& u0, const ModelParams& p,
                                    const StepperConfig& cfg, double t_max);

}  // namespace cluster1d

// IMEX time stepping for the coupled density/velocity system in conservative form.
#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "cluster1d/diagnostics.hpp"
#include "cluster1d/grid.hpp"
#include "cluster1d/model.hpp"

namespace cluster1d {

// Numerical abort (CFL violation, positivity loss); mapped to exit code 3 by the CLI.
struct SolverAbort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StepperConfig {
    double dt = 1e-4;
    double theta = 1.0;       // implicitness of diffusion; 0.5 = Crank-Nicolson, 1 = backward Euler
    double cfl_safety = 0.9;  // advective dt limiter, in (0,1]
    bool minmod_faces = false;  // second-order limited face reconstruction (default upwind)
    bool steady_state_stop = false;
    double steady_state_tol = 1e-10;  // stop when ||u(t+1)-u(t)||_2 <= tol

    void validate() const {
        if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
        if (!(theta >= 0.5 && theta <= 1.0)) throw std::invalid_argument("theta must lie in [0.5, 1]");
        if (!(cfl_safety > 0.0 && cfl_safety <= 1.0))
            throw std::invalid_argument("cfl_safety must lie in (0, 1]");
    }
};

// One IMEX step: explicit upwind advection with the velocity from the elliptic
// solve, explicit reaction, theta-implicit diffusion with Neumann ghost reflection.
SimState step(const SimState& state, const ModelParams& p, const StepperConfig& cfg);

// Same IMEX update with caller-supplied face velocities (n-1 of them); used by
// the chemorepulsion discretization which derives its velocity differently.
SimState step_with_face_velocities(const SimState& state, const ModelParams& p,
                                   const StepperConfig& cfg,
                                   const std::vector<double>& face_vel);

struct RunResult {
    std::vector<SimState> snapshots;
    std::vector<DiagRecord> records;
    bool steady_state_reached = false;
    double final_time = 0.0;
};

using StepFn = std::function<SimState(const SimState&, const ModelParams&, const StepperConfig&)>;

RunResult run(const Field& u0, const ModelParams& p, const StepperConfig& cfg, double t_final,
              int sample_every, const std::vector<double>& snapshot_times = {},
              const StepFn& stepfn = {});

}  // namespace cluster1d

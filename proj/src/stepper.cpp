#include "cluster1d/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cluster1d/elliptic.hpp"

namespace cluster1d {

namespace {

double minmod(double a, double b) {
    if (a * b <= 0.0) return 0.0;
    return std::abs(a) < std::abs(b) ? a : b;
}

// Upwind (optionally minmod-reconstructed) face value of u given the face velocity sign.
double face_value(const std::vector<double>& u, int i, double vel, bool limited) {
    const int n = static_cast<int>(u.size());
    if (vel > 0.0) {
        double v = u[i];
        if (limited && i > 0) v += 0.5 * minmod(u[i] - u[i - 1], u[i + 1] - u[i]);
        return v;
    }
    double v = u[i + 1];
    if (limited && i + 2 < n) v -= 0.5 * minmod(u[i + 1] - u[i], u[i + 2] - u[i + 1]);
    return v;
}

}  // namespace

SimState step_with_face_velocities(const SimState& state, const ModelParams& p,
                                   const StepperConfig& cfg,
                                   const std::vector<double>& face_vel) {
    cfg.validate();
    validate_params(p);
    const Field& u = state.u;
    const int n = u.size();
    const double h = u.grid->h;
    const double dt = cfg.dt;

    // Advective fluxes at faces; zero flux at the domain ends.
    std::vector<double> flux(n - 1);
    double max_face_vel = 0.0;
    for (int i = 0; i < n - 1; ++i) {
        const double vel = face_vel[i];
        max_face_vel = std::max(max_face_vel, std::abs(vel));
        flux[i] = face_value(u.values, i, vel, cfg.minmod_faces) * vel;
    }

    if (max_face_vel > 0.0) {
        const double dt_cfl = cfg.cfl_safety * h / max_face_vel;
        if (dt > dt_cfl)
            throw SolverAbort("CFL violation at t=" + std::to_string(state.t) + ": dt=" +
                              std::to_string(dt) + " exceeds bound " + std::to_string(dt_cfl) +
                              " (max |phi|=" + std::to_string(max_face_vel) +
                              "); lower dt or raise cfl_safety headroom");
    }

    // Explicit part: advection, reaction, (1-theta) diffusion.
    const double kappa = p.delta * dt / (h * h);
    std::vector<double> rhs(n);
    for (int i = 0; i < n; ++i) {
        double div;
        if (i == 0)
            div = flux[0] / (0.5 * h);
        else if (i == n - 1)
            div = -flux[n - 2] / (0.5 * h);
        else
            div = (flux[i] - flux[i - 1]) / h;

        double lap;
        if (i == 0)
            lap = 2.0 * (u.values[1] - u.values[0]);
        else if (i == n - 1)
            lap = 2.0 * (u.values[n - 2] - u.values[n - 1]);
        else
            lap = u.values[i - 1] - 2.0 * u.values[i] + u.values[i + 1];

        rhs[i] = u.values[i] - dt * div + dt * p.r * u.values[i] * p.law.E(u.values[i]) +
                 (1.0 - cfg.theta) * kappa * lap;
    }

    // Implicit diffusion: (I - theta dt delta A) u_new = rhs, Neumann ghost reflection.
    const double tk = cfg.theta * kappa;
    std::vector<double> lower(n, -tk), diag(n, 1.0 + 2.0 * tk), upper(n, -tk);
    upper[0] = -2.0 * tk;
    lower[n - 1] = -2.0 * tk;
    solve_tridiagonal(lower, diag, upper, rhs);

    SimState next(state.t + dt, Field(*u.grid));
    next.u.values = std::move(rhs);

    if (!next.u.all_finite())
        throw SolverAbort("non-finite state at t=" + std::to_string(next.t));
    const double mn = next.u.min();
    if (mn < -kPositivityTol)
        throw SolverAbort("positivity violation at t=" + std::to_string(next.t) +
                          ": min(u)=" + std::to_string(mn));
    return next;
}

SimState step(const SimState& state, const ModelParams& p, const StepperConfig& cfg) {
    const Field phi = compute_velocity(state.u, p);
    const int n = state.u.size();
    std::vector<double> face_vel(n - 1);
    for (int i = 0; i < n - 1; ++i) face_vel[i] = 0.5 * (phi.values[i] + phi.values[i + 1]);
    return step_with_face_velocities(state, p, cfg, face_vel);
}

RunResult run(const Field& u0, const ModelParams& p, const StepperConfig& cfg, double t_final,
              int sample_every, const std::vector<double>& snapshot_times, const StepFn& stepfn) {
    cfg.validate();
    validate_params(p);
    if (!(t_final > 0.0)) throw std::invalid_argument("t_final must be positive");
    if (sample_every < 1) throw std::invalid_argument("sample_every must be >= 1");
    if (u0.min() < -kPositivityTol) throw std::invalid_argument("u0 must be nonnegative");

    const StepFn advance = stepfn ? stepfn : StepFn(&step);
    const long nsteps = std::lround(t_final / cfg.dt);
    const long unit_steps = std::max<long>(1, std::lround(1.0 / cfg.dt));

    RunResult out;
    SimState state(0.0, u0);
    out.records.push_back(compute_record(state, p));
    out.snapshots.push_back(state);

    std::size_t next_snap = 0;
    std::vector<double> snaps = snapshot_times;
    std::sort(snaps.begin(), snaps.end());

    Field u_prev_unit = u0;
    for (long k = 1; k <= nsteps; ++k) {
        try {
            state = advance(state, p, cfg);
        } catch (const SolverAbort& e) {
            throw SolverAbort(std::string(e.what()) + " (run aborted at step " + std::to_string(k) +
                              ")");
        }
        if (k % sample_every == 0 || k == nsteps) out.records.push_back(compute_record(state, p));
        while (next_snap < snaps.size() && state.t >= snaps[next_snap] - 0.5 * cfg.dt) {
            out.snapshots.push_back(state);
            ++next_snap;
        }
        if (cfg.steady_state_stop && k % unit_steps == 0) {
            if (l2_norm_diff(state.u, u_prev_unit) <= cfg.steady_state_tol) {
                out.steady_state_reached = true;
                break;
            }
            u_prev_unit = state.u;
        }
    }
    if (out.snapshots.back().t != state.t) out.snapshots.push_back(state);
    if (out.records.back().t != state.t) out.records.push_back(compute_record(state, p));
    out.final_time = state.t;
    return out;
}

}  // namespace cluster1d

#include "cluster1d/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

#include "cluster1d/elliptic.hpp"

namespace cluster1d {

SimState step_limit(const SimState& state, const ModelParams& p, const StepperConfig& cfg) {
    cfg.validate();
    validate_params(p);
    if (!p.law.is_monostable())
        throw std::invalid_argument("step_limit requires the monostable law");
    const Field& u = state.u;
    const int n = u.size();
    const double h = u.grid->h;
    const double dt = cfg.dt;
    const double ih2 = 1.0 / (h * h);

    // Lagged face mobilities delta + u_{i+1/2}.
    std::vector<double> mob(n - 1);
    for (int i = 0; i < n - 1; ++i) mob[i] = p.delta + 0.5 * (u.values[i] + u.values[i + 1]);

    auto apply_B = [&](const std::vector<double>& v, int i) {
        if (i == 0) return 2.0 * mob[0] * (v[1] - v[0]) * ih2;
        if (i == n - 1) return 2.0 * mob[n - 2] * (v[n - 2] - v[n - 1]) * ih2;
        return (mob[i] * (v[i + 1] - v[i]) - mob[i - 1] * (v[i] - v[i - 1])) * ih2;
    };

    std::vector<double> rhs(n);
    for (int i = 0; i < n; ++i)
        rhs[i] = u.values[i] + (1.0 - cfg.theta) * dt * apply_B(u.values, i) +
                 dt * p.r * u.values[i] * (1.0 - u.values[i]);

    const double tk = cfg.theta * dt * ih2;
    std::vector<double> lower(n), diag(n), upper(n);
    for (int i = 1; i < n - 1; ++i) {
        lower[i] = -tk * mob[i - 1];
        upper[i] = -tk * mob[i];
        diag[i] = 1.0 + tk * (mob[i - 1] + mob[i]);
    }
    diag[0] = 1.0 + 2.0 * tk * mob[0];
    upper[0] = -2.0 * tk * mob[0];
    diag[n - 1] = 1.0 + 2.0 * tk * mob[n - 2];
    lower[n - 1] = -2.0 * tk * mob[n - 2];
    solve_tridiagonal(lower, diag, upper, rhs);

    SimState next(state.t + dt, Field(*u.grid));
    next.u.values = std::move(rhs);
    if (!next.u.all_finite()) throw SolverAbort("limit solver: non-finite state at t=" +
                                                std::to_string(next.t));
    if (next.u.min() < -kPositivityTol)
        throw SolverAbort("limit solver: positivity violation at t=" + std::to_string(next.t) +
                          ": min(u)=" + std::to_string(next.u.min()));
    return next;
}

RunResult run_limit(const Field& u0, const ModelParams& p, const StepperConfig& cfg,
                    double t_final, int sample_every, const std::vector<double>& snapshot_times) {
    return run(u0, p, cfg, t_final, sample_every, snapshot_times, &step_limit);
}

SimState step_chemorepulsion(const SimState& state, const ModelParams& p,
                             const StepperConfig& cfg) {
    if (p.r != 0.0) throw std::invalid_argument("chemorepulsion system requires r = 0");
    const Field psi = solve_elliptic_neumann(p.epsilon, state.u);
    const int n = state.u.size();
    const double h = state.u.grid->h;
    std::vector<double> face_vel(n - 1);
    for (int i = 0; i < n - 1; ++i) face_vel[i] = -(psi.values[i + 1] - psi.values[i]) / h;
    return step_with_face_velocities(state, p, cfg, face_vel);
}

namespace {

// Steps a trajectory collecting the density every compare_every steps
// (including t = 0 and the final step).
std::vector<Field> sampled_trajectory(const Field& u0, const ModelParams& p,
                                      const StepperConfig& cfg, long nsteps, int compare_every,
                                      const StepFn& advance) {
    std::vector<Field> out;
    SimState state(0.0, u0);
    out.push_back(state.u);
    for (long k = 1; k <= nsteps; ++k) {
        state = advance(state, p, cfg);
        if (k % compare_every == 0 || k == nsteps) out.push_back(state.u);
    }
    return out;
}

double time_integral_l2sq_diff(const std::vector<Field>& a, const std::vector<Field>& b,
                               double dt_sample) {
    const std::size_t m = std::min(a.size(), b.size());
    double acc = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        const double d = l2_norm_diff(a[k], b[k]);
        const double w = (k == 0 || k == m - 1) ? 0.5 : 1.0;
        acc += w * d * d;
    }
    return acc * dt_sample;
}

}  // namespace

SweepResult epsilon_sweep(const Field& u0, const ModelParams& p_base, const StepperConfig& cfg,
                          double T, const std::vector<double>& epsilon_list, int workers) {
    if (!p_base.law.is_monostable())
        throw std::invalid_argument("epsilon_sweep requires the monostable law");
    for (std::size_t i = 1; i < epsilon_list.size(); ++i)
        if (!(epsilon_list[i] < epsilon_list[i - 1]))
            throw std::invalid_argument("epsilon_list must be strictly decreasing");
    for (double e : epsilon_list)
        if (!(e > 0.0)) throw std::invalid_argument("epsilon values must be positive");

    const long nsteps = std::lround(T / cfg.dt);
    const int compare_every = std::max(1, static_cast<int>(nsteps / 200));
    const double dt_sample = cfg.dt * compare_every;

    const std::vector<Field> limit_traj =
        sampled_trajectory(u0, p_base, cfg, nsteps, compare_every, &step_limit);

    SweepResult result;
    result.epsilon_list = epsilon_list;
    result.errors.resize(epsilon_list.size());
    result.runtime_seconds.resize(epsilon_list.size());

    auto one = [&](std::size_t idx) {
        const auto start = std::chrono::steady_clock::now();
        ModelParams p = p_base;
        p.epsilon = epsilon_list[idx];
        try {
            const std::vector<Field> traj =
                sampled_trajectory(u0, p, cfg, nsteps, compare_every, &step);
            result.errors[idx] = time_integral_l2sq_diff(traj, limit_traj, dt_sample);
        } catch (const SolverAbort& e) {
            throw SolverAbort("sweep member epsilon=" + std::to_string(epsilon_list[idx]) + ": " +
                              e.what());
        }
        result.runtime_seconds[idx] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, workers);
    for (std::size_t base = 0; base < epsilon_list.size(); base += workers) {
        std::vector<std::future<void>> batch;
        const std::size_t end = std::min(epsilon_list.size(), base + workers);
        for (std::size_t idx = base; idx < end; ++idx)
            batch.push_back(std::async(std::launch::async, one, idx));
        for (auto& f : batch) f.get();
    }
    return result;
}

double chemorepulsion_crosscheck(const Field& u0, double delta, double epsilon,
                                 const StepperConfig& cfg, double T, int compare_every) {
    ModelParams p;
    p.delta = delta;
    p.epsilon = epsilon;
    p.r = 0.0;
    p.law = ReproductionLaw::monostable();

    const long nsteps = std::lround(T / cfg.dt);
    const auto model = sampled_trajectory(u0, p, cfg, nsteps, compare_every, &step);
    const auto rep = sampled_trajectory(u0, p, cfg, nsteps, compare_every, &step_chemorepulsion);

    double dev = 0.0;
    for (std::size_t k = 0; k < model.size(); ++k)
        dev = std::max(dev, l2_norm_diff(model[k], rep[k]));
    return dev;
}

SteadyStateStudy steady_state_study(const Field& u0, const ModelParams& p,
                                    const StepperConfig& cfg, double t_max) {
    if (!p.law.is_monostable())
        throw std::invalid_argument("steady_state_study requires the monostable law");
    StepperConfig c = cfg;
    c.steady_state_stop = true;
    const int sample_every = std::max(1, static_cast<int>(std::lround(0.1 / c.dt)));
    const RunResult rr = run(u0, p, c, t_max, sample_every);

    SteadyStateStudy study;
    study.converged = rr.steady_state_reached;

    double limit;
    if (p.r == 0.0) {
        limit = mean_value(u0);
        study.classification = "mean";
    } else {
        // Theorem dichotomy: nearest of {0, 1} by the final state.
        const DiagRecord& last = rr.records.back();
        const double dist0 = std::sqrt(last.l2sq);
        const double dist1 = std::sqrt(std::max(0.0, last.l2sq - 4.0 * last.mass + 2.0));
        limit = dist0 <= dist1 ? 0.0 : 1.0;
        study.classification = dist0 <= dist1 ? "0" : "1";
        if (std::min(dist0, dist1) >= 0.1) study.classification = "undecided";
    }
    study.limit_value = limit;

    for (const DiagRecord& rec : rr.records) {
        // ||u - c||_2^2 = ||u||_2^2 - 4 c <u> + 2 c^2
        const double d2 = rec.l2sq - 4.0 * limit * rec.mass + 2.0 * limit * limit;
        study.times.push_back(rec.t);
        study.distance.push_back(std::sqrt(std::max(0.0, d2)));
    }
    study.final_distance = study.distance.back();
    return study;
}

}  // namespace cluster1d

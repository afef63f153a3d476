#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cluster1d/elliptic.hpp"
#include "cluster1d/frozen.hpp"
#include "cluster1d/stepper.hpp"

using namespace cluster1d;
using std::numbers::pi;

namespace {

// Closed-form logistic solution u' = u(1-u).
double logistic(double u0, double t) {
    return u0 * std::exp(t) / (1.0 + u0 * (std::exp(t) - 1.0));
}

SimState integrate(Field u0, const ModelParams& p, const StepperConfig& cfg, double t_final) {
    SimState state(0.0, std::move(u0));
    const long nsteps = std::lround(t_final / cfg.dt);
    for (long k = 0; k < nsteps; ++k) state = step(state, p, cfg);
    return state;
}

}  // namespace

TEST_CASE("constants are equilibria when r=0") {
    const Grid g(101);
    ModelParams p;
    StepperConfig cfg;
    cfg.dt = 1e-3;
    const SimState end = integrate(Field(g, 0.5), p, cfg, 0.1);
    for (double v : end.u.values) CHECK(v == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("constant monostable run follows the logistic ODE to t=ln 3") {
    const Grid g(101);
    ModelParams p;
    p.r = 1.0;
    StepperConfig cfg;
    cfg.dt = 1e-4;
    const SimState end = integrate(Field(g, 0.5), p, cfg, std::log(3.0));
    // exact: 0.5 e^t / (1 + 0.5(e^t - 1)) = 0.75 at t = ln 3
    for (double v : end.u.values) CHECK(std::abs(v - 0.75) <= 1e-3);
}

TEST_CASE("bistable root u=a is stationary") {
    const Grid g(101);
    ModelParams p;
    p.r = 1.0;
    p.law = ReproductionLaw::bistable(0.3);
    StepperConfig cfg;
    cfg.dt = 1e-3;
    const SimState end = integrate(Field(g, 0.3), p, cfg, 0.5);
    for (double v : end.u.values) CHECK(v == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("discrete mass law: r=0 conserves <u> to round-off") {
    const Grid g(201);
    ModelParams p;
    p.delta = 0.1;
    p.epsilon = 0.05;
    StepperConfig cfg;
    cfg.dt = 1e-4;
    const Field u0 =
        Field::from_function(g, [](double x) { return 1.0 + 0.3 * std::cos(pi * x); });
    const double m0 = mean_value(u0);
    SimState state(0.0, u0);
    for (int k = 0; k < 500; ++k) {
        state = step(state, p, cfg);
        CHECK(std::abs(mean_value(state.u) - m0) <= 1e-12 * (k + 1));
    }
}

TEST_CASE("positivity holds over a randomized battery under the CFL bound") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> amp(0.0, 0.5);
    std::uniform_real_distribution<double> mean(0.2, 1.5);
    const Grid g(101);
    StepperConfig cfg;
    cfg.dt = 5e-4;
    for (int trial = 0; trial < 20; ++trial) {
        ModelParams p;
        p.delta = 0.1;
        p.epsilon = 0.05;
        p.r = (trial % 2 == 0) ? 0.0 : 1.0;
        p.law = (trial % 4 < 2) ? ReproductionLaw::monostable() : ReproductionLaw::bistable(0.3);
        const double m = mean(rng);
        const double A = std::min(amp(rng), m);  // keep u0 >= 0
        const int mode = 1 + trial % 3;
        const Field u0 = Field::from_function(
            g, [&](double x) { return m + A * std::cos(mode * pi * x); });
        SimState state(0.0, u0);
        for (int k = 0; k < 200; ++k) state = step(state, p, cfg);
        CHECK(state.u.min() >= -kPositivityTol);
    }
}

TEST_CASE("CFL violation aborts with a diagnostic naming CFL") {
    const Grid g(101);
    ModelParams p;
    p.delta = 0.1;
    p.epsilon = 0.001;
    const Field u0 =
        Field::from_function(g, [](double x) { return 1.0 + 0.9 * std::cos(pi * x); });
    StepperConfig cfg;
    cfg.dt = 1.0;  // grossly beyond h / max|phi|
    try {
        step(SimState(0.0, u0), p, cfg);
        FAIL("expected SolverAbort");
    } catch (const SolverAbort& e) {
        CHECK(std::string(e.what()).find("CFL") != std::string::npos);
    }
}

TEST_CASE("temporal convergence order in dt (pure diffusion via zero-drift custom law)") {
    // E constant: velocity and reaction vanish, leaving the theta diffusion scheme.
    const Grid g(101);
    ModelParams p;
    p.delta = 0.1;
    p.epsilon = 0.05;
    p.law = ReproductionLaw::custom({[](double) { return 1.0; }, [](double) { return 0.0; },
                                     [](double) { return 0.0; }});
    const Field u0 =
        Field::from_function(g, [](double x) { return 1.0 + 0.5 * std::cos(pi * x); });

    auto solve = [&](double dt, double theta) {
        StepperConfig cfg;
        cfg.dt = dt;
        cfg.theta = theta;
        return integrate(u0, p, cfg, 1.0);
    };

    for (double theta : {1.0, 0.5}) {
        StepperConfig fine;
        const Field ref = solve(1e-4, theta).u;
        const double e1 = l2_norm_diff(solve(0.02, theta).u, ref);
        const double e2 = l2_norm_diff(solve(0.01, theta).u, ref);
        const double expected = (theta == 1.0) ? 2.0 : 4.0;
        CHECK(e1 / e2 > expected * 0.7);
        CHECK(e1 / e2 < expected * 1.3);
    }
}

TEST_CASE("run: zero initial data stays zero") {
    const Grid g(101);
    ModelParams p;
    p.r = 1.0;
    StepperConfig cfg;
    cfg.dt = 1e-3;
    const RunResult rr = run(Field(g, 0.0), p, cfg, 1.0, 100);
    for (double v : rr.snapshots.back().u.values) CHECK(v == 0.0);
}

TEST_CASE("run: monostable r=0 converges to the mean of u0") {
    const Grid g(201);
    ModelParams p;
    p.delta = 0.1;
    p.epsilon = 0.01;
    StepperConfig cfg;
    cfg.dt = 2e-4;
    const Field u0 =
        Field::from_function(g, [](double x) { return 1.0 + 0.3 * std::cos(pi * x); });
    const RunResult rr = run(u0, p, cfg, 50.0, 1000);
    const Field ones(g, 1.0);
    CHECK(l2_norm_diff(rr.snapshots.back().u, ones) <= 1e-3);
}

TEST_CASE("run: monostable r=1 positive data approaches 1") {
    const Grid g(201);
    ModelParams p;
    p.delta = 0.1;
    p.epsilon = 0.01;
    p.r = 1.0;
    StepperConfig cfg;
    cfg.dt = 2e-4;
    const Field u0 =
        Field::from_function(g, [](double x) { return 0.6 + 0.2 * std::cos(pi * x); });
    const RunResult rr = run(u0, p, cfg, 50.0, 1000);
    const Field ones(g, 1.0);
    CHECK(l2_norm_diff(rr.snapshots.back().u, ones) <= 1e-3);
}

TEST_CASE("bistable runs stay bounded and satisfy the discrete cancellation identity") {
    const Grid g(201);
    ModelParams p;
    p.delta = 0.1;
    p.epsilon = 0.01;
    p.r = 1.0;
    const double a = 0.3;
    p.law = ReproductionLaw::bistable(a);
    StepperConfig cfg;
    cfg.dt = 1e-4;
    const Field u0 =
        Field::from_function(g, [](double x) { return 0.6 + 0.2 * std::cos(pi * x); });

    // d/dt ||u||_2^2 + 2 delta ||u_x||^2 + 2(eps ||phi_x||^2 + ||phi||^2)
    //   - 2 r int u^2 E(u) - 2 (a+1) int phi u_x  =  o(1)
    SimState prev(0.0, u0);
    SimState mid = step(prev, p, cfg);
    double max_linf = u0.max();
    double worst_residual = 0.0;
    for (int k = 2; k <= 2000; ++k) {
        const SimState next = step(mid, p, cfg);
        max_linf = std::max(max_linf, next.u.max());
        if (k % 200 == 0) {
            const double dl2 = (l2_norm_sq(next.u) - l2_norm_sq(prev.u)) / (2.0 * cfg.dt);
            const Field phi = compute_velocity(mid.u, p);
            Field phi_ux(g), u2E(g);
            const Field ux = derivative(mid.u);
            for (int i = 0; i < g.n; ++i) {
                phi_ux.values[i] = phi.values[i] * ux.values[i];
                const double u = mid.u.values[i];
                u2E.values[i] = u * u * p.law.E(u);
            }
            const double residual =
                dl2 + 2.0 * p.delta * l2_norm_sq(ux) +
                2.0 * (p.epsilon * l2_norm_sq(derivative(phi)) + l2_norm_sq(phi)) -
                2.0 * p.r * trapz(u2E) - 2.0 * (a + 1.0) * trapz(phi_ux);
            worst_residual = std::max(worst_residual, std::abs(residual));
        }
        prev = mid;
        mid = next;
    }
    CHECK(max_linf <= 10.0);
    // Upwind faces are first order, so the identity holds to O(dt + h).
    CHECK(worst_residual <= frozen::kCancellationConstant * (cfg.dt + g.h));
}

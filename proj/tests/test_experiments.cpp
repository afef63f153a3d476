#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cluster1d/experiments.hpp"

using namespace cluster1d;
using std::numbers::pi;

TEST_CASE("limit solver: constants, logistic oracle, mass conservation") {
    const Grid g(101);
    ModelParams p;
    p.delta = 0.1;
    StepperConfig cfg;
    cfg.dt = 1e-4;

    SUBCASE("constant with r=0 is unchanged") {
        SimState state(0.0, Field(g, 0.5));
        for (int k = 0; k < 100; ++k) state = step_limit(state, p, cfg);
        for (double v : state.u.values) CHECK(v == doctest::Approx(0.5).epsilon(1e-13));
    }
    SUBCASE("constant with r=1 follows the logistic solution") {
        p.r = 1.0;
        SimState state(0.0, Field(g, 0.5));
        const long nsteps = std::lround(std::log(3.0) / cfg.dt);
        for (long k = 0; k < nsteps; ++k) state = step_limit(state, p, cfg);
        for (double v : state.u.values) CHECK(std::abs(v - 0.75) <= 1e-3);
    }
    SUBCASE("mass conserved to 1e-12 per step when r=0") {
        const Field u0 =
            Field::from_function(g, [](double x) { return 1.0 + 0.3 * std::cos(pi * x); });
        const double m0 = mean_value(u0);
        SimState state(0.0, u0);
        for (int k = 1; k <= 200; ++k) {
            state = step_limit(state, p, cfg);
            CHECK(std::abs(mean_value(state.u) - m0) <= 1e-12 * k);
        }
    }
}

TEST_CASE("epsilon sweep") {
    const Grid g(201);
    ModelParams p;
    p.delta = 0.1;
    StepperConfig cfg;
    cfg.dt = 2e-4;

    SUBCASE("constant data gives zero errors") {
        const SweepResult sweep = epsilon_sweep(Field(g, 0.8), p, cfg, 0.5, {0.1, 0.05});
        for (double e : sweep.errors) CHECK(e <= 1e-20);
    }
    SUBCASE("errors decrease along decreasing epsilon") {
        const Field u0 =
            Field::from_function(g, [](double x) { return 1.0 + 0.3 * std::cos(pi * x); });
        const SweepResult sweep =
            epsilon_sweep(u0, p, cfg, 1.0, {0.1, 0.05, 0.025, 0.0125}, 4);
        for (std::size_t i = 1; i < sweep.errors.size(); ++i)
            CHECK(sweep.errors[i] < sweep.errors[i - 1]);
        for (double e : sweep.errors) {
            CHECK(std::isfinite(e));
            CHECK(e >= 0.0);
        }
    }
    SUBCASE("rejects non-decreasing epsilon lists") {
        CHECK_THROWS_AS(epsilon_sweep(Field(g, 1.0), p, cfg, 0.1, {0.05, 0.1}),
                        std::invalid_argument);
    }
}

TEST_CASE("chemorepulsion equivalence") {
    const Grid g(201);
    StepperConfig cfg;
    cfg.dt = 2e-4;

    SUBCASE("constant data: zero deviation") {
        const double dev = chemorepulsion_crosscheck(Field(g, 0.8), 0.1, 0.05, cfg, 0.5);
        CHECK(dev <= 1e-12);
    }
    SUBCASE("deviation shrinks >= 3x under h, dt refinement") {
        auto deviation = [&](int n, double dt) {
            const Grid grid(n);
            const Field u0 = Field::from_function(
                grid, [](double x) { return 1.0 + 0.3 * std::cos(pi * x); });
            StepperConfig c;
            c.dt = dt;
            return chemorepulsion_crosscheck(u0, 0.1, 0.05, c, 1.0);
        };
        const double coarse = deviation(101, 4e-4);
        const double fine = deviation(201, 1e-4);
        CHECK(coarse / fine >= 3.0);
    }
}

TEST_CASE("steady-state study") {
    const Grid g(201);
    StepperConfig cfg;
    cfg.dt = 2e-4;

    SUBCASE("r=0 converges to the mean, eventually monotone") {
        ModelParams p;
        p.delta = 0.1;
        p.epsilon = 0.01;
        const Field u0 =
            Field::from_function(g, [](double x) { return 1.0 + 0.3 * std::cos(pi * x); });
        const SteadyStateStudy study = steady_state_study(u0, p, cfg, 50.0);
        CHECK(study.classification == "mean");
        CHECK(study.limit_value == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(study.final_distance <= 1e-6);
        // Monotone after t >= 1, down to the convergence tolerance floor.
        double prev = 1e300;
        for (std::size_t k = 0; k < study.times.size(); ++k) {
            if (study.times[k] < 1.0 || study.distance[k] <= 1e-6) continue;
            CHECK(study.distance[k] <= prev * (1.0 + 1e-9));
            prev = study.distance[k];
        }
    }
    SUBCASE("r=1, zero data classifies as 0") {
        ModelParams p;
        p.r = 1.0;
        const SteadyStateStudy study = steady_state_study(Field(g, 0.0), p, cfg, 5.0);
        CHECK(study.classification == "0");
        CHECK(study.final_distance == doctest::Approx(0.0));
    }
    SUBCASE("r=1, positive data classifies as 1") {
        ModelParams p;
        p.delta = 0.1;
        p.epsilon = 0.01;
        p.r = 1.0;
        const Field u0 =
            Field::from_function(g, [](double x) { return 0.6 + 0.2 * std::cos(pi * x); });
        const SteadyStateStudy study = steady_state_study(u0, p, cfg, 50.0);
        CHECK(study.classification == "1");
    }
}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cluster1d/diagnostics.hpp"
#include "cluster1d/frozen.hpp"
#include "cluster1d/stepper.hpp"

using namespace cluster1d;
using std::numbers::pi;

TEST_CASE("records at constant states") {
    const Grid g(201);
    ModelParams p;

    SUBCASE("u = 1: L = 0, D = 0, mass = 1") {
        const DiagRecord rec = compute_record(SimState(0.0, Field(g, 1.0)), p);
        CHECK(rec.liapunov == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(rec.dissipation == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(rec.mass == doctest::Approx(1.0));
        CHECK(rec.l1 == doctest::Approx(2.0));
    }
    SUBCASE("u = 2: L = 2(2 ln 2 - 1)") {
        const DiagRecord rec = compute_record(SimState(0.0, Field(g, 2.0)), p);
        CHECK(rec.liapunov == doctest::Approx(2.0 * (2.0 * std::log(2.0) - 1.0)).epsilon(1e-10));
        CHECK(rec.liapunov == doctest::Approx(0.77258872).epsilon(1e-7));
    }
    SUBCASE("u = 0: L = 2, mass = 0") {
        const DiagRecord rec = compute_record(SimState(0.0, Field(g, 0.0)), p);
        CHECK(rec.liapunov == doctest::Approx(2.0));
        CHECK(rec.mass == 0.0);
    }
    SUBCASE("negative states are rejected") {
        CHECK_THROWS_AS(compute_record(SimState(0.0, Field(g, -1e-6)), p), std::invalid_argument);
    }
}

TEST_CASE("mass = l1/2 for nonnegative states and L >= 0") {
    const Grid g(201);
    ModelParams p;
    const Field u = Field::from_function(g, [](double x) { return 0.8 + 0.5 * std::cos(pi * x); });
    const DiagRecord rec = compute_record(SimState(0.0, u), p);
    CHECK(rec.mass == doctest::Approx(rec.l1 / 2.0).epsilon(1e-12));
    CHECK(rec.liapunov >= 0.0);
}

TEST_CASE("liapunov monotonicity checker") {
    std::vector<DiagRecord> series(4);
    for (int k = 0; k < 4; ++k) {
        series[k].t = k;
        series[k].liapunov = 1.0;
    }
    SUBCASE("constant series is ok") {
        CHECK_FALSE(check_liapunov_monotone(series, 1e-8).has_value());
    }
    SUBCASE("reversed (increasing) series violates at index 1") {
        for (int k = 0; k < 4; ++k) series[k].liapunov = 1.0 + 0.1 * k;
        const auto violation = check_liapunov_monotone(series, 1e-8);
        REQUIRE(violation.has_value());
        CHECK(*violation == 1);
    }
}

TEST_CASE("dissipation budget on constant data") {
    const Grid g(101);
    ModelParams p;
    const DiagRecord rec0 = compute_record(SimState(0.0, Field(g, 1.0)), p);
    std::vector<DiagRecord> series{rec0, rec0};
    series[1].t = 1.0;
    const DissipationBudget budget = check_dissipation_budget(series, rec0);
    CHECK(budget.ok);
    // 1 + ||u0||_2^2 + 2/e + 2 <u0> = 1 + 2 + 2/e + 2
    CHECK(budget.budget == doctest::Approx(5.0 + 2.0 / std::exp(1.0) + 1e-6).epsilon(1e-9));
    CHECK(budget.integral == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("mass law checker") {
    ModelParams p;
    std::vector<DiagRecord> series(3);
    for (int k = 0; k < 3; ++k) series[k].t = k;

    SUBCASE("r=0 constant mass is ok") {
        for (auto& rec : series) rec.mass = 0.8;
        CHECK(check_mass_law(series, p).ok);
        series[2].mass = 0.8 + 1e-9;
        CHECK_FALSE(check_mass_law(series, p).ok);
    }
    SUBCASE("r>0 mass capped by max(1, mass(0))") {
        p.r = 1.0;
        series[0].mass = 2.0;
        series[1].mass = 1.4;
        series[2].mass = 1.05;
        CHECK(check_mass_law(series, p).ok);
        series[1].mass = 2.1;
        CHECK_FALSE(check_mass_law(series, p).ok);
    }
}

TEST_CASE("monostable run: L decays, D >= 0, caps hold") {
    const Grid g(201);
    ModelParams p;
    p.delta = 0.1;
    p.epsilon = 0.01;
    StepperConfig cfg;
    cfg.dt = 2e-4;
    const Field u0 =
        Field::from_function(g, [](double x) { return 1.0 + 0.3 * std::cos(pi * x); });
    const RunResult rr = run(u0, p, cfg, 5.0, 100);

    CHECK_FALSE(check_liapunov_monotone(rr.records, 1e-8).has_value());
    for (const DiagRecord& rec : rr.records) {
        CHECK(rec.dissipation >= -1e-10);
        CHECK(rec.liapunov >= 0.0);
    }
    CHECK(check_dissipation_budget(rr.records, rr.records.front()).ok);
    CHECK(check_mass_law(rr.records, p).ok);
}

TEST_CASE("monostable time-derivative energy is summable with a small tail") {
    const Grid g(201);
    ModelParams p;
    p.delta = 0.1;
    p.epsilon = 0.01;
    StepperConfig cfg;
    cfg.dt = 2e-4;
    const Field u0 =
        Field::from_function(g, [](double x) { return 1.0 + 0.3 * std::cos(pi * x); });

    // sum dt ||(u^{k+1}-u^k)/dt||_2^2 over t <= 50, tail over [40, 50].
    SimState state(0.0, u0);
    double total = 0.0, tail = 0.0;
    const long nsteps = std::lround(50.0 / cfg.dt);
    for (long k = 0; k < nsteps; ++k) {
        const SimState next = step(state, p, cfg);
        Field diff(g);
        for (int i = 0; i < g.n; ++i)
            diff.values[i] = (next.u.values[i] - state.u.values[i]) / cfg.dt;
        const double e = cfg.dt * l2_norm_sq(diff);
        total += e;
        if (state.t >= 40.0) tail += e;
        state = next;
    }
    CHECK(total <= frozen::kDtEnergyCap);
    CHECK(tail <= 0.01 * total);
}

TEST_CASE("diag csv row has the fixed column order") {
    DiagRecord rec;
    rec.t = 1.5;
    rec.mass = 0.25;
    const std::string row = diag_csv_row(rec);
    CHECK(row.substr(0, 8) == "1.5,0.25");
    CHECK(std::string(kDiagCsvHeader) ==
          "t,mass,l1,l2sq,liapunov,dissipation,grad_sqrt_sq,phi_l2sq,phi_h1sq,min_u,max_u,"
          "grad_u_l2sq");
}

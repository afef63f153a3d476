#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cluster1d/config.hpp"
#include "cluster1d/elliptic.hpp"
#include "cluster1d/io.hpp"

using namespace cluster1d;

namespace {

const char* kValidConfig =
    "case = monostable\n"
    "delta = 0.1\n"
    "epsilon = 0.01\n"
    "r = 0\n"
    "n = 401\n"
    "dt = 1e-4\n"
    "t_final = 50\n"
    "ic = cosine:1.0,0.3,1\n";

}  // namespace

TEST_CASE("a valid config parses") {
    const RunConfig cfg = parse_config(kValidConfig);
    CHECK(cfg.run_case == RunCase::Monostable);
    CHECK(cfg.delta == 0.1);
    CHECK(cfg.n == 401);
    CHECK(cfg.dt == 1e-4);
    CHECK(cfg.t_final == 50.0);
    CHECK(cfg.ic == "cosine:1.0,0.3,1");
}

TEST_CASE("config errors name the offender") {
    SUBCASE("negative delta") {
        CHECK_THROWS_WITH_AS(
            parse_config("case = monostable\nic = constant:1\ndelta = -1\n"),
            "delta must be positive", ConfigError);
    }
    SUBCASE("bistable without a") {
        CHECK_THROWS_WITH_AS(parse_config("case = bistable\nic = constant:1\n"),
                             "a required for bistable", ConfigError);
    }
    SUBCASE("unknown key is a hard error with its line") {
        try {
            parse_config("case = monostable\nic = constant:1\ndeltaa = 0.1\n");
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
            CHECK(std::string(e.what()).find("deltaa") != std::string::npos);
        }
    }
    SUBCASE("missing required key is reported by name") {
        CHECK_THROWS_WITH_AS(parse_config("case = monostable\n"), "missing required key 'ic'",
                             ConfigError);
    }
    SUBCASE("comments and blank lines are fine") {
        CHECK_NOTHROW(parse_config("# comment\n\ncase = monostable # trailing\nic = constant:1\n"));
    }
}

TEST_CASE("overrides apply after the file") {
    RunConfig cfg = parse_config(kValidConfig);
    apply_override(cfg, "dt=2e-4");
    CHECK(cfg.dt == 2e-4);
    CHECK_THROWS_AS(apply_override(cfg, "nonsense=1"), ConfigError);
    CHECK_THROWS_AS(apply_override(cfg, "dt"), ConfigError);
}

TEST_CASE("initial condition grammar") {
    const Grid g(101);
    RunConfig cfg = parse_config(kValidConfig);

    SUBCASE("constant") {
        cfg.ic = "constant:0.4";
        const Field u = build_initial_condition(g, cfg);
        for (double v : u.values) CHECK(v == 0.4);
    }
    SUBCASE("cosine matches mean + amp cos(mode pi x)") {
        cfg.ic = "cosine:1.0,0.3,2";
        const Field u = build_initial_condition(g, cfg);
        for (int i = 0; i < g.n; ++i)
            CHECK(u.values[i] ==
                  doctest::Approx(1.0 + 0.3 * std::cos(2.0 * M_PI * g.x[i])).epsilon(1e-12));
    }
    SUBCASE("random is seeded and deterministic") {
        cfg.ic = "random:1.0,0.2";
        cfg.seed = 12345;
        const Field u1 = build_initial_condition(g, cfg);
        const Field u2 = build_initial_condition(g, cfg);
        CHECK(max_norm_diff(u1, u2) == 0.0);
        cfg.seed = 54321;
        const Field u3 = build_initial_condition(g, cfg);
        CHECK(max_norm_diff(u1, u3) > 0.0);
    }
    SUBCASE("bad specs throw") {
        cfg.ic = "wedge:1.0";
        CHECK_THROWS_AS(build_initial_condition(g, cfg), ConfigError);
        cfg.ic = "cosine:1.0";
        CHECK_THROWS_AS(build_initial_condition(g, cfg), ConfigError);
    }
}

TEST_CASE("snapshot json round trip at 17 significant digits") {
    const Grid g(33);
    const Field u = Field::from_function(g, [](double x) { return 1.0 / 3.0 + x / 7.0; });
    ModelParams p;
    const Field phi = compute_velocity(u, p);
    const std::string path = "test_snapshot_roundtrip.json";
    write_snapshot_json(path, SimState(0.125, u), phi);

    std::ifstream in(path);
    const nlohmann::json j = nlohmann::json::parse(in);
    CHECK(j["t"].get<double>() == 0.125);
    REQUIRE(j["u"].size() == static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) {
        CHECK(j["u"][i].get<double>() == u.values[i]);
        CHECK(j["x"][i].get<double>() == g.x[i]);
        CHECK(j["phi"][i].get<double>() == phi.values[i]);
    }
    std::remove(path.c_str());
}

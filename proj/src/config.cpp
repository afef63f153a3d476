#include "cluster1d/config.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "cluster1d/mild.hpp"

namespace cluster1d {

std::string to_string(RunCase c) {
    switch (c) {
        case RunCase::Bistable: return "bistable";
        case RunCase::Monostable: return "monostable";
        case RunCase::Limit: return "limit";
        case RunCase::ChemorepulsionCheck: return "chemorepulsion-check";
        case RunCase::EpsilonSweep: return "epsilon-sweep";
        case RunCase::SteadyState: return "steady-state";
        case RunCase::PicardCheck: return "picard-check";
    }
    return "?";
}

ModelParams RunConfig::model_params() const {
    ModelParams p;
    p.delta = delta;
    p.epsilon = epsilon;
    p.r = r;
    p.law = (run_case == RunCase::Bistable) ? ReproductionLaw::bistable(a)
                                            : ReproductionLaw::monostable();
    return p;
}

StepperConfig RunConfig::stepper_config() const {
    StepperConfig c;
    c.dt = dt;
    c.theta = theta;
    c.cfl_safety = cfl_safety;
    c.minmod_faces = minmod;
    c.steady_state_stop = steady_state_stop;
    return c;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, const std::string& ctx) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (...) {
        throw ConfigError(ctx + ": not a number: '" + v + "'");
    }
}

long parse_int(const std::string& v, const std::string& ctx) {
    try {
        std::size_t pos = 0;
        const long d = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (...) {
        throw ConfigError(ctx + ": not an integer: '" + v + "'");
    }
}

std::vector<double> parse_list(const std::string& v, const std::string& ctx) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(trim(item), ctx));
    return out;
}

RunCase parse_case(const std::string& v, const std::string& ctx) {
    for (RunCase c : {RunCase::Bistable, RunCase::Monostable, RunCase::Limit,
                      RunCase::ChemorepulsionCheck, RunCase::EpsilonSweep, RunCase::SteadyState,
                      RunCase::PicardCheck})
        if (to_string(c) == v) return c;
    throw ConfigError(ctx + ": unknown case '" + v + "'");
}

void set_key(RunConfig& cfg, const std::string& key, const std::string& value,
             const std::string& ctx, std::set<std::string>& seen) {
    seen.insert(key);
    if (key == "case") cfg.run_case = parse_case(value, ctx);
    else if (key == "delta") cfg.delta = parse_double(value, ctx);
    else if (key == "epsilon") cfg.epsilon = parse_double(value, ctx);
    else if (key == "r") cfg.r = parse_double(value, ctx);
    else if (key == "a") { cfg.a = parse_double(value, ctx); cfg.has_a = true; }
    else if (key == "n") cfg.n = static_cast<int>(parse_int(value, ctx));
    else if (key == "dt") cfg.dt = parse_double(value, ctx);
    else if (key == "theta") cfg.theta = parse_double(value, ctx);
    else if (key == "cfl_safety") cfg.cfl_safety = parse_double(value, ctx);
    else if (key == "minmod") cfg.minmod = parse_int(value, ctx) != 0;
    else if (key == "t_final") cfg.t_final = parse_double(value, ctx);
    else if (key == "sample_every") cfg.sample_every = static_cast<int>(parse_int(value, ctx));
    else if (key == "snapshot_times") cfg.snapshot_times = parse_list(value, ctx);
    else if (key == "steady_state_stop") cfg.steady_state_stop = parse_int(value, ctx) != 0;
    else if (key == "ic") cfg.ic = value;
    else if (key == "format") {
        if (value != "csv" && value != "json") throw ConfigError(ctx + ": format must be csv or json");
        cfg.format = value;
    }
    else if (key == "seed") cfg.seed = static_cast<unsigned long>(parse_int(value, ctx));
    else if (key == "epsilon_list") cfg.epsilon_list = parse_list(value, ctx);
    else if (key == "picard_samples") cfg.picard_samples = static_cast<int>(parse_int(value, ctx));
    else if (key == "picard_tol") cfg.picard_tol = parse_double(value, ctx);
    else if (key == "picard_max_iter") cfg.picard_max_iter = static_cast<int>(parse_int(value, ctx));
    else if (key == "workers") cfg.workers = static_cast<int>(parse_int(value, ctx));
    else throw ConfigError(ctx + ": unknown key '" + key + "'");
}

void validate_config(const RunConfig& cfg, const std::set<std::string>& seen) {
    if (!seen.count("case")) throw ConfigError("missing required key 'case'");
    if (!seen.count("ic")) throw ConfigError("missing required key 'ic'");
    if (cfg.run_case == RunCase::Bistable && !cfg.has_a)
        throw ConfigError("a required for bistable");
    if (cfg.run_case == RunCase::EpsilonSweep && cfg.epsilon_list.empty())
        throw ConfigError("epsilon_list required for epsilon-sweep");
    if (!(cfg.delta > 0.0)) throw ConfigError("delta must be positive");
    if (!(cfg.epsilon > 0.0)) throw ConfigError("epsilon must be positive");
    if (!(cfg.r >= 0.0)) throw ConfigError("r must be nonnegative");
    if (cfg.has_a && !(cfg.a > 0.0 && cfg.a < 1.0)) throw ConfigError("a must lie in (0,1)");
    if (cfg.n < 3) throw ConfigError("n must be at least 3");
    if (!(cfg.dt > 0.0)) throw ConfigError("dt must be positive");
    if (!(cfg.theta >= 0.5 && cfg.theta <= 1.0)) throw ConfigError("theta must lie in [0.5, 1]");
    if (!(cfg.cfl_safety > 0.0 && cfg.cfl_safety <= 1.0))
        throw ConfigError("cfl_safety must lie in (0, 1]");
    if (!(cfg.t_final > 0.0)) throw ConfigError("t_final must be positive");
    if (cfg.sample_every < 1) throw ConfigError("sample_every must be >= 1");
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::set<std::string> seen;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        const std::string ctx = "line " + std::to_string(lineno);
        if (eq == std::string::npos) throw ConfigError(ctx + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(ctx + ": empty key");
        set_key(cfg, key, value, ctx, seen);
    }
    validate_config(cfg, seen);
    return cfg;
}

void apply_override(RunConfig& cfg, const std::string& key_value) {
    const auto eq = key_value.find('=');
    if (eq == std::string::npos)
        throw ConfigError("--set expects key=value, got '" + key_value + "'");
    std::set<std::string> seen{"case", "ic"};
    set_key(cfg, trim(key_value.substr(0, eq)), trim(key_value.substr(eq + 1)),
            "--set " + key_value, seen);
    if (cfg.run_case == RunCase::Bistable && !cfg.has_a) throw ConfigError("a required for bistable");
    validate_config(cfg, seen);
}

Field build_initial_condition(const Grid& grid, const RunConfig& cfg) {
    const auto colon = cfg.ic.find(':');
    if (colon == std::string::npos) throw ConfigError("ic: expected '<kind>:<args>'");
    const std::string kind = cfg.ic.substr(0, colon);
    const std::vector<double> args = parse_list(cfg.ic.substr(colon + 1), "ic");

    if (kind == "constant") {
        if (args.size() != 1) throw ConfigError("ic constant expects 1 argument");
        return Field(grid, args[0]);
    }
    if (kind == "cosine") {
        if (args.size() != 3) throw ConfigError("ic cosine expects mean,amp,mode");
        const double mean = args[0], amp = args[1];
        const int mode = static_cast<int>(args[2]);
        return Field::from_function(
            grid, [&](double x) { return mean + amp * std::cos(mode * std::numbers::pi * x); });
    }
    if (kind == "random") {
        if (args.size() != 2) throw ConfigError("ic random expects mean,amp");
        std::mt19937_64 rng(cfg.seed);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        Field u(grid);
        for (int i = 0; i < grid.n; ++i) u.values[i] = args[0] + args[1] * dist(rng);
        return heat_semigroup_apply(u, 1e-3, 1.0);
    }
    throw ConfigError("ic: unknown kind '" + kind + "'");
}

}  // namespace cluster1d

// Flat key = value run configuration.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cluster1d/model.hpp"
#include "cluster1d/stepper.hpp"

namespace cluster1d {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class RunCase {
    Bistable,
    Monostable,
    Limit,
    ChemorepulsionCheck,
    EpsilonSweep,
    SteadyState,
    PicardCheck,
};

std::string to_string(RunCase c);

struct RunConfig {
    RunCase run_case = RunCase::Monostable;

    double delta = 0.1;
    double epsilon = 0.01;
    double r = 0.0;
    double a = 0.0;  // bistable threshold; required when run_case == Bistable
    bool has_a = false;

    int n = 401;
    double dt = 1e-4;
    double theta = 1.0;
    double cfl_safety = 0.9;
    bool minmod = false;
    double t_final = 1.0;
    int sample_every = 100;
    std::vector<double> snapshot_times;
    bool steady_state_stop = false;

    std::string ic;  // "constant:<c>" | "cosine:<mean>,<amp>,<mode>" | "random:<mean>,<amp>"
    std::string format = "csv";
    unsigned long seed = 0;

    std::vector<double> epsilon_list;  // epsilon-sweep
    int picard_samples = 8;
    double picard_tol = 1e-10;
    int picard_max_iter = 50;
    int workers = 0;

    ModelParams model_params() const;
    StepperConfig stepper_config() const;
};

// Parses the flat text format (one key = value per line, # comments).
// Throws ConfigError naming the offending line or missing key.
RunConfig parse_config(const std::string& text);

// Applies one "key=value" override on top of a parsed config.
void apply_override(RunConfig& cfg, const std::string& key_value);

// Builds the initial condition from the ic spec; random ICs are seeded and
// smoothed by one heat-semigroup application of tau = 1e-3.
Field build_initial_condition(const Grid& grid, const RunConfig& cfg);

}  // namespace cluster1d

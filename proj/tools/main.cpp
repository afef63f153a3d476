// Command-line driver: runs a configured case and writes diag.csv, snapshots
// and sweep outputs. Exit codes: 0 ok, 2 config error, 3 solver abort,
// 4 acceptance check failed (with --check).
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cluster1d/config.hpp"
#include "cluster1d/elliptic.hpp"
#include "cluster1d/experiments.hpp"
#include "cluster1d/frozen.hpp"
#include "cluster1d/io.hpp"
#include "cluster1d/mild.hpp"
#include "cluster1d/stepper.hpp"

namespace fs = std::filesystem;
using namespace cluster1d;

namespace {

struct CliOptions {
    std::string config_path;
    std::string output_dir = ".";
    std::string format;
    bool quiet = false;
    bool check = false;
    int jobs = 0;
    std::vector<std::string> overrides;
};

void log(const CliOptions& opt, const std::string& msg) {
    if (!opt.quiet) std::cerr << msg << "\n";
}

void write_run_outputs(const CliOptions& opt, const RunResult& rr, const ModelParams& p) {
    write_diag_csv((fs::path(opt.output_dir) / "diag.csv").string(), rr.records);
    for (const SimState& snap : rr.snapshots) {
        const Field phi = compute_velocity(snap.u, p);
        write_snapshot_json((fs::path(opt.output_dir) / snapshot_filename(snap.t)).string(), snap,
                            phi);
    }
}

int run_case(const CliOptions& opt, const RunConfig& cfg) {
    const Grid grid(cfg.n);
    const Field u0 = build_initial_condition(grid, cfg);
    const ModelParams p = cfg.model_params();
    const StepperConfig scfg = cfg.stepper_config();

    switch (cfg.run_case) {
        case RunCase::Bistable:
        case RunCase::Monostable: {
            const RunResult rr =
                run(u0, p, scfg, cfg.t_final, cfg.sample_every, cfg.snapshot_times);
            write_run_outputs(opt, rr, p);
            log(opt, "run finished at t=" + format_double(rr.final_time));
            if (opt.check && p.r == 0.0) {
                const MassLawResult mass = check_mass_law(rr.records, p);
                if (!mass.ok) {
                    std::cerr << "check failed: mass deviation " << mass.worst_deviation << "\n";
                    return 4;
                }
            }
            return 0;
        }
        case RunCase::Limit: {
            const RunResult rr =
                run_limit(u0, p, scfg, cfg.t_final, cfg.sample_every, cfg.snapshot_times);
            write_run_outputs(opt, rr, p);
            log(opt, "limit run finished at t=" + format_double(rr.final_time));
            return 0;
        }
        case RunCase::SteadyState: {
            const SteadyStateStudy study = steady_state_study(u0, p, scfg, cfg.t_final);
            std::ofstream out((fs::path(opt.output_dir) / "steady_state.csv").string());
            out << "t,distance\n";
            for (std::size_t k = 0; k < study.times.size(); ++k)
                out << format_double(study.times[k]) << "," << format_double(study.distance[k])
                    << "\n";
            log(opt, "limit=" + study.classification +
                         " final_distance=" + format_double(study.final_distance));
            if (opt.check) {
                if (p.r == 0.0 && study.final_distance > frozen::kSteadyStateR0Tol) {
                    std::cerr << "check failed: final distance " << study.final_distance << "\n";
                    return 4;
                }
                if (p.r > 0.0 && study.classification == "undecided") {
                    std::cerr << "check failed: limit undecided\n";
                    return 4;
                }
            }
            return 0;
        }
        case RunCase::EpsilonSweep: {
            const SweepResult sweep =
                epsilon_sweep(u0, p, scfg, cfg.t_final, cfg.epsilon_list,
                              opt.jobs > 0 ? opt.jobs : cfg.workers);
            bool decreasing = true;
            for (std::size_t i = 1; i < sweep.errors.size(); ++i)
                decreasing = decreasing && sweep.errors[i] < sweep.errors[i - 1];
            const bool below = sweep.errors.back() <= frozen::kSweepErr0;
            write_sweep_csv((fs::path(opt.output_dir) / "sweep.csv").string(), sweep);
            write_sweep_summary_json((fs::path(opt.output_dir) / "summary.json").string(), sweep,
                                     frozen::kSweepErr0, decreasing, below);
            if (opt.check && !(decreasing && below)) {
                std::cerr << "check failed: sweep decreasing=" << decreasing << " below=" << below
                          << "\n";
                return 4;
            }
            return 0;
        }
        case RunCase::ChemorepulsionCheck: {
            const double dev =
                chemorepulsion_crosscheck(u0, cfg.delta, cfg.epsilon, scfg, cfg.t_final);
            log(opt, "chemorepulsion deviation=" + format_double(dev));
            std::ofstream out((fs::path(opt.output_dir) / "chemorepulsion.csv").string());
            out << "deviation\n" << format_double(dev) << "\n";
            if (opt.check && dev > frozen::kChemoDeviationCap) {
                std::cerr << "check failed: deviation " << dev << " exceeds cap\n";
                return 4;
            }
            return 0;
        }
        case RunCase::PicardCheck: {
            const PicardResult pr = picard_iterate(u0, p, cfg.t_final, cfg.picard_samples,
                                                   cfg.picard_tol, cfg.picard_max_iter);
            log(opt, "picard iterations=" + std::to_string(pr.iterations) +
                         " residual=" + format_double(pr.final_residual) +
                         " ratio=" + format_double(pr.contraction_ratio));
            std::ofstream out((fs::path(opt.output_dir) / "picard.csv").string());
            out << "iterations,final_residual,contraction_ratio,converged,non_contraction\n"
                << pr.iterations << "," << format_double(pr.final_residual) << ","
                << format_double(pr.contraction_ratio) << "," << pr.converged << ","
                << pr.non_contraction << "\n";
            if (opt.check && (!pr.converged || pr.non_contraction)) {
                std::cerr << "check failed: picard did not contract\n";
                return 4;
            }
            return 0;
        }
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CliOptions opt;
    CLI::App app{"1D individual-clustering model simulator"};
    app.add_option("--config", opt.config_path, "path to key = value config file")->required();
    app.add_option("--output-dir", opt.output_dir, "output directory");
    app.add_option("--format", opt.format, "csv|json override of the config format");
    app.add_flag("--quiet", opt.quiet, "suppress progress messages");
    app.add_flag("--check", opt.check, "verify the case assertion; exit 4 on failure");
    app.add_option("--jobs", opt.jobs, "worker pool size for sweeps");
    app.add_option("--set", opt.overrides, "key=value override, applied after the file");
    CLI11_PARSE(app, argc, argv);

    RunConfig cfg;
    try {
        std::ifstream in(opt.config_path);
        if (!in) {
            std::cerr << "config error: cannot read " << opt.config_path << "\n";
            return 2;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        cfg = parse_config(ss.str());
        for (const std::string& kv : opt.overrides) apply_override(cfg, kv);
        if (!opt.format.empty()) {
            if (opt.format != "csv" && opt.format != "json") throw ConfigError("bad --format");
            cfg.format = opt.format;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    std::error_code ec;
    fs::create_directories(opt.output_dir, ec);

    try {
        return run_case(opt, cfg);
    } catch (const SolverAbort& e) {
        std::cerr << "solver abort: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

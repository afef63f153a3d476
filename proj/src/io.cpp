#include "cluster1d/io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace cluster1d {

std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

void write_json_array(std::ofstream& out, const std::vector<double>& v) {
    out << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        out << format_double(v[i]);
    }
    out << "]";
}

}  // namespace

void write_diag_csv(const std::string& path, const std::vector<DiagRecord>& records) {
    auto out = open_out(path);
    out << kDiagCsvHeader << "\n";
    for (const DiagRecord& rec : records) out << diag_csv_row(rec) << "\n";
}

void write_snapshot_json(const std::string& path, const SimState& state, const Field& phi) {
    auto out = open_out(path);
    out << "{\"t\": " << format_double(state.t) << ", \"x\": ";
    write_json_array(out, state.u.grid->x);
    out << ", \"u\": ";
    write_json_array(out, state.u.values);
    out << ", \"phi\": ";
    write_json_array(out, phi.values);
    out << "}\n";
}

std::string snapshot_filename(double t) { return "snapshot_t" + format_double(t) + ".json"; }

void write_sweep_csv(const std::string& path, const SweepResult& sweep) {
    auto out = open_out(path);
    out << "epsilon,error,runtime_seconds\n";
    for (std::size_t i = 0; i < sweep.epsilon_list.size(); ++i)
        out << format_double(sweep.epsilon_list[i]) << "," << format_double(sweep.errors[i]) << ","
            << format_double(sweep.runtime_seconds[i]) << "\n";
}

void write_sweep_summary_json(const std::string& path, const SweepResult& sweep,
                              double frozen_threshold, bool decreasing_ok, bool threshold_ok) {
    auto out = open_out(path);
    out << "{\"epsilon\": ";
    write_json_array(out, sweep.epsilon_list);
    out << ", \"errors\": ";
    write_json_array(out, sweep.errors);
    out << ", \"frozen_threshold\": " << format_double(frozen_threshold)
        << ", \"errors_decreasing\": " << (decreasing_ok ? "true" : "false")
        << ", \"smallest_eps_below_threshold\": " << (threshold_ok ? "true" : "false")
        << ", \"pass\": " << ((decreasing_ok && threshold_ok) ? "true" : "false") << "}\n";
}

}  // namespace cluster1d

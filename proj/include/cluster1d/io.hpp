// File output: diag.csv, snapshot JSON, sweep.csv and summary.json.
#pragma once

#include <string>
#include <vector>

#include "cluster1d/diagnostics.hpp"
#include "cluster1d/experiments.hpp"
#include "cluster1d/model.hpp"

namespace cluster1d {

// 17-significant-digit decimal representation, stable across readers.
std::string format_double(double v);

void write_diag_csv(const std::string& path, const std::vector<DiagRecord>& records);

// {"t": ..., "x": [...], "u": [...], "phi": [...]}
void write_snapshot_json(const std::string& path, const SimState& state, const Field& phi);

std::string snapshot_filename(double t);

void write_sweep_csv(const std::string& path, const SweepResult& sweep);

void write_sweep_summary_json(const std::string& path, const SweepResult& sweep,
                              double frozen_threshold, bool decreasing_ok, bool threshold_ok);

}  // namespace cluster1d

// Monitored functionals: mass, norms, Liapunov functional and its dissipation.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cluster1d/grid.hpp"
#include "cluster1d/model.hpp"

namespace cluster1d {

struct DiagRecord {
    double t = 0.0;
    double mass = 0.0;          // <u>
    double l1 = 0.0;            // ||u||_1
    double l2sq = 0.0;          // ||u||_2^2
    double liapunov = 0.0;      // L(u) = int (u log u - u + 1)
    double dissipation = 0.0;   // D(u, phi)
    double grad_sqrt_sq = 0.0;  // ||d/dx sqrt(u)||_2^2
    double phi_l2sq = 0.0;      // ||phi||_2^2
    double phi_h1sq = 0.0;      // eps ||phi'||_2^2 + ||phi||_2^2
    double min_u = 0.0;
    double max_u = 0.0;
    double grad_u_l2sq = 0.0;   // ||u'||_2^2
};

inline constexpr const char* kDiagCsvHeader =
    "t,mass,l1,l2sq,liapunov,dissipation,grad_sqrt_sq,phi_l2sq,phi_h1sq,min_u,max_u,grad_u_l2sq";

DiagRecord compute_record(const SimState& state, const ModelParams& p);

std::string diag_csv_row(const DiagRecord& rec);

// Returns the first index k with L(t_{k+1}) > L(t_k) + slack, or nullopt if monotone.
std::optional<std::size_t> check_liapunov_monotone(const std::vector<DiagRecord>& series,
                                                   double slack);

struct DissipationBudget {
    bool ok;
    double integral;  // trapezoidal int_0^T D dt
    double budget;    // 1 + ||u0||_2^2 + 2/e + 2<u0> + slack
    double excess;    // max(0, integral - budget)
};

DissipationBudget check_dissipation_budget(const std::vector<DiagRecord>& series,
                                           const DiagRecord& u0_record, double slack = 1e-6);

struct MassLawResult {
    bool ok;
    double worst_deviation;
    std::size_t worst_index;
};

// r=0: |mass(t)-mass(0)| <= 1e-10; r>0: mass(t) <= max{1, mass(0)} + 1e-6.
MassLawResult check_mass_law(const std::vector<DiagRecord>& series, const ModelParams& p);

}  // namespace cluster1d

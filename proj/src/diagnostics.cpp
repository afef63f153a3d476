#include "cluster1d/diagnostics.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "cluster1d/elliptic.hpp"

namespace cluster1d {

DiagRecord compute_record(const SimState& state, const ModelParams& p) {
    const Field& u = state.u;
    if (u.min() < -kPositivityTol)
        throw std::invalid_argument("compute_record: state violates positivity, min(u)=" +
                                    std::to_string(u.min()));

    DiagRecord rec;
    rec.t = state.t;
    rec.mass = mean_value(u);
    rec.l1 = l1_norm(u);
    rec.l2sq = l2_norm_sq(u);
    rec.liapunov = trapz_of(u, [](double v) { return u_log_u(v) - v + 1.0; });
    rec.min_u = u.min();
    rec.max_u = u.max();
    rec.grad_u_l2sq = l2_norm_sq(derivative(u));

    Field sqrt_u(*u.grid);
    for (int i = 0; i < u.size(); ++i) sqrt_u.values[i] = std::sqrt(std::max(u.values[i], 0.0));
    rec.grad_sqrt_sq = l2_norm_sq(derivative(sqrt_u));

    const Field phi = compute_velocity(u, p);
    rec.phi_l2sq = l2_norm_sq(phi);
    rec.phi_h1sq = p.epsilon * l2_norm_sq(derivative(phi)) + rec.phi_l2sq;

    // Monostable form of the dissipation: each term is nonnegative since
    // u log u (1-u) <= 0 for u >= 0.
    const double reaction_term = trapz_of(u, [](double v) { return u_log_u(v) * (1.0 - v); });
    rec.dissipation = 4.0 * p.delta * rec.grad_sqrt_sq + rec.phi_h1sq - p.r * reaction_term;
    return rec;
}

static void append_double(std::string& out, double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    out.append(buf, res.ptr);
}

std::string diag_csv_row(const DiagRecord& r) {
    std::string out;
    const double cols[] = {r.t,          r.mass,      r.l1,       r.l2sq,
                           r.liapunov,   r.dissipation, r.grad_sqrt_sq, r.phi_l2sq,
                           r.phi_h1sq,   r.min_u,     r.max_u,    r.grad_u_l2sq};
    bool first = true;
    for (double c : cols) {
        if (!first) out.push_back(',');
        append_double(out, c);
        first = false;
    }
    return out;
}

std::optional<std::size_t> check_liapunov_monotone(const std::vector<DiagRecord>& series,
                                                   double slack) {
    for (std::size_t k = 0; k + 1 < series.size(); ++k)
        if (series[k + 1].liapunov > series[k].liapunov + slack) return k + 1;
    return std::nullopt;
}

DissipationBudget check_dissipation_budget(const std::vector<DiagRecord>& series,
                                           const DiagRecord& u0_record, double slack) {
    double integral = 0.0;
    for (std::size_t k = 0; k + 1 < series.size(); ++k) {
        const double dt = series[k + 1].t - series[k].t;
        integral += 0.5 * dt * (series[k].dissipation + series[k + 1].dissipation);
    }
    const double budget =
        1.0 + u0_record.l2sq + 2.0 / std::exp(1.0) + 2.0 * u0_record.mass + slack;
    DissipationBudget out;
    out.integral = integral;
    out.budget = budget;
    out.ok = integral <= budget;
    out.excess = out.ok ? 0.0 : integral - budget;
    return out;
}

MassLawResult check_mass_law(const std::vector<DiagRecord>& series, const ModelParams& p) {
    MassLawResult res{true, 0.0, 0};
    if (series.empty()) return res;
    const double m0 = series.front().mass;
    if (p.r == 0.0) {
        for (std::size_t k = 0; k < series.size(); ++k) {
            const double dev = std::abs(series[k].mass - m0);
            if (dev > res.worst_deviation) {
                res.worst_deviation = dev;
                res.worst_index = k;
            }
        }
        res.ok = res.worst_deviation <= 1e-10;
    } else {
        const double cap = std::max(1.0, m0) + 1e-6;
        for (std::size_t k = 0; k < series.size(); ++k) {
            const double dev = series[k].mass - cap;
            if (dev > res.worst_deviation) {
                res.worst_deviation = dev;
                res.worst_index = k;
            }
        }
        res.ok = res.worst_deviation <= 0.0;
    }
    return res;
}

}  // namespace cluster1d

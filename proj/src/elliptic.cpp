#include "cluster1d/elliptic.hpp"

#include <cmath>
#include <stdexcept>

namespace cluster1d {

void solve_tridiagonal(std::vector<double>& lower, std::vector<double>& diag,
                       std::vector<double>& upper, std::vector<double>& rhs) {
    const int n = static_cast<int>(diag.size());
    for (int i = 1; i < n; ++i) {
        const double m = lower[i] / diag[i - 1];
        diag[i] -= m * upper[i - 1];
        rhs[i] -= m * rhs[i - 1];
    }
    rhs[n - 1] /= diag[n - 1];
    for (int i = n - 2; i >= 0; --i) rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];
}

Field solve_elliptic(double epsilon, const Field& f) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    const int n = f.size();
    if (n < 3) throw std::invalid_argument("elliptic solve needs at least 3 nodes");
    const double h = f.grid->h;
    const double c = epsilon / (h * h);

    // Interior unknowns only; phi(+-1) = 0 exactly.
    const int m = n - 2;
    std::vector<double> lower(m, -c), diag(m, 2.0 * c + 1.0), upper(m, -c), rhs(m);
    for (int i = 0; i < m; ++i) rhs[i] = f.values[i + 1];
    solve_tridiagonal(lower, diag, upper, rhs);

    Field phi(*f.grid);
    phi.values[0] = 0.0;
    phi.values[n - 1] = 0.0;
    for (int i = 0; i < m; ++i) phi.values[i + 1] = rhs[i];
    return phi;
}

Field solve_elliptic(const EllipticProblem& prob) { return solve_elliptic(prob.epsilon, *prob.f); }

Field solve_elliptic_neumann(double epsilon, const Field& f) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    const int n = f.size();
    if (n < 3) throw std::invalid_argument("elliptic solve needs at least 3 nodes");
    const double h = f.grid->h;
    const double c = epsilon / (h * h);

    std::vector<double> lower(n, -c), diag(n, 2.0 * c + 1.0), upper(n, -c), rhs(f.values);
    // Ghost reflection psi_{-1} = psi_1 and psi_n = psi_{n-2}.
    upper[0] = -2.0 * c;
    lower[n - 1] = -2.0 * c;
    solve_tridiagonal(lower, diag, upper, rhs);

    Field psi(*f.grid);
    psi.values = rhs;
    return psi;
}

Field compute_velocity(const Field& u, const ModelParams& p) {
    if (!u.all_finite()) throw std::invalid_argument("compute_velocity: u must be finite");
    const Field Eu = evaluate_E(p.law, u);
    const Field f = derivative(Eu);
    return solve_elliptic(p.epsilon, f);
}

std::vector<RegularityProbeRow> probe_regularity_constant(const std::vector<double>& epsilon_list,
                                                          const Field& f) {
    std::vector<RegularityProbeRow> table;
    table.reserve(epsilon_list.size());
    const double fn = l2_norm(f);
    for (double eps : epsilon_list) {
        const Field phi = solve_elliptic(eps, f);
        if (fn == 0.0) {
            table.push_back({eps, 0.0});
            continue;
        }
        const double w22 = l2_norm(phi) + l2_norm(derivative(phi)) + l2_norm(second_derivative(phi));
        table.push_back({eps, eps * w22 / fn});
    }
    return table;
}

}  // namespace cluster1d

#include "cluster1d/mild.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cluster1d/elliptic.hpp"

namespace cluster1d {

namespace {

// DCT-I style analysis against cos(k pi i / (n-1)); orthogonal under trapezoid weights.
// Direct O(n^2) application; n stays small enough that a fast transform is unneeded.
double basis(int k, int i, int n) {
    return std::cos(k * std::numbers::pi * i / static_cast<double>(n - 1));
}

double eigenvalue(int k) {
    const double mu = k * std::numbers::pi / 2.0;
    return mu * mu;
}

}  // namespace

CosineSpectrum to_spectrum(const Field& v) {
    const int n = v.size();
    CosineSpectrum s;
    s.grid = v.grid;
    s.coefficients.resize(n);
    const int N = n - 1;
    for (int k = 0; k < n; ++k) {
        double acc = 0.5 * (v.values[0] * basis(k, 0, n) + v.values[N] * basis(k, N, n));
        for (int i = 1; i < N; ++i) acc += v.values[i] * basis(k, i, n);
        const double norm_sq = (k == 0 || k == N) ? N : N / 2.0;
        s.coefficients[k] = acc / norm_sq;
    }
    return s;
}

Field from_spectrum(const CosineSpectrum& s) {
    const int n = s.grid->n;
    Field v(*s.grid);
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int k = 0; k < n; ++k) acc += s.coefficients[k] * basis(k, i, n);
        v.values[i] = acc;
    }
    return v;
}

Field heat_semigroup_apply(const Field& v, double tau, double delta) {
    if (tau < 0.0) throw std::invalid_argument("tau must be nonnegative");
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
    CosineSpectrum s = to_spectrum(v);
    for (int k = 0; k < static_cast<int>(s.coefficients.size()); ++k)
        s.coefficients[k] *= std::exp(-delta * eigenvalue(k) * tau);
    return from_spectrum(s);
}

Field spectral_derivative(const Field& v) {
    const CosineSpectrum s = to_spectrum(v);
    const int n = v.size();
    Field d(*v.grid);
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int k = 1; k < n; ++k) {
            const double mu = k * std::numbers::pi / 2.0;
            acc -= s.coefficients[k] * mu *
                   std::sin(k * std::numbers::pi * i / static_cast<double>(n - 1));
        }
        d.values[i] = acc;
    }
    return d;
}

namespace {

// Integrand of the Duhamel integral: -(u phi_u)_x + r u E(u).
Field duhamel_integrand(const Field& u, const ModelParams& p) {
    const Field phi = compute_velocity(u, p);
    Field flux(*u.grid);
    for (int i = 0; i < u.size(); ++i) flux.values[i] = u.values[i] * phi.values[i];
    Field g = spectral_derivative(flux);
    for (int i = 0; i < u.size(); ++i)
        g.values[i] = -g.values[i] + p.r * u.values[i] * p.law.E(u.values[i]);
    return g;
}

void damp_into(std::vector<double>& acc, const std::vector<double>& spec, double weight,
               double tau, double delta) {
    for (std::size_t k = 0; k < spec.size(); ++k)
        acc[k] += weight * spec[k] * std::exp(-delta * eigenvalue(static_cast<int>(k)) * tau);
}

double w12_distance(const Field& a, const Field& b) {
    Field d(*a.grid);
    for (int i = 0; i < a.size(); ++i) d.values[i] = a.values[i] - b.values[i];
    const double l2 = l2_norm_sq(d);
    const double dl2 = l2_norm_sq(spectral_derivative(d));
    return std::sqrt(l2 + dl2);
}

}  // namespace

TimeSampledField lambda_map(const TimeSampledField& traj, const Field& u0, const ModelParams& p) {
    const int M = traj.count();
    if (M < 2) throw std::invalid_argument("lambda_map: need at least 2 time samples");
    const double ds = traj.dt();
    const int n = u0.size();

    const CosineSpectrum spec_u0 = to_spectrum(u0);
    std::vector<CosineSpectrum> spec_g(M);
    for (int m = 0; m < M; ++m) spec_g[m] = to_spectrum(duhamel_integrand(traj.samples[m], p));

    TimeSampledField out;
    out.t_final = traj.t_final;
    out.samples.reserve(M);
    for (int m = 0; m < M; ++m) {
        const double t = m * ds;
        std::vector<double> acc(n, 0.0);
        damp_into(acc, spec_u0.coefficients, 1.0, t, p.delta);
        // Trapezoidal Duhamel quadrature over s in [0, t].
        for (int j = 0; j <= m; ++j) {
            const double w = (j == 0 || j == m) ? 0.5 * ds : ds;
            if (m == 0) break;
            damp_into(acc, spec_g[j].coefficients, w, t - j * ds, p.delta);
        }
        CosineSpectrum s;
        s.grid = u0.grid;
        s.coefficients = std::move(acc);
        out.samples.push_back(from_spectrum(s));
    }
    return out;
}

PicardResult picard_iterate(const Field& u0, const ModelParams& p, double T, int M, double tol,
                            int max_iter) {
    if (!(T > 0.0)) throw std::invalid_argument("T must be positive");
    if (M < 2) throw std::invalid_argument("M must be >= 2");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

    PicardResult res;
    res.trajectory.t_final = T;
    res.trajectory.samples.assign(M, u0);  // constant-in-time initial guess

    double prev_residual = -1.0;
    for (int it = 1; it <= max_iter; ++it) {
        TimeSampledField next = lambda_map(res.trajectory, u0, p);
        double residual = 0.0;
        for (int m = 0; m < M; ++m)
            residual = std::max(residual, w12_distance(next.samples[m], res.trajectory.samples[m]));
        res.trajectory = std::move(next);
        res.iterations = it;
        res.final_residual = residual;
        if (prev_residual > 0.0) {
            res.contraction_ratio = residual / prev_residual;
            if (res.contraction_ratio >= 1.0) res.non_contraction = true;
        }
        if (residual <= tol) {
            res.converged = true;
            break;
        }
        prev_residual = residual;
    }
    return res;
}

}  // namespace cluster1d

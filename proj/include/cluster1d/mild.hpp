// Mild-solution machinery: Neumann cosine spectrum, exact heat semigroup,
// Duhamel map and Picard fixed-point iteration.
#pragma once

#include <vector>

#include "cluster1d/grid.hpp"
#include "cluster1d/model.hpp"

namespace cluster1d {

// Cosine-basis coefficients of a Field; basis k is cos(k pi (x+1)/2) with
// Neumann-Laplacian eigenvalue (k pi / 2)^2 on (-1,1).
struct CosineSpectrum {
    const Grid* grid = nullptr;
    std::vector<double> coefficients;
};

CosineSpectrum to_spectrum(const Field& v);
Field from_spectrum(const CosineSpectrum& s);

// Exact solution at time tau of w_t = delta w_xx, w_x(+-1)=0, w(0)=v.
Field heat_semigroup_apply(const Field& v, double tau, double delta);

// d/dx of the cosine interpolant, evaluated at the nodes.
Field spectral_derivative(const Field& v);

struct TimeSampledField {
    double t_final = 0.0;  // samples at m * t_final/(M-1), m = 0..M-1
    std::vector<Field> samples;

    int count() const { return static_cast<int>(samples.size()); }
    double dt() const { return t_final / (count() - 1); }
};

// One application of the Duhamel map Lambda to a sampled trajectory.
TimeSampledField lambda_map(const TimeSampledField& traj, const Field& u0, const ModelParams& p);

struct PicardResult {
    TimeSampledField trajectory;
    int iterations = 0;
    double final_residual = 0.0;
    double contraction_ratio = 0.0;  // last residual / previous residual
    bool converged = false;
    bool non_contraction = false;  // ratio >= 1 observed; T too large for this data
};

PicardResult picard_iterate(const Field& u0, const ModelParams& p, double T, int M, double tol,
                            int max_iter);

}  // namespace cluster1d

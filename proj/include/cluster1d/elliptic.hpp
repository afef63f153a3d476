// Screened elliptic solves -eps u'' + u = f on (-1,1), Dirichlet or Neumann ends.
#pragma once

#include <vector>

#include "cluster1d/grid.hpp"
#include "cluster1d/model.hpp"

namespace cluster1d {

struct EllipticProblem {
    double epsilon;
    const Field* f;
};

// In-place Thomas elimination for a tridiagonal system.
// lower[i] multiplies x[i-1], diag[i] multiplies x[i], upper[i] multiplies x[i+1].
void solve_tridiagonal(std::vector<double>& lower, std::vector<double>& diag,
                       std::vector<double>& upper, std::vector<double>& rhs);

// -eps phi'' + phi = f with phi(+-1) = 0. Second-order central interior stencil.
Field solve_elliptic(const EllipticProblem& prob);
Field solve_elliptic(double epsilon, const Field& f);

// Same operator with phi'(+-1) = 0 by ghost reflection (chemorepulsion psi solve).
Field solve_elliptic_neumann(double epsilon, const Field& f);

// phi solving -eps phi'' + phi = d/dx E(u), phi(+-1) = 0.
Field compute_velocity(const Field& u, const ModelParams& p);

struct RegularityProbeRow {
    double epsilon;
    double ratio;  // eps * (||phi||_2 + ||phi'||_2 + ||phi''||_2) / ||f||_2
};

std::vector<RegularityProbeRow> probe_regularity_constant(const std::vector<double>& epsilon_list,
                                                          const Field& f);

}  // namespace cluster1d

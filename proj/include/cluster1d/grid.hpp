// 1D uniform grid on (-1,1) and nodal scalar fields.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace cluster1d {

struct Grid {
    int n = 0;              // node count, >= 3
    double h = 0.0;         // spacing, 2/(n-1)
    std::vector<double> x;  // node coordinates, x[0] = -1, x[n-1] = +1

    explicit Grid(int n_nodes) : n(n_nodes) {
        if (n < 3) throw std::invalid_argument("Grid: need at least 3 nodes, got " + std::to_string(n));
        h = 2.0 / (n - 1);
        x.resize(n);
        for (int i = 0; i < n; ++i) x[i] = -1.0 + i * h;
        x.front() = -1.0;
        x.back() = 1.0;
    }

    bool operator==(const Grid& other) const { return n == other.n; }
};

struct Field {
    const Grid* grid = nullptr;
    std::vector<double> values;

    explicit Field(const Grid& g, double fill = 0.0) : grid(&g), values(g.n, fill) {}

    template <class Fun>
    static Field from_function(const Grid& g, Fun f) {
        Field out(g);
        for (int i = 0; i < g.n; ++i) out.values[i] = f(g.x[i]);
        return out;
    }

    int size() const { return grid->n; }
    double& operator[](int i) { return values[i]; }
    double operator[](int i) const { return values[i]; }

    bool all_finite() const {
        for (double v : values)
            if (!std::isfinite(v)) return false;
        return true;
    }

    double min() const {
        double m = values[0];
        for (double v : values) m = std::min(m, v);
        return m;
    }

    double max() const {
        double m = values[0];
        for (double v : values) m = std::max(m, v);
        return m;
    }
};

// Trapezoidal quadrature of nodal values over (-1,1).
inline double trapz(const Field& f) {
    const int n = f.size();
    const double h = f.grid->h;
    double s = 0.5 * (f.values[0] + f.values[n - 1]);
    for (int i = 1; i < n - 1; ++i) s += f.values[i];
    return h * s;
}

template <class Fun>
double trapz_of(const Field& f, Fun g) {
    const int n = f.size();
    const double h = f.grid->h;
    double s = 0.5 * (g(f.values[0]) + g(f.values[n - 1]));
    for (int i = 1; i < n - 1; ++i) s += g(f.values[i]);
    return h * s;
}

// <f> = (1/2) \int_{-1}^1 f dx
inline double mean_value(const Field& f) { return 0.5 * trapz(f); }

inline double l2_norm_sq(const Field& f) {
    return trapz_of(f, [](double v) { return v * v; });
}

inline double l2_norm(const Field& f) { return std::sqrt(l2_norm_sq(f)); }

inline double l1_norm(const Field& f) {
    return trapz_of(f, [](double v) { return std::abs(v); });
}

// Central differences in the interior, second-order one-sided at the ends.
inline Field derivative(const Field& f) {
    const int n = f.size();
    const double h = f.grid->h;
    Field d(*f.grid);
    d.values[0] = (-3.0 * f.values[0] + 4.0 * f.values[1] - f.values[2]) / (2.0 * h);
    for (int i = 1; i < n - 1; ++i) d.values[i] = (f.values[i + 1] - f.values[i - 1]) / (2.0 * h);
    d.values[n - 1] = (3.0 * f.values[n - 1] - 4.0 * f.values[n - 2] + f.values[n - 3]) / (2.0 * h);
    return d;
}

// Second central differences; one-sided copies at the ends.
inline Field second_derivative(const Field& f) {
    const int n = f.size();
    const double h2 = f.grid->h * f.grid->h;
    Field d(*f.grid);
    for (int i = 1; i < n - 1; ++i)
        d.values[i] = (f.values[i - 1] - 2.0 * f.values[i] + f.values[i + 1]) / h2;
    d.values[0] = (f.values[0] - 2.0 * f.values[1] + f.values[2]) / h2;
    d.values[n - 1] = (f.values[n - 3] - 2.0 * f.values[n - 2] + f.values[n - 1]) / h2;
    return d;
}

inline double max_norm_diff(const Field& a, const Field& b) {
    double m = 0.0;
    for (int i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

inline double l2_norm_diff(const Field& a, const Field& b) {
    Field d(*a.grid);
    for (int i = 0; i < a.size(); ++i) d.values[i] = a.values[i] - b.values[i];
    return l2_norm(d);
}

}  // namespace cluster1d

// Reproduction laws, model parameters and their validation.
#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <variant>

#include "cluster1d/grid.hpp"

namespace cluster1d {

// Round-off undershoot allowed before a state is considered non-physical.
inline constexpr double kPositivityTol = 1e-10;

struct BistableLaw {
    double a;  // threshold in (0,1); E(u) = (1-u)(u-a)
};

struct MonostableLaw {};  // E(u) = 1-u

struct CustomLaw {
    std::function<double(double)> E;
    std::function<double(double)> E_prime;
    std::function<double(double)> E_second;
};

class ReproductionLaw {
public:
    ReproductionLaw() : variant_(MonostableLaw{}) {}

    static ReproductionLaw bistable(double a) {
        if (!(a > 0.0 && a < 1.0))
            throw std::invalid_argument("a must lie in (0,1), got " + std::to_string(a));
        return ReproductionLaw(BistableLaw{a});
    }
    static ReproductionLaw monostable() { return ReproductionLaw(MonostableLaw{}); }
    static ReproductionLaw custom(CustomLaw law) {
        if (!law.E || !law.E_prime || !law.E_second)
            throw std::invalid_argument("custom law requires E, E' and E'' callables");
        return ReproductionLaw(std::move(law));
    }

    double E(double u) const {
        if (auto* b = std::get_if<BistableLaw>(&variant_)) return (1.0 - u) * (u - b->a);
        if (std::holds_alternative<MonostableLaw>(variant_)) return 1.0 - u;
        return std::get<CustomLaw>(variant_).E(u);
    }

    double E_prime(double u) const {
        if (auto* b = std::get_if<BistableLaw>(&variant_)) return -2.0 * u + (b->a + 1.0);
        if (std::holds_alternative<MonostableLaw>(variant_)) return -1.0;
        return std::get<CustomLaw>(variant_).E_prime(u);
    }

    double E_second(double u) const {
        if (std::holds_alternative<BistableLaw>(variant_)) return -2.0;
        if (std::holds_alternative<MonostableLaw>(variant_)) return 0.0;
        return std::get<CustomLaw>(variant_).E_second(u);
    }

    bool is_bistable() const { return std::holds_alternative<BistableLaw>(variant_); }
    bool is_monostable() const { return std::holds_alternative<MonostableLaw>(variant_); }
    double bistable_a() const { return std::get<BistableLaw>(variant_).a; }

private:
    template <class V>
    explicit ReproductionLaw(V v) : variant_(std::move(v)) {}
    std::variant<BistableLaw, MonostableLaw, CustomLaw> variant_;
};

struct ModelParams {
    double delta = 0.1;    // diffusion coefficient, > 0
    double epsilon = 0.01; // velocity screening, > 0
    double r = 0.0;        // reproduction rate, >= 0
    ReproductionLaw law;
};

// Throws std::invalid_argument naming the violated constraint.
inline void validate_params(const ModelParams& p) {
    if (!(p.delta > 0.0)) throw std::invalid_argument("delta must be positive");
    if (!(p.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (!(p.r >= 0.0)) throw std::invalid_argument("r must be nonnegative");
    // Law invariants are enforced at construction; spot-check finiteness.
    for (double u : {0.0, 0.5, 1.0, 2.0}) {
        if (!std::isfinite(p.law.E(u)) || !std::isfinite(p.law.E_prime(u)) ||
            !std::isfinite(p.law.E_second(u)))
            throw std::invalid_argument("reproduction law must be finite at finite arguments");
    }
}

inline Field evaluate_E(const ReproductionLaw& law, const Field& u) {
    Field out(*u.grid);
    for (int i = 0; i < u.size(); ++i) out.values[i] = law.E(u.values[i]);
    return out;
}

inline Field evaluate_E_prime(const ReproductionLaw& law, const Field& u) {
    Field out(*u.grid);
    for (int i = 0; i < u.size(); ++i) out.values[i] = law.E_prime(u.values[i]);
    return out;
}

// u log u with the analytic limit 0 at u = 0; guards subnormal arguments.
inline double u_log_u(double u) {
    if (u <= 1e-300) return 0.0;
    return u * std::log(u);
}

struct SimState {
    double t = 0.0;
    Field u;

    SimState(double time, Field density) : t(time), u(std::move(density)) {}
};

}  // namespace cluster1d

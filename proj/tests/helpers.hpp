#pragma once

#include <cmath>
#include <random>
#include <string>

#include "sltrust/opinion.hpp"

namespace sltrust::testing {

inline std::string data_path(const std::string& name) {
    return std::string(SLTRUST_DATA_DIR) + "/" + name;
}

// Deterministic generator of valid opinions, uniform over the belief simplex.
class OpinionGen {
public:
    explicit OpinionGen(std::uint64_t seed = 42) : rng_(seed) {}

    Opinion next() {
        double a = uniform();
        double u1 = uniform();
        double u2 = uniform();
        if (u1 > u2) std::swap(u1, u2);
        return Opinion{u1, u2 - u1, 1.0 - u2, a};
    }

    // Guaranteed non-dogmatic (uncertainty bounded away from 0).
    Opinion next_open(double min_uncertainty = 1e-6) {
        Opinion op = next();
        while (op.uncertainty < min_uncertainty) op = next();
        return op;
    }

    Opinion next_with_base_rate(double base_rate) {
        Opinion op = next();
        op.base_rate = base_rate;
        return op;
    }

    double uniform() { return dist_(rng_); }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> dist_{0.0, 1.0};
};

inline bool near(double a, double b, double tol = 1e-9) {
    return std::fabs(a - b) <= tol;
}

inline bool near(const Opinion& a, const Opinion& b, double tol = 1e-9) {
    return near(a.belief, b.belief, tol) && near(a.disbelief, b.disbelief, tol) &&
           near(a.uncertainty, b.uncertainty, tol) &&
           near(a.base_rate, b.base_rate, tol);
}

inline bool valid_opinion(const Opinion& op, double tol = 1e-9) {
    auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    return in_unit(op.belief) && in_unit(op.disbelief) &&
           in_unit(op.uncertainty) && in_unit(op.base_rate) &&
           near(op.belief + op.disbelief + op.uncertainty, 1.0, tol);
}

}  // namespace sltrust::testing

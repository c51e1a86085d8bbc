#pragma once

#include <optional>
#include <string>

#include "sltrust/errors.hpp"

namespace sltrust {

// Binomial opinion (belief, disbelief, uncertainty, base_rate).
// belief + disbelief + uncertainty = 1; every component lies in [0,1].
// Values are immutable in practice: all operators below are pure functions
// returning fresh opinions, so concurrent use needs no synchronization.
struct Opinion {
    double belief = 0.0;
    double disbelief = 0.0;
    double uncertainty = 1.0;
    double base_rate = 0.5;
};

// Positive/negative evidence mass. Counts are reals: evidence derived from
// areas or weighted observations is fractional. `weight` carries the
// per-source uncertainty weight of the evidence-weighted model.
struct Evidence {
    double positive = 0.0;
    double negative = 0.0;
    std::optional<double> weight = std::nullopt;
};

inline constexpr double kOpinionSumTolerance = 1e-9;

namespace detail {
// Operator and quantification outputs satisfy their constraints
// algebraically; rounding can still push a component a few ulp outside
// [0,1], so results are clamped without renormalizing.
inline double clamp_unit(double v) {
    return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}
inline Opinion clamped(double b, double d, double u, double a) {
    return Opinion{clamp_unit(b), clamp_unit(d), clamp_unit(u), clamp_unit(a)};
}
}  // namespace detail

// Validating constructor. Throws ValidationError if a component is outside
// [0,1] or the additivity constraint is violated by more than 1e-9.
Opinion make_opinion(double belief, double disbelief, double uncertainty,
                     double base_rate);

Evidence make_evidence(double positive, double negative,
                       std::optional<double> weight = std::nullopt);

inline Opinion vacuous_opinion(double base_rate = 0.5) {
    return Opinion{0.0, 0.0, 1.0, base_rate};
}

// P = b + a*u.
double projected_probability(const Opinion& op);

// (b,d,u,a) -> (d,b,u,1-a).
Opinion negate(const Opinion& op);

// Binomial multiplication. The product opinion preserves the projected
// probability: P(x AND y) = P(x) * P(y). Undefined when both base rates
// are 1 (throws DegenerateBaseRate).
Opinion conjunction(const Opinion& x, const Opinion& y);

// Binomial comultiplication, the De Morgan dual of conjunction. Undefined
// when both base rates are 0 (throws DegenerateBaseRate).
Opinion disjunction(const Opinion& x, const Opinion& y);

// Trust discounting: scales the target's belief mass by the projected
// probability of the referral opinion; what is discounted away becomes
// uncertainty. The target's base rate is kept.
Opinion discount(const Opinion& referral, const Opinion& target);

// Inverse of the baseline quantification: r = W*b/u, s = W*d/u.
// Dogmatic opinions (u = 0) carry infinite evidence and are rejected.
Evidence to_evidence(const Opinion& op, double prior_weight);

// Fusion family. All four are commutative. Cumulative/averaging/weighted
// fusion require equal base rates (BaseRateMismatch otherwise); the fused
// base rate equals the shared input base rate.
//
//   fuse_cumulative  - accumulates independent evidence; equivalent to
//                      adding evidence counts under a fixed prior weight;
//                      not idempotent.
//   fuse_averaging   - for dependent sources; idempotent.
//   fuse_weighted    - confidence-weighted average; idempotent, vacuous
//                      opinions are neutral.
//   fuse_constraint  - belief arguments act as constraints; throws
//                      TotalConflict when the arguments are entirely
//                      conflicting (conflict mass = 1).
Opinion fuse_cumulative(const Opinion& p, const Opinion& q);
Opinion fuse_averaging(const Opinion& p, const Opinion& q);
Opinion fuse_weighted(const Opinion& p, const Opinion& q);
Opinion fuse_constraint(const Opinion& p, const Opinion& q);

enum class FusionOperator { Cumulative, Averaging, Weighted, Constraint };

Opinion fuse(FusionOperator op, const Opinion& p, const Opinion& q);

// Accepts "cumulative", "averaging", "weighted", "constraint".
FusionOperator parse_fusion_operator(const std::string& name);
std::string fusion_operator_name(FusionOperator op);

}  // namespace sltrust

#include "sltrust/opinion.hpp"

#include <algorithm>
#include <cmath>

namespace sltrust {

namespace {

using detail::clamp_unit;
using detail::clamped;

void require_equal_base_rates(const Opinion& p, const Opinion& q) {
    if (std::fabs(p.base_rate - q.base_rate) > kOpinionSumTolerance) {
        throw BaseRateMismatch("fusion requires equal base rates, got " +
                               std::to_string(p.base_rate) + " and " +
                               std::to_string(q.base_rate));
    }
}

}  // namespace

Opinion make_opinion(double belief, double disbelief, double uncertainty,
                     double base_rate) {
    const double components[] = {belief, disbelief, uncertainty, base_rate};
    for (double c : components) {
        if (!std::isfinite(c) || c < 0.0 || c > 1.0) {
            throw ValidationError("opinion component " + std::to_string(c) +
                                  " outside [0,1]");
        }
    }
    const double sum = belief + disbelief + uncertainty;
    if (std::fabs(sum - 1.0) > kOpinionSumTolerance) {
        throw ValidationError("belief + disbelief + uncertainty = " +
                              std::to_string(sum) + ", expected 1");
    }
    return Opinion{belief, disbelief, uncertainty, base_rate};
}

Evidence make_evidence(double positive, double negative,
                       std::optional<double> weight) {
    if (!std::isfinite(positive) || positive < 0.0) {
        throw ValidationError("positive evidence must be finite and >= 0");
    }
    if (!std::isfinite(negative) || negative < 0.0) {
        throw ValidationError("negative evidence must be finite and >= 0");
    }
    if (weight && (!std::isfinite(*weight) || *weight <= 0.0)) {
        throw ValidationError("evidence weight must be finite and > 0");
    }
    return Evidence{positive, negative, weight};
}

double projected_probability(const Opinion& op) {
    return clamp_unit(op.belief + op.base_rate * op.uncertainty);
}

Opinion negate(const Opinion& op) {
    return Opinion{op.disbelief, op.belief, op.uncertainty,
                   1.0 - op.base_rate};
}

Opinion conjunction(const Opinion& x, const Opinion& y) {
    const double ax = x.base_rate;
    const double ay = y.base_rate;
    const double denom = 1.0 - ax * ay;
    if (denom == 0.0) {
        throw DegenerateBaseRate("conjunction undefined for base rates both 1");
    }
    const double b = x.belief * y.belief +
                     ((1.0 - ax) * ay * x.belief * y.uncertainty +
                      ax * (1.0 - ay) * x.uncertainty * y.belief) /
                         denom;
    const double d = x.disbelief + y.disbelief - x.disbelief * y.disbelief;
    const double u = x.uncertainty * y.uncertainty +
                     ((1.0 - ay) * x.belief * y.uncertainty +
                      (1.0 - ax) * x.uncertainty * y.belief) /
                         denom;
    return clamped(b, d, u, ax * ay);
}

Opinion disjunction(const Opinion& x, const Opinion& y) {
    const double ax = x.base_rate;
    const double ay = y.base_rate;
    const double denom = ax + ay - ax * ay;
    if (denom == 0.0) {
        throw DegenerateBaseRate("disjunction undefined for base rates both 0");
    }
    const double b = x.belief + y.belief - x.belief * y.belief;
    const double d = x.disbelief * y.disbelief +
                     (ax * (1.0 - ay) * x.disbelief * y.uncertainty +
                      (1.0 - ax) * ay * x.uncertainty * y.disbelief) /
                         denom;
    const double u = x.uncertainty * y.uncertainty +
                     (ay * x.disbelief * y.uncertainty +
                      ax * x.uncertainty * y.disbelief) /
                         denom;
    return clamped(b, d, u, denom);
}

Opinion discount(const Opinion& referral, const Opinion& target) {
    const double p = projected_probability(referral);
    const double b = p * target.belief;
    const double d = p * target.disbelief;
    return clamped(b, d, 1.0 - p * (target.belief + target.disbelief),
                   target.base_rate);
}

Evidence to_evidence(const Opinion& op, double prior_weight) {
    if (!(prior_weight > 0.0)) {
        throw ParameterError("prior weight must be > 0");
    }
    if (op.uncertainty <= 0.0) {
        throw DogmaticOpinion(
            "dogmatic opinion carries infinite evidence (uncertainty = 0)");
    }
    return Evidence{prior_weight * op.belief / op.uncertainty,
                    prior_weight * op.disbelief / op.uncertainty,
                    std::nullopt};
}

Opinion fuse_cumulative(const Opinion& p, const Opinion& q) {
    require_equal_base_rates(p, q);
    const double up = p.uncertainty;
    const double uq = q.uncertainty;
    if (up == 0.0 && uq == 0.0) {
        // Equal-weight limit for a dogmatic pair.
        return clamped((p.belief + q.belief) / 2.0,
                       (p.disbelief + q.disbelief) / 2.0, 0.0, p.base_rate);
    }
    const double denom = up + uq - up * uq;
    const double b = (p.belief * uq + q.belief * up) / denom;
    const double u = (up * uq) / denom;
    return clamped(b, 1.0 - b - u, u, p.base_rate);
}

Opinion fuse_averaging(const Opinion& p, const Opinion& q) {
    require_equal_base_rates(p, q);
    const double up = p.uncertainty;
    const double uq = q.uncertainty;
    if (up == 0.0 && uq == 0.0) {
        return clamped((p.belief + q.belief) / 2.0,
                       (p.disbelief + q.disbelief) / 2.0, 0.0, p.base_rate);
    }
    const double denom = up + uq;
    const double b = (p.belief * uq + q.belief * up) / denom;
    const double u = 2.0 * up * uq / denom;
    return clamped(b, 1.0 - b - u, u, p.base_rate);
}

Opinion fuse_weighted(const Opinion& p, const Opinion& q) {
    require_equal_base_rates(p, q);
    const double up = p.uncertainty;
    const double uq = q.uncertainty;
    if (up == 1.0 && uq == 1.0) {
        return vacuous_opinion(p.base_rate);
    }
    if (up == 0.0 && uq == 0.0) {
        // Both fully confident: confidence-equal average.
        return clamped((p.belief + q.belief) / 2.0,
                       (p.disbelief + q.disbelief) / 2.0, 0.0, p.base_rate);
    }
    const double denom = up + uq - 2.0 * up * uq;
    const double b =
        (p.belief * (1.0 - up) * uq + q.belief * (1.0 - uq) * up) / denom;
    const double u = (2.0 - up - uq) * up * uq / denom;
    return clamped(b, 1.0 - b - u, u, p.base_rate);
}

Opinion fuse_constraint(const Opinion& p, const Opinion& q) {
    const double conflict = p.belief * q.disbelief + p.disbelief * q.belief;
    if (conflict >= 1.0) {
        throw TotalConflict("constraint fusion undefined for total conflict");
    }
    const double norm = 1.0 - conflict;
    const double b =
        (p.belief * q.belief + p.belief * q.uncertainty +
         p.uncertainty * q.belief) /
        norm;
    const double d =
        (p.disbelief * q.disbelief + p.disbelief * q.uncertainty +
         p.uncertainty * q.disbelief) /
        norm;
    const double u = p.uncertainty * q.uncertainty / norm;
    // Confidence-weighted base rate; plain average when both are vacuous.
    const double cp = 1.0 - p.uncertainty;
    const double cq = 1.0 - q.uncertainty;
    const double a = (cp + cq > 0.0)
                         ? (p.base_rate * cp + q.base_rate * cq) / (cp + cq)
                         : (p.base_rate + q.base_rate) / 2.0;
    return clamped(b, d, u, a);
}

Opinion fuse(FusionOperator op, const Opinion& p, const Opinion& q) {
    switch (op) {
        case FusionOperator::Cumulative:
            return fuse_cumulative(p, q);
        case FusionOperator::Averaging:
            return fuse_averaging(p, q);
        case FusionOperator::Weighted:
            return fuse_weighted(p, q);
        case FusionOperator::Constraint:
            return fuse_constraint(p, q);
    }
    throw ParameterError("unknown fusion operator");
}

FusionOperator parse_fusion_operator(const std::string& name) {
    if (name == "cumulative") return FusionOperator::Cumulative;
    if (name == "averaging") return FusionOperator::Averaging;
    if (name == "weighted") return FusionOperator::Weighted;
    if (name == "constraint") return FusionOperator::Constraint;
    throw ParameterError("unknown fusion operator '" + name + "'");
}

std::string fusion_operator_name(FusionOperator op) {
    switch (op) {
        case FusionOperator::Cumulative:
            return "cumulative";
        case FusionOperator::Averaging:
            return "averaging";
        case FusionOperator::Weighted:
            return "weighted";
        case FusionOperator::Constraint:
            return "constraint";
    }
    return "unknown";
}

}  // namespace sltrust

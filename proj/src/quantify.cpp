#include "sltrust/quantify.hpp"

#include <cmath>

namespace sltrust {

void validate(const QuantConfig& cfg) {
    if (!(cfg.prior_weight > 0.0) || !std::isfinite(cfg.prior_weight)) {
        throw ParameterError("prior weight must be finite and > 0");
    }
    if (!(cfg.base_rate >= 0.0 && cfg.base_rate <= 1.0)) {
        throw ParameterError("base rate must lie in [0,1]");
    }
}

Opinion quantify_baseline(const Evidence& e, const QuantConfig& cfg) {
    validate(cfg);
    if (e.positive < 0.0 || e.negative < 0.0) {
        throw ValidationError("evidence counts must be >= 0");
    }
    const double total = cfg.prior_weight + e.positive + e.negative;
    return detail::clamped(e.positive / total, e.negative / total,
                           cfg.prior_weight / total, cfg.base_rate);
}

Opinion quantify_weighted(const Evidence& e, const QuantConfig& cfg) {
    validate(cfg);
    if (!e.weight) {
        throw MissingWeight("evidence-weighted quantification needs a weight");
    }
    if (!(*e.weight > 0.0)) {
        throw ValidationError("evidence weight must be > 0");
    }
    if (e.positive < 0.0 || e.negative < 0.0) {
        throw ValidationError("evidence counts must be >= 0");
    }
    const double total = *e.weight + e.positive + e.negative;
    return detail::clamped(e.positive / total, e.negative / total,
                           *e.weight / total, cfg.base_rate);
}

Opinion quantify_constant_u(double r_frac, double s_frac, double fixed_u,
                            const QuantConfig& cfg) {
    validate(cfg);
    if (r_frac < 0.0 || s_frac < 0.0) {
        throw ValidationError("evidence fractions must be >= 0");
    }
    if (!(fixed_u >= 0.0 && fixed_u <= 1.0)) {
        throw ParameterError("fixed uncertainty must lie in [0,1]");
    }
    if (r_frac + s_frac == 0.0) {
        throw NoEvidence("constant-uncertainty quantification needs r + s > 0");
    }
    const double gamma = (1.0 - fixed_u) / (r_frac + s_frac);
    return detail::clamped(gamma * r_frac, gamma * s_frac, fixed_u,
                           cfg.base_rate);
}

}  // namespace sltrust

#pragma once

#include "sltrust/opinion.hpp"

namespace sltrust {

// Shared parameters of the evidence-to-opinion mappings. W = 2 is the
// conventional non-informative prior weight; 0.5 the default base rate.
struct QuantConfig {
    double prior_weight = 2.0;
    double base_rate = 0.5;
};

void validate(const QuantConfig& cfg);

// b = r/(W+r+s), d = s/(W+r+s), u = W/(W+r+s). Zero evidence is vacuous.
// Uncertainty shrinks as evidence accumulates.
Opinion quantify_baseline(const Evidence& e, const QuantConfig& cfg = {});

// Same shape with the per-source weight w in place of W. The weight must be
// present on the evidence (MissingWeight otherwise).
Opinion quantify_weighted(const Evidence& e, const QuantConfig& cfg = {});

// Fixed uncertainty U; belief and disbelief split the remaining 1-U mass in
// proportion r:s. Scaling both fractions by a constant leaves the result
// unchanged. Throws NoEvidence when r + s = 0.
Opinion quantify_constant_u(double r_frac, double s_frac, double fixed_u,
                            const QuantConfig& cfg = {});

}  // namespace sltrust

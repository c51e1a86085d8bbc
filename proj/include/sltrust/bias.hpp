#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sltrust/dataset.hpp"
#include "sltrust/opinion.hpp"
#include "sltrust/quantify.hpp"

namespace sltrust {

// Parameters of the two bias assessment methods.
//
// The tolerance zone is the closed interval [1/n_c - eta1, 1/n_c + eta2]
// around the ideal per-class probability (lower bound clamped at 0); a
// probability exactly on an edge counts as in-zone. Dataset uncertainty is
// U = clamp((log(N_s) - log(N)) / 10, m1, m2) with N_s = (d/eps)*ln(1/delta);
// the uncertainty logarithm defaults to base 10, entropy to the natural log.
// The bases are configurable and echoed into every report. `sample_complexity`
// overrides the d/eps/delta-derived N_s when set.
struct BiasConfig {
    double eta1 = 0.02;
    double eta2 = 0.02;
    double prior_weight = 2.0;
    double base_rate = 0.5;
    double min_uncertainty = 0.0;
    double max_uncertainty = 1.0;
    double vc_dimension = 100.0;
    double epsilon = 0.1;
    double delta = 0.05;
    double uncertainty_log_base = 10.0;
    double entropy_log_base = 2.718281828459045;
    std::optional<double> evidence_weight_scale;  // tau; default 0.1*log(n_c)
    std::optional<double> sample_complexity;      // direct N_s override

    QuantConfig quant() const { return {prior_weight, base_rate}; }
};

void validate(const BiasConfig& cfg);

// Class membership of the tolerance zone: n_t classes inside out of n_c.
struct ToleranceEvidence {
    std::size_t in_zone = 0;      // n_t
    double r_frac = 0.0;          // n_t / n_c
    double s_frac = 1.0;          // 1 - r_frac
    double zone_lower = 0.0;
    double zone_upper = 0.0;
};

// One sub-dataset's entropy compared against the edge-acceptable threshold.
// positive <=> entropy strictly exceeds the threshold; a tie is negative
// evidence.
struct EntropyVerdict {
    double entropy = 0.0;
    double threshold = 0.0;
    bool positive = false;
    double margin = 0.0;  // entropy - threshold
};

struct Method1Result {
    ToleranceEvidence evidence;
    double sample_complexity = 0.0;  // N_s
    double uncertainty = 0.0;        // U
    std::uint64_t n_total = 0;
    std::size_t n_classes = 0;
    Opinion opinion;
};

enum class Method2Mode { Baseline, EvidenceWeighted };

struct Method2Result {
    std::vector<EntropyVerdict> verdicts;
    double threshold = 0.0;
    double eta = 0.0;
    double positive = 0.0;                 // r
    double negative = 0.0;                 // s
    std::optional<double> weight;          // total w (evidence-weighted mode)
    std::optional<double> weight_scale;    // tau actually used
    Opinion opinion;
};

ToleranceEvidence tolerance_evidence(const ProbabilityVector& p,
                                     const BiasConfig& cfg);

// N_s = (d / epsilon) * ln(1 / delta).
double sample_complexity(const BiasConfig& cfg);

// U = clamp((log(N_s) - log(N)) / 10, m1, m2), log in cfg.uncertainty_log_base.
double dataset_uncertainty(double n_s, std::uint64_t n,
                           const BiasConfig& cfg);

// Class-probability method: tolerance-zone evidence quantified at the
// dataset-size-driven uncertainty.
Method1Result assess_bias_method1(const ClassDistribution& d,
                                  const BiasConfig& cfg);

// H(P) = -sum p_k log(p_k), using the 0*log(0) = 0 convention.
double entropy(const ProbabilityVector& p, double log_base);

// Entropy of the edge-acceptable distribution P_E: floor(n_c/2) entries at
// 1/n_c + eta, floor(n_c/2) at 1/n_c - eta and, for odd n_c, one at 1/n_c.
// Requires 0 <= eta <= min(1/n_c, 1 - 1/n_c) so the entries stay in [0,1].
struct EntropyThreshold {
    double threshold = 0.0;
    ProbabilityVector edge_distribution;
};

EntropyThreshold entropy_threshold(std::size_t n_classes, double eta,
                                   double log_base);

// Entropy method over federated sub-datasets: each part whose entropy
// exceeds the threshold contributes positive evidence, the rest negative.
// In the evidence-weighted mode each part additionally contributes an
// uncertainty weight exp(-|H - T| / tau), so parts far from the threshold
// add almost no uncertainty.
Method2Result assess_bias_method2(const std::vector<ClassDistribution>& parts,
                                  const BiasConfig& cfg,
                                  Method2Mode mode = Method2Mode::Baseline);

struct EtaPoint {
    double eta = 0.0;
    ToleranceEvidence evidence;
    Opinion opinion;
};

// Method 1 with eta1 = eta2 = eta for each requested value. Belief is
// non-decreasing and disbelief non-increasing in eta; uncertainty does not
// depend on eta.
std::vector<EtaPoint> sweep_eta(const ClassDistribution& d,
                                const std::vector<double>& eta_values,
                                const BiasConfig& cfg);

// Gaussian kernel density of the per-class probabilities, for plotting.
// Bandwidth sigma * n^(-1/5).
struct DensitySample {
    double x = 0.0;
    double density = 0.0;
};

std::vector<DensitySample> kernel_density(const ProbabilityVector& p,
                                          std::size_t grid_points = 257);

}  // namespace sltrust

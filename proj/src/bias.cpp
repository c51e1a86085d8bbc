#include "sltrust/bias.hpp"

#include <algorithm>
#include <cmath>

namespace sltrust {

namespace {

double log_in_base(double x, double base) { return std::log(x) / std::log(base); }

}  // namespace

void validate(const BiasConfig& cfg) {
    if (cfg.eta1 < 0.0 || cfg.eta2 < 0.0) {
        throw ParameterError("eta1 and eta2 must be >= 0");
    }
    if (!(cfg.min_uncertainty >= 0.0 && cfg.min_uncertainty <= cfg.max_uncertainty &&
          cfg.max_uncertainty <= 1.0)) {
        throw ParameterError("need 0 <= m1 <= m2 <= 1");
    }
    if (!(cfg.prior_weight > 0.0)) {
        throw ParameterError("prior weight must be > 0");
    }
    if (!(cfg.base_rate >= 0.0 && cfg.base_rate <= 1.0)) {
        throw ParameterError("base rate must lie in [0,1]");
    }
    if (!(cfg.uncertainty_log_base > 0.0) || cfg.uncertainty_log_base == 1.0) {
        throw ParameterError("uncertainty log base must be positive and != 1");
    }
    if (!(cfg.entropy_log_base > 0.0) || cfg.entropy_log_base == 1.0) {
        throw ParameterError("entropy log base must be positive and != 1");
    }
    if (cfg.evidence_weight_scale && !(*cfg.evidence_weight_scale > 0.0)) {
        throw ParameterError("evidence weight scale must be > 0");
    }
    if (cfg.sample_complexity && !(*cfg.sample_complexity > 0.0)) {
        throw ParameterError("sample complexity override must be > 0");
    }
}

ToleranceEvidence tolerance_evidence(const ProbabilityVector& p,
                                     const BiasConfig& cfg) {
    validate(cfg);
    if (p.size() == 0) {
        throw EmptyDataset("probability vector holds no classes");
    }
    const double ideal = 1.0 / static_cast<double>(p.size());
    ToleranceEvidence ev;
    ev.zone_lower = std::max(0.0, ideal - cfg.eta1);
    ev.zone_upper = ideal + cfg.eta2;
    for (double v : p.values) {
        if (v >= ev.zone_lower && v <= ev.zone_upper) ++ev.in_zone;
    }
    ev.r_frac = static_cast<double>(ev.in_zone) / static_cast<double>(p.size());
    ev.s_frac = 1.0 - ev.r_frac;
    return ev;
}

double sample_complexity(const BiasConfig& cfg) {
    if (!(cfg.vc_dimension > 0.0)) {
        throw ParameterError("VC dimension must be > 0");
    }
    if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0)) {
        throw ParameterError("epsilon must lie in (0,1)");
    }
    if (!(cfg.delta > 0.0 && cfg.delta < 1.0)) {
        throw ParameterError("delta must lie in (0,1)");
    }
    return cfg.vc_dimension / cfg.epsilon * std::log(1.0 / cfg.delta);
}

double dataset_uncertainty(double n_s, std::uint64_t n, const BiasConfig& cfg) {
    validate(cfg);
    if (!(n_s > 0.0)) {
        throw ParameterError("sample complexity must be > 0");
    }
    if (n == 0) {
        throw ParameterError("dataset size must be >= 1");
    }
    const double raw = (log_in_base(n_s, cfg.uncertainty_log_base) -
                        log_in_base(static_cast<double>(n),
                                    cfg.uncertainty_log_base)) /
                       10.0;
    return std::min(std::max(raw, cfg.min_uncertainty), cfg.max_uncertainty);
}

Method1Result assess_bias_method1(const ClassDistribution& d,
                                  const BiasConfig& cfg) {
    validate(cfg);
    Method1Result res;
    res.n_total = d.total();
    res.n_classes = d.num_classes();
    if (res.n_total == 0) {
        throw EmptyDataset("distribution holds no samples");
    }
    const ProbabilityVector p = class_probabilities(d);
    res.evidence = tolerance_evidence(p, cfg);
    res.sample_complexity =
        cfg.sample_complexity ? *cfg.sample_complexity : sample_complexity(cfg);
    res.uncertainty = dataset_uncertainty(res.sample_complexity, res.n_total, cfg);
    res.opinion = quantify_constant_u(res.evidence.r_frac, res.evidence.s_frac,
                                      res.uncertainty, cfg.quant());
    return res;
}

double entropy(const ProbabilityVector& p, double log_base) {
    if (!(log_base > 0.0) || log_base == 1.0) {
        throw ParameterError("entropy log base must be positive and != 1");
    }
    double sum = 0.0;
    for (double v : p.values) {
        if (v > 0.0) sum -= v * std::log(v);
    }
    return sum / std::log(log_base);
}

EntropyThreshold entropy_threshold(std::size_t n_classes, double eta,
                                   double log_base) {
    if (n_classes < 2) {
        throw ParameterError("edge-acceptable threshold needs >= 2 classes");
    }
    const double ideal = 1.0 / static_cast<double>(n_classes);
    const double eta_max = std::min(ideal, 1.0 - ideal);
    if (!(eta >= 0.0 && eta <= eta_max)) {
        throw EtaOutOfRange("eta must lie in [0, " + std::to_string(eta_max) +
                            "] for " + std::to_string(n_classes) + " classes");
    }
    EntropyThreshold out;
    auto& pe = out.edge_distribution;
    const std::size_t half = n_classes / 2;
    pe.values.reserve(n_classes);
    for (std::size_t i = 0; i < half; ++i) pe.values.push_back(ideal + eta);
    for (std::size_t i = 0; i < half; ++i) pe.values.push_back(ideal - eta);
    if (n_classes % 2 == 1) pe.values.push_back(ideal);
    out.threshold = entropy(pe, log_base);
    return out;
}

Method2Result assess_bias_method2(const std::vector<ClassDistribution>& parts,
                                  const BiasConfig& cfg, Method2Mode mode) {
    validate(cfg);
    if (parts.empty()) {
        throw EmptyDataset("no sub-datasets to assess");
    }
    const auto& schema = parts.front().schema;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i].schema != schema) {
            throw SchemaMismatch("part " + std::to_string(i) +
                                 " has a different schema");
        }
    }
    Method2Result res;
    // The edge-acceptable construction is symmetric; eta1 is used as the
    // shared tolerance.
    res.eta = cfg.eta1;
    const auto thr =
        entropy_threshold(schema.size(), res.eta, cfg.entropy_log_base);
    res.threshold = thr.threshold;

    double weight_sum = 0.0;
    // Decay scale defaults to a tenth of the maximum attainable entropy.
    const double tau = cfg.evidence_weight_scale
                           ? *cfg.evidence_weight_scale
                           : 0.1 * std::log(static_cast<double>(schema.size())) /
                                 std::log(cfg.entropy_log_base);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].total() == 0) {
            throw EmptyPart("sub-dataset " + std::to_string(i) +
                            " holds no samples");
        }
        EntropyVerdict v;
        v.entropy = entropy(class_probabilities(parts[i]), cfg.entropy_log_base);
        v.threshold = res.threshold;
        v.positive = v.entropy > res.threshold;
        v.margin = v.entropy - res.threshold;
        if (v.positive) {
            res.positive += 1.0;
        } else {
            res.negative += 1.0;
        }
        weight_sum += std::exp(-std::fabs(v.margin) / tau);
        res.verdicts.push_back(v);
    }
    if (mode == Method2Mode::EvidenceWeighted) {
        res.weight = weight_sum;
        res.weight_scale = tau;
        res.opinion = quantify_weighted(
            Evidence{res.positive, res.negative, weight_sum}, cfg.quant());
    } else {
        res.opinion = quantify_baseline(Evidence{res.positive, res.negative},
                                        cfg.quant());
    }
    return res;
}

std::vector<EtaPoint> sweep_eta(const ClassDistribution& d,
                                const std::vector<double>& eta_values,
                                const BiasConfig& cfg) {
    std::vector<EtaPoint> curve;
    curve.reserve(eta_values.size());
    BiasConfig point_cfg = cfg;
    for (double eta : eta_values) {
        point_cfg.eta1 = eta;
        point_cfg.eta2 = eta;
        const Method1Result res = assess_bias_method1(d, point_cfg);
        curve.push_back(EtaPoint{eta, res.evidence, res.opinion});
    }
    return curve;
}

std::vector<DensitySample> kernel_density(const ProbabilityVector& p,
                                          std::size_t grid_points) {
    if (p.size() == 0) {
        throw EmptyDataset("probability vector holds no classes");
    }
    if (grid_points < 2) {
        throw ParameterError("need at least 2 grid points");
    }
    const auto n = static_cast<double>(p.size());
    double mean = 0.0;
    for (double v : p.values) mean += v;
    mean /= n;
    double var = 0.0;
    for (double v : p.values) var += (v - mean) * (v - mean);
    var = p.size() > 1 ? var / (n - 1.0) : 0.0;
    double bandwidth = std::sqrt(var) * std::pow(n, -0.2);
    if (bandwidth <= 0.0) {
        // Degenerate spread (e.g. perfectly uniform probabilities): fall back
        // to a narrow kernel so the plot still shows a peak.
        bandwidth = std::max(1e-4, 0.01 * mean);
    }
    const double lo = *std::min_element(p.values.begin(), p.values.end()) -
                      3.0 * bandwidth;
    const double hi = *std::max_element(p.values.begin(), p.values.end()) +
                      3.0 * bandwidth;
    const double step = (hi - lo) / static_cast<double>(grid_points - 1);
    const double norm = 1.0 / (n * bandwidth * std::sqrt(2.0 * 3.141592653589793));
    std::vector<DensitySample> samples;
    samples.reserve(grid_points);
    for (std::size_t i = 0; i < grid_points; ++i) {
        const double x = lo + step * static_cast<double>(i);
        double acc = 0.0;
        for (double v : p.values) {
            const double z = (x - v) / bandwidth;
            acc += std::exp(-0.5 * z * z);
        }
        samples.push_back(DensitySample{x, norm * acc});
    }
    return samples;
}

}  // namespace sltrust

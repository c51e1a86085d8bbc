#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "sltrust/bias.hpp"
#include "sltrust/dataset.hpp"

namespace sltrust {

// Federated imbalance sweep: n_oems contributors share a stratified split of
// the base distribution; for each k, the listed classes are removed from the
// first k sub-datasets before both methods run.
struct SimConfig {
    ClassDistribution base_distribution;
    std::size_t n_oems = 100;
    std::set<std::string> imbalance_class_ids;
    std::vector<std::size_t> k_values;
    std::uint64_t seed = 0;
    BiasConfig bias;
};

struct SweepPoint {
    std::size_t k = 0;
    Opinion method1;
    Opinion method2;
    std::uint64_t merged_total = 0;
};

// Deterministic under a fixed config: the split is seeded and points are
// emitted in k order. Method 1 runs on the merged dataset, Method 2 on the
// individual parts.
std::vector<SweepPoint> run_sweep(const SimConfig& cfg);

// CSV with header `k,method,belief,disbelief,uncertainty,n_total`, one row
// per (k, method). Doubles are printed shortest-round-trip, so equal configs
// produce byte-identical output.
std::string sweep_to_csv(const std::vector<SweepPoint>& points);

std::vector<SweepPoint> sweep_from_csv(const std::string& csv);

// "0..100", "0..100..5" (start..stop..step) or a comma list "0,3,9".
std::vector<std::size_t> parse_k_values(const std::string& spec);

}  // namespace sltrust

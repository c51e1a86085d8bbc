#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "sltrust/errors.hpp"

namespace sltrust {

// Label distribution of one dataset or sub-dataset. The schema is the
// declared ordered label set; classes with zero samples stay in the schema
// and still count toward the number of classes. Immutable in practice:
// every operation returns a new distribution.
struct ClassDistribution {
    std::vector<std::string> schema;
    std::vector<std::uint64_t> counts;

    std::size_t num_classes() const { return schema.size(); }
    std::uint64_t total() const;
};

// Per-class fractions aligned with a ClassDistribution schema.
struct ProbabilityVector {
    std::vector<std::string> schema;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
};

ClassDistribution make_distribution(std::vector<std::string> schema,
                                    std::vector<std::uint64_t> counts);

enum class CountsFormat { Csv, Json };

// CSV: header `class_id,count`, one row per class.
// JSON: {"classes": {"<id>": <count>, ...}} with file order preserved.
// Malformed rows, negative counts and duplicate ids raise FormatError;
// an input that declares no classes at all raises EmptyDataset.
ClassDistribution load_class_counts(std::istream& source, CountsFormat format);
ClassDistribution load_class_counts(const std::string& text,
                                    CountsFormat format);

// Loads from a file, inferring the format from the extension
// (.json -> JSON, anything else -> CSV).
ClassDistribution load_class_counts_file(const std::string& path);

// p_k = N_k / N. Throws EmptyDataset when the distribution holds no samples.
ProbabilityVector class_probabilities(const ClassDistribution& d);

// Splits every class count as evenly as possible across n_parts (per-class
// difference between parts is at most 1); which parts receive the remainder
// is decided by the seeded generator. Merging the parts restores the input.
std::vector<ClassDistribution> split_stratified(const ClassDistribution& d,
                                                std::size_t n_parts,
                                                std::uint64_t seed);

// Zeroes the counts of the listed classes; the schema is retained, so the
// number of classes is unchanged. Unknown ids raise UnknownClass.
ClassDistribution remove_classes(const ClassDistribution& d,
                                 const std::set<std::string>& class_ids);

// Per-class sum over parts sharing an identical schema.
ClassDistribution merge(const std::vector<ClassDistribution>& parts);

}  // namespace sltrust

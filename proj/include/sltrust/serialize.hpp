#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "sltrust/bias.hpp"
#include "sltrust/dataset.hpp"
#include "sltrust/opinion.hpp"
#include "sltrust/proposition.hpp"

namespace sltrust {

using json = nlohmann::ordered_json;

// Flat record {"belief", "disbelief", "uncertainty", "base_rate"}.
json opinion_to_json(const Opinion& op);
Opinion opinion_from_json(const json& doc);

json bias_config_to_json(const BiasConfig& cfg);

// One federated data source: a counts file plus an optional referral trust.
struct ManifestSource {
    std::string name;
    std::string path;  // resolved against the manifest's directory
    std::optional<Opinion> referral_trust;
    ClassDistribution distribution;
};

// {"sources": [{"name", "path", "referral_trust"?}, ...]}; loads every
// referenced counts file.
std::vector<ManifestSource> load_manifest(const std::string& path);

// {"proposition": <expr>, "bindings": {<name>: {"sources": [{"opinion",
// "referral_trust"?, "name"?}, ...], "fusion": <operator>}, ...}}
struct BindingsDocument {
    std::optional<std::string> proposition;
    std::vector<SourceBinding> bindings;
};

BindingsDocument load_bindings(const std::string& path);
BindingsDocument parse_bindings(const json& doc);

// Hex SHA-256 of a file's contents.
std::string file_sha256(const std::string& path);

}  // namespace sltrust

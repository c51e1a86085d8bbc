#include "sltrust/serialize.hpp"

#include <filesystem>
#include <fstream>

#include <openssl/evp.h>

namespace sltrust {

json opinion_to_json(const Opinion& op) {
    return json{{"belief", op.belief},
                {"disbelief", op.disbelief},
                {"uncertainty", op.uncertainty},
                {"base_rate", op.base_rate}};
}

Opinion opinion_from_json(const json& doc) {
    if (!doc.is_object()) {
        throw FormatError("opinion record must be a JSON object");
    }
    for (const char* key : {"belief", "disbelief", "uncertainty", "base_rate"}) {
        if (!doc.contains(key) || !doc[key].is_number()) {
            throw FormatError(std::string("opinion record needs numeric '") +
                              key + "'");
        }
    }
    return make_opinion(doc["belief"].get<double>(),
                        doc["disbelief"].get<double>(),
                        doc["uncertainty"].get<double>(),
                        doc["base_rate"].get<double>());
}

json bias_config_to_json(const BiasConfig& cfg) {
    json doc{{"eta1", cfg.eta1},
             {"eta2", cfg.eta2},
             {"prior_weight", cfg.prior_weight},
             {"base_rate", cfg.base_rate},
             {"min_uncertainty", cfg.min_uncertainty},
             {"max_uncertainty", cfg.max_uncertainty},
             {"vc_dimension", cfg.vc_dimension},
             {"epsilon", cfg.epsilon},
             {"delta", cfg.delta},
             {"uncertainty_log_base", cfg.uncertainty_log_base},
             {"entropy_log_base", cfg.entropy_log_base}};
    if (cfg.evidence_weight_scale) {
        doc["evidence_weight_scale"] = *cfg.evidence_weight_scale;
    }
    if (cfg.sample_complexity) {
        doc["sample_complexity"] = *cfg.sample_complexity;
    }
    return doc;
}

std::vector<ManifestSource> load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open manifest '" + path + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("invalid manifest JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("sources") ||
        !doc["sources"].is_array() || doc["sources"].empty()) {
        throw FormatError("manifest needs a non-empty 'sources' array");
    }
    const auto base_dir = std::filesystem::path(path).parent_path();
    std::vector<ManifestSource> sources;
    for (const auto& entry : doc["sources"]) {
        if (!entry.is_object() || !entry.contains("path") ||
            !entry["path"].is_string()) {
            throw FormatError("manifest source needs a string 'path'");
        }
        ManifestSource src;
        src.path = (base_dir / entry["path"].get<std::string>()).string();
        src.name = entry.contains("name") && entry["name"].is_string()
                       ? entry["name"].get<std::string>()
                       : entry["path"].get<std::string>();
        if (entry.contains("referral_trust")) {
            src.referral_trust = opinion_from_json(entry["referral_trust"]);
        }
        src.distribution = load_class_counts_file(src.path);
        sources.push_back(std::move(src));
    }
    return sources;
}

BindingsDocument parse_bindings(const json& doc) {
    if (!doc.is_object()) {
        throw FormatError("bindings document must be a JSON object");
    }
    BindingsDocument out;
    if (doc.contains("proposition")) {
        if (!doc["proposition"].is_string()) {
            throw FormatError("'proposition' must be a string");
        }
        out.proposition = doc["proposition"].get<std::string>();
    }
    if (!doc.contains("bindings") || !doc["bindings"].is_object()) {
        throw FormatError("bindings document needs a 'bindings' object");
    }
    for (const auto& [name, spec] : doc["bindings"].items()) {
        SourceBinding binding;
        binding.proposition = name;
        if (!spec.is_object() || !spec.contains("sources") ||
            !spec["sources"].is_array() || spec["sources"].empty()) {
            throw FormatError("binding '" + name +
                              "' needs a non-empty 'sources' array");
        }
        if (spec.contains("fusion")) {
            if (!spec["fusion"].is_string()) {
                throw FormatError("binding '" + name +
                                  "': 'fusion' must be a string");
            }
            binding.fusion =
                parse_fusion_operator(spec["fusion"].get<std::string>());
        }
        for (const auto& src : spec["sources"]) {
            SourceOpinion source;
            if (src.is_object() && src.contains("opinion")) {
                source.opinion = opinion_from_json(src["opinion"]);
                if (src.contains("referral_trust")) {
                    source.referral = opinion_from_json(src["referral_trust"]);
                }
                if (src.contains("name") && src["name"].is_string()) {
                    source.name = src["name"].get<std::string>();
                }
            } else {
                // A bare opinion record is accepted as a source.
                source.opinion = opinion_from_json(src);
            }
            binding.sources.push_back(std::move(source));
        }
        out.bindings.push_back(std::move(binding));
    }
    return out;
}

BindingsDocument load_bindings(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open bindings file '" + path + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("invalid bindings JSON: ") + e.what());
    }
    return parse_bindings(doc);
}

std::string file_sha256(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError("cannot open '" + path + "' for digest");
    }
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    char buf[16384];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, digest, &len);
    EVP_MD_CTX_free(ctx);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xF];
    }
    return out;
}

}  // namespace sltrust

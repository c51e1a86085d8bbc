#include "sltrust/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <istream>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace sltrust {

namespace {

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::uint64_t parse_count(const std::string& text, std::size_t line_no) {
    const std::string t = trim(text);
    if (t.empty()) {
        throw FormatError("line " + std::to_string(line_no) + ": empty count");
    }
    if (t[0] == '-') {
        throw FormatError("line " + std::to_string(line_no) +
                          ": negative count '" + t + "'");
    }
    std::uint64_t value = 0;
    for (char c : t) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw FormatError("line " + std::to_string(line_no) +
                              ": count '" + t + "' is not a non-negative integer");
        }
        const auto digit = static_cast<std::uint64_t>(c - '0');
        if (value > (UINT64_MAX - digit) / 10) {
            throw FormatError("line " + std::to_string(line_no) +
                              ": count '" + t + "' is out of range");
        }
        value = value * 10 + digit;
    }
    return value;
}

ClassDistribution load_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) {
        throw EmptyDataset("counts file is empty");
    }
    ++line_no;
    // Strip a UTF-8 BOM if present.
    if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (trim(line) != "class_id,count") {
        throw FormatError("expected header 'class_id,count', got '" +
                          trim(line) + "'");
    }
    std::vector<std::string> schema;
    std::vector<std::uint64_t> counts;
    std::unordered_set<std::string> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw FormatError("line " + std::to_string(line_no) +
                              ": expected 'class_id,count'");
        }
        std::string id = trim(line.substr(0, comma));
        if (id.empty()) {
            throw FormatError("line " + std::to_string(line_no) +
                              ": empty class id");
        }
        if (!seen.insert(id).second) {
            throw FormatError("line " + std::to_string(line_no) +
                              ": duplicate class id '" + id + "'");
        }
        schema.push_back(std::move(id));
        counts.push_back(parse_count(line.substr(comma + 1), line_no));
    }
    if (schema.empty()) {
        throw EmptyDataset("counts file declares no classes");
    }
    return make_distribution(std::move(schema), std::move(counts));
}

ClassDistribution load_json(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    // Duplicate keys would silently collapse after parsing, so detect them
    // during the parse callback.
    std::vector<std::unordered_set<std::string>> key_stack;
    bool duplicate = false;
    std::string duplicate_key;
    auto callback = [&](int depth, nlohmann::ordered_json::parse_event_t event,
                        nlohmann::ordered_json& parsed) {
        using event_t = nlohmann::ordered_json::parse_event_t;
        if (event == event_t::object_start) {
            key_stack.emplace_back();
        } else if (event == event_t::object_end) {
            key_stack.pop_back();
        } else if (event == event_t::key && !key_stack.empty()) {
            const std::string key = parsed.get<std::string>();
            if (!key_stack.back().insert(key).second && !duplicate) {
                duplicate = true;
                duplicate_key = key;
            }
        }
        (void)depth;
        return true;
    };

    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(text, callback);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    if (duplicate) {
        throw FormatError("duplicate class id '" + duplicate_key + "'");
    }
    if (!doc.is_object() || !doc.contains("classes") ||
        !doc["classes"].is_object()) {
        throw FormatError("expected {\"classes\": {<id>: <count>, ...}}");
    }
    std::vector<std::string> schema;
    std::vector<std::uint64_t> counts;
    for (auto& [key, value] : doc["classes"].items()) {
        if (!value.is_number_integer() || value.is_number_float()) {
            throw FormatError("count for class '" + key +
                              "' is not an integer");
        }
        if (value.is_number_integer() && !value.is_number_unsigned() &&
            value.get<std::int64_t>() < 0) {
            throw FormatError("negative count for class '" + key + "'");
        }
        schema.push_back(key);
        counts.push_back(value.get<std::uint64_t>());
    }
    if (schema.empty()) {
        throw EmptyDataset("counts document declares no classes");
    }
    return make_distribution(std::move(schema), std::move(counts));
}

}  // namespace

std::uint64_t ClassDistribution::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

ClassDistribution make_distribution(std::vector<std::string> schema,
                                    std::vector<std::uint64_t> counts) {
    if (schema.size() != counts.size()) {
        throw ValidationError("schema and counts differ in length");
    }
    if (schema.empty()) {
        throw EmptyDataset("distribution declares no classes");
    }
    std::unordered_set<std::string> seen;
    for (const auto& id : schema) {
        if (id.empty()) throw ValidationError("empty class id");
        if (!seen.insert(id).second) {
            throw ValidationError("duplicate class id '" + id + "'");
        }
    }
    return ClassDistribution{std::move(schema), std::move(counts)};
}

ClassDistribution load_class_counts(std::istream& source,
                                    CountsFormat format) {
    return format == CountsFormat::Csv ? load_csv(source) : load_json(source);
}

ClassDistribution load_class_counts(const std::string& text,
                                    CountsFormat format) {
    std::istringstream in(text);
    return load_class_counts(in, format);
}

ClassDistribution load_class_counts_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open counts file '" + path + "'");
    }
    const auto ext = std::filesystem::path(path).extension().string();
    return load_class_counts(
        in, ext == ".json" ? CountsFormat::Json : CountsFormat::Csv);
}

ProbabilityVector class_probabilities(const ClassDistribution& d) {
    const double n = static_cast<double>(d.total());
    if (n == 0.0) {
        throw EmptyDataset("distribution holds no samples");
    }
    ProbabilityVector p;
    p.schema = d.schema;
    p.values.reserve(d.counts.size());
    for (auto c : d.counts) {
        p.values.push_back(static_cast<double>(c) / n);
    }
    return p;
}

std::vector<ClassDistribution> split_stratified(const ClassDistribution& d,
                                                std::size_t n_parts,
                                                std::uint64_t seed) {
    if (n_parts == 0) {
        throw ParameterError("number of parts must be >= 1");
    }
    std::vector<ClassDistribution> parts(n_parts);
    for (auto& part : parts) {
        part.schema = d.schema;
        part.counts.assign(d.counts.size(), 0);
    }
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> order(n_parts);
    for (std::size_t k = 0; k < d.counts.size(); ++k) {
        const std::uint64_t base = d.counts[k] / n_parts;
        const std::size_t rem = static_cast<std::size_t>(d.counts[k] % n_parts);
        for (auto& part : parts) part.counts[k] = base;
        // Seeded partial Fisher-Yates picks which parts take the remainder.
        // Hand-rolled so the assignment is identical across platforms.
        std::iota(order.begin(), order.end(), std::size_t{0});
        for (std::size_t i = 0; i < rem; ++i) {
            const std::size_t j =
                i + static_cast<std::size_t>(rng() % (n_parts - i));
            std::swap(order[i], order[j]);
            ++parts[order[i]].counts[k];
        }
    }
    return parts;
}

ClassDistribution remove_classes(const ClassDistribution& d,
                                 const std::set<std::string>& class_ids) {
    for (const auto& id : class_ids) {
        if (std::find(d.schema.begin(), d.schema.end(), id) ==
            d.schema.end()) {
            throw UnknownClass("class '" + id + "' not in schema");
        }
    }
    ClassDistribution out = d;
    for (std::size_t k = 0; k < out.schema.size(); ++k) {
        if (class_ids.count(out.schema[k])) out.counts[k] = 0;
    }
    return out;
}

ClassDistribution merge(const std::vector<ClassDistribution>& parts) {
    if (parts.empty()) {
        throw EmptyDataset("nothing to merge");
    }
    ClassDistribution out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i].schema != out.schema) {
            throw SchemaMismatch("part " + std::to_string(i) +
                                 " has a different schema");
        }
        for (std::size_t k = 0; k < out.counts.size(); ++k) {
            out.counts[k] += parts[i].counts[k];
        }
    }
    return out;
}

}  // namespace sltrust

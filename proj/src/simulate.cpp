#include "sltrust/simulate.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

namespace sltrust {

namespace {

void append_double(std::string& out, double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, res.ptr);
}

std::size_t parse_size(const std::string& text) {
    std::size_t value = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw ParameterError("invalid integer '" + text + "'");
    }
    return value;
}

}  // namespace

std::vector<SweepPoint> run_sweep(const SimConfig& cfg) {
    validate(cfg.bias);
    if (cfg.n_oems == 0) {
        throw ParameterError("need at least one contributor");
    }
    if (!std::is_sorted(cfg.k_values.begin(), cfg.k_values.end())) {
        throw ParameterError("k values must be sorted ascending");
    }
    for (std::size_t k : cfg.k_values) {
        if (k > cfg.n_oems) {
            throw ParameterError("k = " + std::to_string(k) +
                                 " exceeds the number of contributors");
        }
    }
    const std::vector<ClassDistribution> split =
        split_stratified(cfg.base_distribution, cfg.n_oems, cfg.seed);

    std::vector<SweepPoint> points;
    points.reserve(cfg.k_values.size());
    for (std::size_t k : cfg.k_values) {
        std::vector<ClassDistribution> parts = split;
        for (std::size_t i = 0; i < k; ++i) {
            parts[i] = remove_classes(parts[i], cfg.imbalance_class_ids);
        }
        SweepPoint point;
        point.k = k;
        point.method2 = assess_bias_method2(parts, cfg.bias).opinion;
        const ClassDistribution merged = merge(parts);
        point.merged_total = merged.total();
        point.method1 = assess_bias_method1(merged, cfg.bias).opinion;
        points.push_back(point);
    }
    return points;
}

std::string sweep_to_csv(const std::vector<SweepPoint>& points) {
    std::string out = "k,method,belief,disbelief,uncertainty,n_total\n";
    for (const auto& p : points) {
        for (int method = 1; method <= 2; ++method) {
            const Opinion& op = method == 1 ? p.method1 : p.method2;
            out += std::to_string(p.k);
            out += ',';
            out += std::to_string(method);
            out += ',';
            append_double(out, op.belief);
            out += ',';
            append_double(out, op.disbelief);
            out += ',';
            append_double(out, op.uncertainty);
            out += ',';
            out += std::to_string(p.merged_total);
            out += '\n';
        }
    }
    return out;
}

std::vector<SweepPoint> sweep_from_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) ||
        line != "k,method,belief,disbelief,uncertainty,n_total") {
        throw FormatError("expected sweep CSV header");
    }
    std::vector<SweepPoint> points;
    auto point_for = [&points](std::size_t k,
                               std::uint64_t n_total) -> SweepPoint& {
        if (points.empty() || points.back().k != k) {
            points.push_back(SweepPoint{k, {}, {}, n_total});
        }
        return points.back();
    };
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(row, field, ',')) fields.push_back(field);
        if (fields.size() != 6) {
            throw FormatError("line " + std::to_string(line_no) +
                              ": expected 6 fields");
        }
        const std::size_t k = parse_size(fields[0]);
        const int method = static_cast<int>(parse_size(fields[1]));
        const double b = std::stod(fields[2]);
        const double d = std::stod(fields[3]);
        const double u = std::stod(fields[4]);
        const std::uint64_t n = parse_size(fields[5]);
        SweepPoint& point = point_for(k, n);
        const Opinion op{b, d, u, 0.5};
        if (method == 1) {
            point.method1 = op;
        } else if (method == 2) {
            point.method2 = op;
        } else {
            throw FormatError("line " + std::to_string(line_no) +
                              ": method must be 1 or 2");
        }
    }
    return points;
}

std::vector<std::size_t> parse_k_values(const std::string& spec) {
    std::vector<std::size_t> values;
    const auto dots = spec.find("..");
    if (dots != std::string::npos) {
        const std::string start_s = spec.substr(0, dots);
        std::string rest = spec.substr(dots + 2);
        std::size_t step = 1;
        const auto dots2 = rest.find("..");
        if (dots2 != std::string::npos) {
            step = parse_size(rest.substr(dots2 + 2));
            rest = rest.substr(0, dots2);
            if (step == 0) throw ParameterError("step must be >= 1");
        }
        const std::size_t start = parse_size(start_s);
        const std::size_t stop = parse_size(rest);
        if (stop < start) throw ParameterError("range stop before start");
        for (std::size_t k = start; k <= stop; k += step) {
            values.push_back(k);
            if (k > stop - step) break;  // overflow guard for k + step
        }
        return values;
    }
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) values.push_back(parse_size(item));
    }
    if (values.empty()) {
        throw ParameterError("empty k specification '" + spec + "'");
    }
    return values;
}

}  // namespace sltrust

// sltrust command line: dataset trust quantification with subjective logic.
//
// Subcommands: quantify, assess, simulate, plot, eval, fuse.
// Exit codes: 0 success, 1 domain/computation error, 2 usage error.

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sltrust/bias.hpp"
#include "sltrust/dataset.hpp"
#include "sltrust/opinion.hpp"
#include "sltrust/proposition.hpp"
#include "sltrust/quantify.hpp"
#include "sltrust/serialize.hpp"
#include "sltrust/simulate.hpp"
#include "svg.hpp"

namespace {

using sltrust::json;

// Signals a usage problem detected after flag parsing (exit code 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat dotted-key view of the JSON config file plus --set overrides.
// Named flags are applied after these, so flags win.
class RunConfig {
public:
    void load_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) {
            throw UsageError("cannot open config file '" + path + "'");
        }
        json doc;
        try {
            doc = json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw UsageError(std::string("invalid config JSON: ") + e.what());
        }
        flatten("", doc);
        base_dir_ = std::filesystem::path(path).parent_path().string();
    }

    // File paths read from the config resolve against the config file's
    // directory; paths from flags keep their working-directory meaning.
    std::string resolve_path(const std::string& value) const {
        std::filesystem::path p(value);
        if (p.is_absolute() || base_dir_.empty()) return value;
        return (std::filesystem::path(base_dir_) / p).string();
    }

    void apply_set(const std::string& kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw UsageError("--set expects key=value, got '" + kv + "'");
        }
        const std::string key = kv.substr(0, eq);
        const std::string raw = kv.substr(eq + 1);
        json value = json::parse(raw, nullptr, false);
        if (value.is_discarded()) value = raw;  // keep as plain string
        values_[key] = value;
    }

    bool has(const std::string& key) const { return values_.count(key) > 0; }

    double number(const std::string& key, double fallback) const {
        auto it = values_.find(key);
        if (it == values_.end()) return fallback;
        if (it->second.is_number()) return it->second.get<double>();
        if (it->second.is_string()) {
            try {
                return std::stod(it->second.get<std::string>());
            } catch (...) {
            }
        }
        throw UsageError("config key '" + key + "' is not a number");
    }

    std::optional<double> maybe_number(const std::string& key) const {
        if (!has(key)) return std::nullopt;
        return number(key, 0.0);
    }

    std::string text(const std::string& key, const std::string& fallback) const {
        auto it = values_.find(key);
        if (it == values_.end()) return fallback;
        if (it->second.is_string()) return it->second.get<std::string>();
        return it->second.dump();
    }

    std::vector<std::string> list(const std::string& key) const {
        auto it = values_.find(key);
        std::vector<std::string> out;
        if (it == values_.end()) return out;
        if (it->second.is_array()) {
            for (const auto& v : it->second) {
                out.push_back(v.is_string() ? v.get<std::string>() : v.dump());
            }
            return out;
        }
        if (it->second.is_string()) {
            std::istringstream in(it->second.get<std::string>());
            std::string item;
            while (std::getline(in, item, ',')) {
                if (!item.empty()) out.push_back(item);
            }
            return out;
        }
        throw UsageError("config key '" + key + "' is not a list");
    }

private:
    void flatten(const std::string& prefix, const json& doc) {
        if (doc.is_object()) {
            for (const auto& [key, value] : doc.items()) {
                const std::string full =
                    prefix.empty() ? key : prefix + "." + key;
                if (value.is_object()) {
                    flatten(full, value);
                } else {
                    values_[full] = value;
                }
            }
        }
    }

    std::map<std::string, json> values_;
    std::string base_dir_;
};

struct CommonFlags {
    std::string config_path;
    std::vector<std::string> sets;
    std::string out_path;
    bool pretty = false;

    RunConfig build() const {
        RunConfig rc;
        if (!config_path.empty()) rc.load_file(config_path);
        for (const auto& kv : sets) rc.apply_set(kv);
        return rc;
    }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "JSON config file");
    cmd->add_option("--set", flags.sets,
                    "dotted-key config override, e.g. --set bias.eta1=0.03");
    cmd->add_option("--out", flags.out_path, "write output here instead of stdout");
    cmd->add_flag("--pretty", flags.pretty, "human-readable summary output");
}

void emit(const CommonFlags& flags, const std::string& payload) {
    if (flags.out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(flags.out_path, std::ios::binary);
        if (!out) {
            throw UsageError("cannot open output file '" + flags.out_path + "'");
        }
        out << payload;
    }
}

std::string pretty_opinion(const sltrust::Opinion& op) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "belief=%.6f disbelief=%.6f uncertainty=%.6f base_rate=%.6f "
                  "projected=%.6f",
                  op.belief, op.disbelief, op.uncertainty, op.base_rate,
                  sltrust::projected_probability(op));
    return buf;
}

// Bias flag bundle shared by assess / simulate / plot-eta.
struct BiasFlags {
    double eta = 0.0, eta1 = 0.0, eta2 = 0.0;
    double prior_weight = 0.0, base_rate = 0.0;
    double pin_u = 0.0, m1 = 0.0, m2 = 0.0;
    double vc = 0.0, epsilon = 0.0, delta = 0.0, ns = 0.0;
    double log_base_u = 0.0, log_base_h = 0.0, tau = 0.0;
    CLI::App* cmd = nullptr;

    void add(CLI::App* c) {
        cmd = c;
        c->add_option("--eta", eta, "symmetric tolerance (sets eta1 and eta2)");
        c->add_option("--eta1", eta1, "lower tolerance-zone width");
        c->add_option("--eta2", eta2, "upper tolerance-zone width");
        c->add_option("-W,--prior-weight", prior_weight, "prior weight W");
        c->add_option("-a,--base-rate", base_rate, "base rate");
        c->add_option("-U,--uncertainty", pin_u,
                      "pin the method-1 uncertainty (sets m1 = m2 = U)");
        c->add_option("--m1", m1, "minimum uncertainty");
        c->add_option("--m2", m2, "maximum uncertainty");
        c->add_option("--vc", vc, "VC dimension");
        c->add_option("--epsilon", epsilon, "PAC accuracy parameter");
        c->add_option("--delta", delta, "PAC failure probability");
        c->add_option("--Ns", ns, "sample complexity override");
        c->add_option("--log-base-u", log_base_u, "uncertainty log base");
        c->add_option("--log-base-h", log_base_h, "entropy log base");
        c->add_option("--tau", tau, "evidence weight decay scale");
    }

    sltrust::BiasConfig build(const RunConfig& rc) const {
        sltrust::BiasConfig cfg;
        cfg.eta1 = rc.number("bias.eta1", cfg.eta1);
        cfg.eta2 = rc.number("bias.eta2", cfg.eta2);
        cfg.prior_weight = rc.number("bias.prior_weight", cfg.prior_weight);
        cfg.base_rate = rc.number("bias.base_rate", cfg.base_rate);
        cfg.min_uncertainty = rc.number("bias.min_uncertainty", cfg.min_uncertainty);
        cfg.max_uncertainty = rc.number("bias.max_uncertainty", cfg.max_uncertainty);
        cfg.vc_dimension = rc.number("bias.vc_dimension", cfg.vc_dimension);
        cfg.epsilon = rc.number("bias.epsilon", cfg.epsilon);
        cfg.delta = rc.number("bias.delta", cfg.delta);
        cfg.uncertainty_log_base =
            rc.number("bias.uncertainty_log_base", cfg.uncertainty_log_base);
        cfg.entropy_log_base =
            rc.number("bias.entropy_log_base", cfg.entropy_log_base);
        if (auto v = rc.maybe_number("bias.evidence_weight_scale")) {
            cfg.evidence_weight_scale = v;
        }
        if (auto v = rc.maybe_number("bias.sample_complexity")) {
            cfg.sample_complexity = v;
        }
        if (cmd->count("--eta")) cfg.eta1 = cfg.eta2 = eta;
        if (cmd->count("--eta1")) cfg.eta1 = eta1;
        if (cmd->count("--eta2")) cfg.eta2 = eta2;
        if (cmd->count("--prior-weight")) cfg.prior_weight = prior_weight;
        if (cmd->count("--base-rate")) cfg.base_rate = base_rate;
        if (cmd->count("--m1")) cfg.min_uncertainty = m1;
        if (cmd->count("--m2")) cfg.max_uncertainty = m2;
        if (cmd->count("--uncertainty")) {
            cfg.min_uncertainty = cfg.max_uncertainty = pin_u;
        }
        if (cmd->count("--vc")) cfg.vc_dimension = vc;
        if (cmd->count("--epsilon")) cfg.epsilon = epsilon;
        if (cmd->count("--delta")) cfg.delta = delta;
        if (cmd->count("--Ns")) cfg.sample_complexity = ns;
        if (cmd->count("--log-base-u")) cfg.uncertainty_log_base = log_base_u;
        if (cmd->count("--log-base-h")) cfg.entropy_log_base = log_base_h;
        if (cmd->count("--tau")) cfg.evidence_weight_scale = tau;
        return cfg;
    }
};

json input_record(const std::string& name, const std::string& path,
                  const sltrust::ClassDistribution& d) {
    return json{{"name", name},
                {"path", path},
                {"sha256", sltrust::file_sha256(path)},
                {"n_total", d.total()},
                {"n_classes", d.num_classes()}};
}

// ---------------------------------------------------------------- quantify

int cmd_quantify(const CommonFlags& common, const std::string& model,
                 CLI::App* cmd, double r, double s, double w, double W,
                 double a, double r_frac, double s_frac, double fixed_u) {
    const RunConfig rc = common.build();
    sltrust::QuantConfig qc;
    qc.prior_weight = rc.number("quant.prior_weight", qc.prior_weight);
    qc.base_rate = rc.number("quant.base_rate", qc.base_rate);
    if (cmd->count("--prior-weight")) qc.prior_weight = W;
    if (cmd->count("--base-rate")) qc.base_rate = a;

    sltrust::Opinion op;
    json evidence;
    if (model == "baseline") {
        op = sltrust::quantify_baseline(sltrust::make_evidence(r, s), qc);
        evidence = {{"positive", r}, {"negative", s}};
    } else if (model == "weighted") {
        if (!cmd->count("--weight")) {
            throw UsageError("MissingWeight: --model weighted requires -w");
        }
        op = sltrust::quantify_weighted(sltrust::make_evidence(r, s, w), qc);
        evidence = {{"positive", r}, {"negative", s}, {"weight", w}};
    } else if (model == "constant-u") {
        if (!cmd->count("--r-frac") || !cmd->count("--s-frac") ||
            !cmd->count("--uncertainty")) {
            throw UsageError(
                "--model constant-u requires --r-frac, --s-frac and -U");
        }
        op = sltrust::quantify_constant_u(r_frac, s_frac, fixed_u, qc);
        evidence = {{"r_frac", r_frac}, {"s_frac", s_frac}, {"U", fixed_u}};
    } else {
        throw UsageError("unknown model '" + model + "'");
    }

    if (common.pretty) {
        emit(common, "model " + model + "\n" + pretty_opinion(op) + "\n");
        return 0;
    }
    json doc{{"command", "quantify"},
             {"model", model},
             {"config", {{"prior_weight", qc.prior_weight},
                         {"base_rate", qc.base_rate}}},
             {"evidence", evidence},
             {"opinion", sltrust::opinion_to_json(op)}};
    emit(common, doc.dump(2));
    return 0;
}

// ------------------------------------------------------------------ assess

struct NamedPart {
    std::string name;
    std::string path;
    sltrust::ClassDistribution distribution;
};

std::vector<NamedPart> gather_inputs(const std::vector<std::string>& counts,
                                     const std::string& manifest) {
    std::vector<NamedPart> parts;
    for (const auto& path : counts) {
        parts.push_back(
            NamedPart{path, path, sltrust::load_class_counts_file(path)});
    }
    if (!manifest.empty()) {
        for (auto& src : sltrust::load_manifest(manifest)) {
            parts.push_back(
                NamedPart{src.name, src.path, std::move(src.distribution)});
        }
    }
    if (parts.empty()) {
        throw UsageError("assess needs --counts and/or --manifest");
    }
    return parts;
}

int cmd_assess(const CommonFlags& common, int method, const BiasFlags& bias,
               const std::vector<std::string>& counts,
               const std::string& manifest, const std::string& mode_name) {
    const RunConfig rc = common.build();
    const sltrust::BiasConfig cfg = bias.build(rc);
    const std::vector<NamedPart> parts = gather_inputs(counts, manifest);

    json inputs = json::array();
    for (const auto& p : parts) {
        inputs.push_back(input_record(p.name, p.path, p.distribution));
    }

    json doc{{"command", "assess"},
             {"method", method},
             {"config", sltrust::bias_config_to_json(cfg)},
             {"inputs", inputs}};

    sltrust::Opinion op;
    std::string summary;
    if (method == 1) {
        std::vector<sltrust::ClassDistribution> dists;
        for (const auto& p : parts) dists.push_back(p.distribution);
        const sltrust::ClassDistribution merged = sltrust::merge(dists);
        const sltrust::Method1Result res = sltrust::assess_bias_method1(merged, cfg);
        op = res.opinion;
        doc["evidence"] = {{"n_classes", res.n_classes},
                           {"n_in_zone", res.evidence.in_zone},
                           {"r_frac", res.evidence.r_frac},
                           {"s_frac", res.evidence.s_frac},
                           {"zone_lower", res.evidence.zone_lower},
                           {"zone_upper", res.evidence.zone_upper}};
        doc["n_total"] = res.n_total;
        doc["sample_complexity"] = res.sample_complexity;
        doc["uncertainty"] = res.uncertainty;
        char buf[128];
        std::snprintf(buf, sizeof(buf), "method 1: %zu of %zu classes in zone, U=%.6f\n",
                      res.evidence.in_zone, res.n_classes, res.uncertainty);
        summary = buf;
    } else if (method == 2) {
        sltrust::Method2Mode mode = sltrust::Method2Mode::Baseline;
        if (mode_name == "evidence-weighted") {
            mode = sltrust::Method2Mode::EvidenceWeighted;
        } else if (mode_name != "baseline") {
            throw UsageError("unknown mode '" + mode_name + "'");
        }
        std::vector<sltrust::ClassDistribution> dists;
        for (const auto& p : parts) dists.push_back(p.distribution);
        const sltrust::Method2Result res =
            sltrust::assess_bias_method2(dists, cfg, mode);
        op = res.opinion;
        doc["mode"] = mode_name;
        doc["threshold"] = res.threshold;
        doc["eta"] = res.eta;
        json verdicts = json::array();
        for (std::size_t i = 0; i < res.verdicts.size(); ++i) {
            const auto& v = res.verdicts[i];
            verdicts.push_back(json{{"name", parts[i].name},
                                    {"entropy", v.entropy},
                                    {"threshold", v.threshold},
                                    {"margin", v.margin},
                                    {"positive", v.positive}});
        }
        doc["parts"] = verdicts;
        json evidence{{"positive", res.positive}, {"negative", res.negative}};
        if (res.weight) evidence["weight"] = *res.weight;
        if (res.weight_scale) evidence["weight_scale"] = *res.weight_scale;
        doc["evidence"] = evidence;
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "method 2: r=%g s=%g threshold=%.6f over %zu parts\n",
                      res.positive, res.negative, res.threshold,
                      res.verdicts.size());
        summary = buf;
    } else {
        throw UsageError("--method must be 1 or 2");
    }

    doc["opinion"] = sltrust::opinion_to_json(op);
    if (common.pretty) {
        emit(common, summary + pretty_opinion(op) + "\n");
    } else {
        emit(common, doc.dump(2));
    }
    return 0;
}

// ---------------------------------------------------------------- simulate

int cmd_simulate(const CommonFlags& common, const BiasFlags& bias,
                 CLI::App* cmd, const std::string& counts_path,
                 std::size_t oems, const std::string& k_spec,
                 std::uint64_t seed, const std::string& remove_spec,
                 const std::string& report_path) {
    const RunConfig rc = common.build();
    sltrust::SimConfig cfg;
    cfg.bias = bias.build(rc);
    cfg.n_oems = static_cast<std::size_t>(rc.number("sim.oems", 100));
    cfg.seed = static_cast<std::uint64_t>(rc.number("sim.seed", 0));
    std::string k_text = rc.text("sim.k", "");
    std::string base_path = rc.text("sim.counts", "");
    std::vector<std::string> remove_ids = rc.list("sim.imbalance_classes");

    if (cmd->count("--oems")) cfg.n_oems = oems;
    if (cmd->count("--seed")) cfg.seed = seed;
    if (cmd->count("--k")) k_text = k_spec;
    if (cmd->count("--counts")) base_path = counts_path;
    if (cmd->count("--remove")) {
        remove_ids.clear();
        std::istringstream in(remove_spec);
        std::string item;
        while (std::getline(in, item, ',')) {
            if (!item.empty()) remove_ids.push_back(item);
        }
    }

    if (cfg.n_oems == 0) throw UsageError("--oems must be >= 1");
    if (base_path.empty()) throw UsageError("simulate needs --counts");
    if (!cmd->count("--counts")) base_path = rc.resolve_path(base_path);
    cfg.base_distribution = sltrust::load_class_counts_file(base_path);
    cfg.imbalance_class_ids.insert(remove_ids.begin(), remove_ids.end());
    cfg.k_values = k_text.empty()
                       ? sltrust::parse_k_values("0.." + std::to_string(cfg.n_oems))
                       : sltrust::parse_k_values(k_text);

    const std::vector<sltrust::SweepPoint> points = sltrust::run_sweep(cfg);
    const std::string csv = sltrust::sweep_to_csv(points);
    emit(common, csv);

    if (!report_path.empty()) {
        json remove_json = json::array();
        for (const auto& id : cfg.imbalance_class_ids) remove_json.push_back(id);
        // Per-part sizes, before and after class removal (the same seeded
        // split run_sweep used).
        json part_totals = json::array();
        json imbalanced_totals = json::array();
        for (const auto& part : sltrust::split_stratified(
                 cfg.base_distribution, cfg.n_oems, cfg.seed)) {
            part_totals.push_back(part.total());
            imbalanced_totals.push_back(
                sltrust::remove_classes(part, cfg.imbalance_class_ids).total());
        }
        json doc{{"command", "simulate"},
                 {"config", sltrust::bias_config_to_json(cfg.bias)},
                 {"oems", cfg.n_oems},
                 {"seed", cfg.seed},
                 {"k_values", cfg.k_values},
                 {"imbalance_classes", remove_json},
                 {"input", input_record(base_path, base_path,
                                        cfg.base_distribution)},
                 {"part_totals", part_totals},
                 {"part_totals_after_removal", imbalanced_totals},
                 {"rows", points.size() * 2}};
        std::ofstream out(report_path);
        if (!out) {
            throw UsageError("cannot open report file '" + report_path + "'");
        }
        out << doc.dump(2) << '\n';
    }
    return 0;
}

// -------------------------------------------------------------------- plot

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string csv_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

int cmd_plot(const CommonFlags& common, const BiasFlags& bias,
             const std::string& kind, const std::string& format,
             const std::string& input, std::size_t grid, double eta_min,
             double eta_max, double eta_step) {
    const RunConfig rc = common.build();
    std::string payload;
    if (kind == "density") {
        const auto dist = sltrust::load_class_counts_file(input);
        const auto samples =
            sltrust::kernel_density(sltrust::class_probabilities(dist), grid);
        if (format == "csv") {
            payload = "x,density\n";
            for (const auto& s : samples) {
                payload += csv_double(s.x) + "," + csv_double(s.density) + "\n";
            }
        } else {
            sltrust::SvgSeries series{"density", "#1f77b4", {}};
            for (const auto& s : samples) series.points.push_back({s.x, s.density});
            payload = sltrust::svg_line_chart("Class probability density",
                                              "class probability", "density",
                                              {series});
        }
    } else if (kind == "sweep") {
        const auto points = sltrust::sweep_from_csv(read_file(input));
        if (format == "csv") {
            payload =
                "k,m1_belief,m1_disbelief,m1_uncertainty,"
                "m2_belief,m2_disbelief,m2_uncertainty\n";
            for (const auto& p : points) {
                payload += std::to_string(p.k) + "," +
                           csv_double(p.method1.belief) + "," +
                           csv_double(p.method1.disbelief) + "," +
                           csv_double(p.method1.uncertainty) + "," +
                           csv_double(p.method2.belief) + "," +
                           csv_double(p.method2.disbelief) + "," +
                           csv_double(p.method2.uncertainty) + "\n";
            }
        } else {
            std::vector<sltrust::SvgSeries> series{
                {"method 1 belief", "#1f77b4", {}},
                {"method 1 disbelief", "#ff7f0e", {}},
                {"method 1 uncertainty", "#2ca02c", {}},
                {"method 2 belief", "#17becf", {}},
                {"method 2 disbelief", "#d62728", {}},
                {"method 2 uncertainty", "#9467bd", {}}};
            for (const auto& p : points) {
                const double k = static_cast<double>(p.k);
                series[0].points.push_back({k, p.method1.belief});
                series[1].points.push_back({k, p.method1.disbelief});
                series[2].points.push_back({k, p.method1.uncertainty});
                series[3].points.push_back({k, p.method2.belief});
                series[4].points.push_back({k, p.method2.disbelief});
                series[5].points.push_back({k, p.method2.uncertainty});
            }
            payload = sltrust::svg_line_chart(
                "Trust opinion vs imbalanced sub-datasets",
                "imbalanced sub-datasets (k)", "opinion mass", series);
        }
    } else if (kind == "eta") {
        if (!(eta_step > 0.0) || eta_max < eta_min || eta_min < 0.0) {
            throw UsageError("need 0 <= --eta-min <= --eta-max and --eta-step > 0");
        }
        const auto dist = sltrust::load_class_counts_file(input);
        const auto cfg = bias.build(rc);
        std::vector<double> etas;
        for (double e = eta_min; e <= eta_max + 1e-12; e += eta_step) {
            etas.push_back(e);
        }
        const auto curve = sltrust::sweep_eta(dist, etas, cfg);
        if (format == "csv") {
            payload = "eta,belief,disbelief,uncertainty\n";
            for (const auto& p : curve) {
                payload += csv_double(p.eta) + "," +
                           csv_double(p.opinion.belief) + "," +
                           csv_double(p.opinion.disbelief) + "," +
                           csv_double(p.opinion.uncertainty) + "\n";
            }
        } else {
            std::vector<sltrust::SvgSeries> series{
                {"belief", "#1f77b4", {}},
                {"disbelief", "#ff7f0e", {}},
                {"uncertainty", "#2ca02c", {}}};
            for (const auto& p : curve) {
                series[0].points.push_back({p.eta, p.opinion.belief});
                series[1].points.push_back({p.eta, p.opinion.disbelief});
                series[2].points.push_back({p.eta, p.opinion.uncertainty});
            }
            payload = sltrust::svg_line_chart("Effect of tolerance width",
                                              "eta", "opinion mass", series);
        }
    } else {
        throw UsageError("unknown plot kind '" + kind + "'");
    }
    emit(common, payload);
    return 0;
}

// -------------------------------------------------------------------- eval

int cmd_eval(const CommonFlags& common, const std::string& expr_text,
             const std::string& bindings_path) {
    if (bindings_path.empty()) {
        throw UsageError("eval needs --bindings");
    }
    const sltrust::BindingsDocument doc = sltrust::load_bindings(bindings_path);
    std::string text = expr_text;
    if (text.empty()) {
        if (!doc.proposition) {
            throw UsageError(
                "no proposition: pass one as an argument or in the bindings file");
        }
        text = *doc.proposition;
    }
    const sltrust::ExprPtr expr = sltrust::parse_proposition(text);
    const auto atoms = sltrust::resolve_sources(doc.bindings);
    const sltrust::Opinion op = sltrust::evaluate_proposition(expr, atoms);

    if (common.pretty) {
        std::string out = "proposition " + sltrust::to_string(expr) + "\n";
        for (const auto& [name, atom] : atoms) {
            out += "  " + name + ": " + pretty_opinion(atom) + "\n";
        }
        out += pretty_opinion(op) + "\n";
        emit(common, out);
        return 0;
    }
    json atoms_json = json::object();
    for (const auto& [name, atom] : atoms) {
        atoms_json[name] = sltrust::opinion_to_json(atom);
    }
    json out{{"command", "eval"},
             {"proposition", sltrust::to_string(expr)},
             {"atoms", atoms_json},
             {"opinion", sltrust::opinion_to_json(op)}};
    emit(common, out.dump(2));
    return 0;
}

// -------------------------------------------------------------------- fuse

int cmd_fuse(const CommonFlags& common, const std::vector<std::string>& paths,
             const std::string& op_name) {
    sltrust::FusionOperator op;
    try {
        op = sltrust::parse_fusion_operator(op_name);
    } catch (const sltrust::ParameterError& e) {
        throw UsageError(e.what());
    }
    std::vector<sltrust::Opinion> opinions;
    for (const auto& path : paths) {
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open opinion file '" + path + "'");
        json doc;
        try {
            doc = json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw sltrust::FormatError(std::string("invalid opinion JSON in '") +
                                       path + "': " + e.what());
        }
        // Accept either a bare record or a document with an "opinion" field.
        opinions.push_back(sltrust::opinion_from_json(
            doc.is_object() && doc.contains("opinion") ? doc["opinion"] : doc));
    }
    sltrust::Opinion acc = opinions.front();
    for (std::size_t i = 1; i < opinions.size(); ++i) {
        acc = sltrust::fuse(op, acc, opinions[i]);
    }
    if (common.pretty) {
        emit(common, op_name + " fusion of " + std::to_string(opinions.size()) +
                         " opinions\n" + pretty_opinion(acc) + "\n");
        return 0;
    }
    json doc{{"command", "fuse"},
             {"operator", op_name},
             {"inputs", paths},
             {"opinion", sltrust::opinion_to_json(acc)}};
    emit(common, doc.dump(2));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dataset trust quantification with subjective logic"};
    app.require_subcommand(1);

    // quantify
    auto* quantify = app.add_subcommand("quantify", "evidence to opinion");
    CommonFlags quantify_common;
    add_common(quantify, quantify_common);
    std::string model;
    double q_r = 0, q_s = 0, q_w = 0, q_W = 2.0, q_a = 0.5;
    double q_rf = 0, q_sf = 0, q_u = 0;
    quantify->add_option("--model", model, "baseline|weighted|constant-u")
        ->required();
    quantify->add_option("-r,--positive", q_r, "positive evidence");
    quantify->add_option("-s,--negative", q_s, "negative evidence");
    quantify->add_option("-w,--weight", q_w, "evidence uncertainty weight");
    quantify->add_option("-W,--prior-weight", q_W, "prior weight");
    quantify->add_option("-a,--base-rate", q_a, "base rate");
    quantify->add_option("--r-frac", q_rf, "positive evidence fraction");
    quantify->add_option("--s-frac", q_sf, "negative evidence fraction");
    quantify->add_option("-U,--uncertainty", q_u, "fixed uncertainty");

    // assess
    auto* assess = app.add_subcommand("assess", "dataset bias assessment");
    CommonFlags assess_common;
    add_common(assess, assess_common);
    int method = 0;
    std::vector<std::string> assess_counts;
    std::string assess_manifest;
    std::string assess_mode = "baseline";
    BiasFlags assess_bias;
    assess->add_option("--method", method, "1 (class probabilities) or 2 (entropy)")
        ->required();
    assess->add_option("--counts", assess_counts, "class-count file(s)");
    assess->add_option("--manifest", assess_manifest, "sub-dataset manifest");
    assess->add_option("--mode", assess_mode,
                       "method 2 quantification: baseline|evidence-weighted");
    assess_bias.add(assess);

    // simulate
    auto* simulate = app.add_subcommand("simulate", "federated imbalance sweep");
    CommonFlags sim_common;
    add_common(simulate, sim_common);
    std::string sim_counts, sim_k, sim_remove, sim_report;
    std::size_t sim_oems = 100;
    std::uint64_t sim_seed = 0;
    BiasFlags sim_bias;
    simulate->add_option("--counts", sim_counts, "base class-count file");
    simulate->add_option("--oems", sim_oems, "number of contributors");
    simulate->add_option("--k", sim_k, "imbalanced-part counts, e.g. 0..100");
    simulate->add_option("--seed", sim_seed, "split seed");
    simulate->add_option("--remove", sim_remove,
                         "comma-separated class ids removed from imbalanced parts");
    simulate->add_option("--report", sim_report, "also write a JSON run report");
    sim_bias.add(simulate);

    // plot
    auto* plot = app.add_subcommand("plot", "plot data or SVG charts");
    CommonFlags plot_common;
    add_common(plot, plot_common);
    std::string plot_kind, plot_format = "csv", plot_input;
    std::size_t plot_grid = 257;
    double eta_min = 0.0, eta_max = 0.05, eta_step = 0.0005;
    BiasFlags plot_bias;
    plot->add_option("--kind", plot_kind, "density|sweep|eta")->required();
    plot->add_option("--format", plot_format, "csv|svg");
    plot->add_option("--input", plot_input, "counts file or sweep CSV")
        ->required();
    plot->add_option("--grid", plot_grid, "density grid points");
    plot->add_option("--eta-min", eta_min, "eta sweep start");
    plot->add_option("--eta-max", eta_max, "eta sweep stop");
    plot->add_option("--eta-step", eta_step, "eta sweep step");
    plot_bias.add(plot);

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a trust proposition");
    CommonFlags eval_common;
    add_common(eval, eval_common);
    std::string eval_expr, eval_bindings;
    eval->add_option("expression", eval_expr, "proposition, e.g. \"A AND R\"");
    eval->add_option("--bindings", eval_bindings, "proposition bindings JSON");

    // fuse
    auto* fuse_cmd = app.add_subcommand("fuse", "fuse opinion records");
    CommonFlags fuse_common;
    add_common(fuse_cmd, fuse_common);
    std::vector<std::string> fuse_paths;
    std::string fuse_op = "cumulative";
    fuse_cmd->add_option("opinions", fuse_paths, "opinion JSON files (>= 2)");
    fuse_cmd->add_option("--op", fuse_op,
                         "cumulative|averaging|weighted|constraint");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (quantify->parsed()) {
            return cmd_quantify(quantify_common, model, quantify, q_r, q_s, q_w,
                                q_W, q_a, q_rf, q_sf, q_u);
        }
        if (assess->parsed()) {
            return cmd_assess(assess_common, method, assess_bias, assess_counts,
                              assess_manifest, assess_mode);
        }
        if (simulate->parsed()) {
            return cmd_simulate(sim_common, sim_bias, simulate, sim_counts,
                                sim_oems, sim_k, sim_seed, sim_remove,
                                sim_report);
        }
        if (plot->parsed()) {
            if (plot_format != "csv" && plot_format != "svg") {
                throw UsageError("unknown format '" + plot_format + "'");
            }
            return cmd_plot(plot_common, plot_bias, plot_kind, plot_format,
                            plot_input, plot_grid, eta_min, eta_max, eta_step);
        }
        if (eval->parsed()) {
            return cmd_eval(eval_common, eval_expr, eval_bindings);
        }
        if (fuse_cmd->parsed()) {
            if (fuse_paths.size() < 2) {
                throw UsageError("fuse needs at least two opinion files");
            }
            return cmd_fuse(fuse_common, fuse_paths, fuse_op);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const sltrust::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

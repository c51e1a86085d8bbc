#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sltrust/bias.hpp"
#include "sltrust/dataset.hpp"
#include "sltrust/opinion.hpp"
#include "sltrust/proposition.hpp"
#include "sltrust/quantify.hpp"
#include "sltrust/simulate.hpp"

namespace py = pybind11;
using namespace sltrust;

namespace {

std::string opinion_repr(const Opinion& op) {
    std::ostringstream out;
    out << "Opinion(belief=" << op.belief << ", disbelief=" << op.disbelief
        << ", uncertainty=" << op.uncertainty << ", base_rate=" << op.base_rate
        << ")";
    return out.str();
}

BiasConfig bias_config_from_kwargs(
    double eta1, double eta2, double prior_weight, double base_rate,
    double min_uncertainty, double max_uncertainty, double vc_dimension,
    double epsilon, double delta, double uncertainty_log_base,
    double entropy_log_base, std::optional<double> evidence_weight_scale,
    std::optional<double> sample_complexity) {
    BiasConfig cfg;
    cfg.eta1 = eta1;
    cfg.eta2 = eta2;
    cfg.prior_weight = prior_weight;
    cfg.base_rate = base_rate;
    cfg.min_uncertainty = min_uncertainty;
    cfg.max_uncertainty = max_uncertainty;
    cfg.vc_dimension = vc_dimension;
    cfg.epsilon = epsilon;
    cfg.delta = delta;
    cfg.uncertainty_log_base = uncertainty_log_base;
    cfg.entropy_log_base = entropy_log_base;
    cfg.evidence_weight_scale = evidence_weight_scale;
    cfg.sample_complexity = sample_complexity;
    validate(cfg);
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dataset trust quantification with subjective logic";

    py::register_exception<Error>(m, "SltrustError");

    py::class_<Opinion>(m, "Opinion")
        .def(py::init([](double b, double d, double u, double a) {
                 return make_opinion(b, d, u, a);
             }),
             py::arg("belief"), py::arg("disbelief"), py::arg("uncertainty"),
             py::arg("base_rate") = 0.5)
        .def_readonly("belief", &Opinion::belief)
        .def_readonly("disbelief", &Opinion::disbelief)
        .def_readonly("uncertainty", &Opinion::uncertainty)
        .def_readonly("base_rate", &Opinion::base_rate)
        .def_property_readonly("projected_probability",
                               [](const Opinion& op) {
                                   return projected_probability(op);
                               })
        .def("__repr__", &opinion_repr);

    py::class_<Evidence>(m, "Evidence")
        .def(py::init([](double positive, double negative,
                         std::optional<double> weight) {
                 return make_evidence(positive, negative, weight);
             }),
             py::arg("positive"), py::arg("negative"),
             py::arg("weight") = py::none())
        .def_readonly("positive", &Evidence::positive)
        .def_readonly("negative", &Evidence::negative)
        .def_readonly("weight", &Evidence::weight);

    m.def("vacuous_opinion", &vacuous_opinion, py::arg("base_rate") = 0.5);
    m.def("negate", &negate, py::arg("opinion"));
    m.def("conjunction", &conjunction, py::arg("x"), py::arg("y"));
    m.def("disjunction", &disjunction, py::arg("x"), py::arg("y"));
    m.def("discount", &discount, py::arg("referral"), py::arg("target"));
    m.def("to_evidence", &to_evidence, py::arg("opinion"),
          py::arg("prior_weight") = 2.0);
    m.def("fuse_cumulative", &fuse_cumulative, py::arg("p"), py::arg("q"));
    m.def("fuse_averaging", &fuse_averaging, py::arg("p"), py::arg("q"));
    m.def("fuse_weighted", &fuse_weighted, py::arg("p"), py::arg("q"));
    m.def("fuse_constraint", &fuse_constraint, py::arg("p"), py::arg("q"));
    m.def(
        "fuse",
        [](const std::string& op, const Opinion& p, const Opinion& q) {
            return fuse(parse_fusion_operator(op), p, q);
        },
        py::arg("operator"), py::arg("p"), py::arg("q"));

    m.def(
        "quantify_baseline",
        [](double r, double s, double prior_weight, double base_rate) {
            return quantify_baseline(make_evidence(r, s),
                                     QuantConfig{prior_weight, base_rate});
        },
        py::arg("positive"), py::arg("negative"), py::arg("prior_weight") = 2.0,
        py::arg("base_rate") = 0.5);
    m.def(
        "quantify_weighted",
        [](double r, double s, double weight, double base_rate) {
            return quantify_weighted(make_evidence(r, s, weight),
                                     QuantConfig{2.0, base_rate});
        },
        py::arg("positive"), py::arg("negative"), py::arg("weight"),
        py::arg("base_rate") = 0.5);
    m.def(
        "quantify_constant_u",
        [](double r_frac, double s_frac, double uncertainty, double base_rate) {
            return quantify_constant_u(r_frac, s_frac, uncertainty,
                                       QuantConfig{2.0, base_rate});
        },
        py::arg("r_frac"), py::arg("s_frac"), py::arg("uncertainty"),
        py::arg("base_rate") = 0.5);

    py::class_<ClassDistribution>(m, "ClassDistribution")
        .def(py::init(
                 [](std::vector<std::string> schema,
                    std::vector<std::uint64_t> counts) {
                     return make_distribution(std::move(schema),
                                              std::move(counts));
                 }),
             py::arg("schema"), py::arg("counts"))
        .def_readonly("schema", &ClassDistribution::schema)
        .def_readonly("counts", &ClassDistribution::counts)
        .def_property_readonly("total", &ClassDistribution::total)
        .def_property_readonly("num_classes", &ClassDistribution::num_classes)
        .def("probabilities",
             [](const ClassDistribution& d) {
                 return class_probabilities(d).values;
             })
        .def("__repr__", [](const ClassDistribution& d) {
            std::ostringstream out;
            out << "ClassDistribution(classes=" << d.num_classes()
                << ", total=" << d.total() << ")";
            return out.str();
        });

    m.def("load_class_counts", &load_class_counts_file, py::arg("path"));
    m.def("split_stratified", &split_stratified, py::arg("distribution"),
          py::arg("n_parts"), py::arg("seed"));
    m.def(
        "remove_classes",
        [](const ClassDistribution& d, const std::vector<std::string>& ids) {
            return remove_classes(d,
                                  std::set<std::string>(ids.begin(), ids.end()));
        },
        py::arg("distribution"), py::arg("class_ids"));
    m.def("merge", &merge, py::arg("parts"));

    py::class_<BiasConfig>(m, "BiasConfig")
        .def(py::init(&bias_config_from_kwargs), py::arg("eta1") = 0.02,
             py::arg("eta2") = 0.02, py::arg("prior_weight") = 2.0,
             py::arg("base_rate") = 0.5, py::arg("min_uncertainty") = 0.0,
             py::arg("max_uncertainty") = 1.0, py::arg("vc_dimension") = 100.0,
             py::arg("epsilon") = 0.1, py::arg("delta") = 0.05,
             py::arg("uncertainty_log_base") = 10.0,
             py::arg("entropy_log_base") = 2.718281828459045,
             py::arg("evidence_weight_scale") = py::none(),
             py::arg("sample_complexity") = py::none())
        .def_readwrite("eta1", &BiasConfig::eta1)
        .def_readwrite("eta2", &BiasConfig::eta2)
        .def_readwrite("prior_weight", &BiasConfig::prior_weight)
        .def_readwrite("base_rate", &BiasConfig::base_rate)
        .def_readwrite("min_uncertainty", &BiasConfig::min_uncertainty)
        .def_readwrite("max_uncertainty", &BiasConfig::max_uncertainty)
        .def_readwrite("vc_dimension", &BiasConfig::vc_dimension)
        .def_readwrite("epsilon", &BiasConfig::epsilon)
        .def_readwrite("delta", &BiasConfig::delta)
        .def_readwrite("uncertainty_log_base", &BiasConfig::uncertainty_log_base)
        .def_readwrite("entropy_log_base", &BiasConfig::entropy_log_base)
        .def_readwrite("evidence_weight_scale",
                       &BiasConfig::evidence_weight_scale)
        .def_readwrite("sample_complexity", &BiasConfig::sample_complexity);

    py::class_<ToleranceEvidence>(m, "ToleranceEvidence")
        .def_readonly("in_zone", &ToleranceEvidence::in_zone)
        .def_readonly("r_frac", &ToleranceEvidence::r_frac)
        .def_readonly("s_frac", &ToleranceEvidence::s_frac)
        .def_readonly("zone_lower", &ToleranceEvidence::zone_lower)
        .def_readonly("zone_upper", &ToleranceEvidence::zone_upper);

    py::class_<EntropyVerdict>(m, "EntropyVerdict")
        .def_readonly("entropy", &EntropyVerdict::entropy)
        .def_readonly("threshold", &EntropyVerdict::threshold)
        .def_readonly("positive", &EntropyVerdict::positive)
        .def_readonly("margin", &EntropyVerdict::margin);

    py::class_<Method1Result>(m, "Method1Result")
        .def_readonly("evidence", &Method1Result::evidence)
        .def_readonly("sample_complexity", &Method1Result::sample_complexity)
        .def_readonly("uncertainty", &Method1Result::uncertainty)
        .def_readonly("n_total", &Method1Result::n_total)
        .def_readonly("n_classes", &Method1Result::n_classes)
        .def_readonly("opinion", &Method1Result::opinion);

    py::class_<Method2Result>(m, "Method2Result")
        .def_readonly("verdicts", &Method2Result::verdicts)
        .def_readonly("threshold", &Method2Result::threshold)
        .def_readonly("eta", &Method2Result::eta)
        .def_readonly("positive", &Method2Result::positive)
        .def_readonly("negative", &Method2Result::negative)
        .def_readonly("weight", &Method2Result::weight)
        .def_readonly("opinion", &Method2Result::opinion);

    m.def(
        "tolerance_evidence",
        [](const ClassDistribution& d, const BiasConfig& cfg) {
            return tolerance_evidence(class_probabilities(d), cfg);
        },
        py::arg("distribution"), py::arg("config") = BiasConfig{});
    m.def("sample_complexity", &sample_complexity, py::arg("config"));
    m.def("dataset_uncertainty", &dataset_uncertainty, py::arg("sample_complexity"),
          py::arg("n"), py::arg("config") = BiasConfig{});
    m.def("assess_method1", &assess_bias_method1, py::arg("distribution"),
          py::arg("config") = BiasConfig{});
    m.def(
        "entropy",
        [](const ClassDistribution& d, double log_base) {
            return entropy(class_probabilities(d), log_base);
        },
        py::arg("distribution"), py::arg("log_base") = 2.718281828459045);
    m.def(
        "entropy_threshold",
        [](std::size_t n_classes, double eta, double log_base) {
            const auto thr = entropy_threshold(n_classes, eta, log_base);
            return py::make_tuple(thr.threshold, thr.edge_distribution.values);
        },
        py::arg("n_classes"), py::arg("eta"),
        py::arg("log_base") = 2.718281828459045);
    m.def(
        "assess_method2",
        [](const std::vector<ClassDistribution>& parts, const BiasConfig& cfg,
           const std::string& mode) {
            if (mode == "baseline") {
                return assess_bias_method2(parts, cfg, Method2Mode::Baseline);
            }
            if (mode == "evidence-weighted") {
                return assess_bias_method2(parts, cfg,
                                           Method2Mode::EvidenceWeighted);
            }
            throw ParameterError("unknown mode '" + mode + "'");
        },
        py::arg("parts"), py::arg("config") = BiasConfig{},
        py::arg("mode") = "baseline");
    m.def(
        "sweep_eta",
        [](const ClassDistribution& d, const std::vector<double>& etas,
           const BiasConfig& cfg) {
            std::vector<py::tuple> out;
            for (const auto& point : sweep_eta(d, etas, cfg)) {
                out.push_back(py::make_tuple(point.eta, point.opinion));
            }
            return out;
        },
        py::arg("distribution"), py::arg("eta_values"),
        py::arg("config") = BiasConfig{});

    py::class_<PropositionExpr, std::shared_ptr<PropositionExpr>>(m,
                                                                  "Proposition")
        .def("__str__",
             [](const std::shared_ptr<PropositionExpr>& e) {
                 return to_string(e);
             })
        .def("variables",
             [](const std::shared_ptr<PropositionExpr>& e) {
                 return variables(e);
             })
        .def(
            "evaluate",
            [](const std::shared_ptr<PropositionExpr>& e,
               const std::map<std::string, Opinion>& opinions) {
                return evaluate_proposition(e, opinions);
            },
            py::arg("opinions"));

    m.def("parse_proposition",
          [](const std::string& text) {
              // The tree is immutable; share it with python as non-const.
              return std::const_pointer_cast<PropositionExpr>(
                  parse_proposition(text));
          },
          py::arg("text"));

    py::class_<SweepPoint>(m, "SweepPoint")
        .def_readonly("k", &SweepPoint::k)
        .def_readonly("method1", &SweepPoint::method1)
        .def_readonly("method2", &SweepPoint::method2)
        .def_readonly("merged_total", &SweepPoint::merged_total);

    m.def(
        "run_sweep",
        [](const ClassDistribution& base, std::size_t n_oems,
           const std::vector<std::string>& imbalance_class_ids,
           const std::vector<std::size_t>& k_values, std::uint64_t seed,
           const BiasConfig& cfg) {
            SimConfig sim;
            sim.base_distribution = base;
            sim.n_oems = n_oems;
            sim.imbalance_class_ids.insert(imbalance_class_ids.begin(),
                                           imbalance_class_ids.end());
            sim.k_values = k_values;
            sim.seed = seed;
            sim.bias = cfg;
            return run_sweep(sim);
        },
        py::arg("base_distribution"), py::arg("n_oems"),
        py::arg("imbalance_class_ids"), py::arg("k_values"), py::arg("seed") = 0,
        py::arg("config") = BiasConfig{});

    m.attr("__version__") = "0.1.0";
}

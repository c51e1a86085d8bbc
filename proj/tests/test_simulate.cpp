#include <doctest.h>

#include "helpers.hpp"
#include "sltrust/simulate.hpp"

using namespace sltrust;
using namespace sltrust::testing;

namespace {

ClassDistribution uniform6(std::uint64_t per_class) {
    return make_distribution({"0", "1", "2", "3", "4", "5"},
                             {per_class, per_class, per_class, per_class,
                              per_class, per_class});
}

SimConfig small_config() {
    SimConfig cfg;
    cfg.base_distribution = uniform6(600);
    cfg.n_oems = 10;
    cfg.imbalance_class_ids = {"0"};
    cfg.k_values = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    cfg.seed = 7;
    cfg.bias.min_uncertainty = 0.0;
    cfg.bias.max_uncertainty = 1.0;
    cfg.bias.sample_complexity = 3600.0;  // matches the base size, U = 0
    return cfg;
}

}  // namespace

TEST_CASE("federated sweep") {
    SUBCASE("method 2 is exactly linear in k for aggressive removal") {
        const SimConfig cfg = small_config();
        const auto points = run_sweep(cfg);
        REQUIRE(points.size() == 11);
        for (std::size_t k = 0; k <= 10; ++k) {
            CHECK(points[k].k == k);
            CHECK(points[k].method2.belief ==
                  (10.0 - static_cast<double>(k)) / 12.0);
            CHECK(points[k].method2.disbelief == static_cast<double>(k) / 12.0);
            CHECK(near(points[k].method2.uncertainty, 2.0 / 12, 0.0));
        }
    }
    SUBCASE("merged totals shrink as parts lose classes") {
        const auto points = run_sweep(small_config());
        CHECK(points.front().merged_total == 3600);
        CHECK(points.back().merged_total == 3000);
        for (std::size_t i = 1; i < points.size(); ++i) {
            CHECK(points[i].merged_total <= points[i - 1].merged_total);
        }
    }
    SUBCASE("method 1 belief never increases in k") {
        const auto points = run_sweep(small_config());
        for (std::size_t i = 1; i < points.size(); ++i) {
            CHECK(points[i].method1.belief <= points[i - 1].method1.belief);
        }
        CHECK(points.front().method1.belief > points.back().method1.belief);
    }
    SUBCASE("deterministic output for a fixed config") {
        const SimConfig cfg = small_config();
        CHECK(sweep_to_csv(run_sweep(cfg)) == sweep_to_csv(run_sweep(cfg)));
    }
    SUBCASE("config validation") {
        SimConfig cfg = small_config();
        cfg.n_oems = 0;
        CHECK_THROWS_AS(run_sweep(cfg), ParameterError);
        cfg = small_config();
        cfg.k_values = {3, 1};
        CHECK_THROWS_AS(run_sweep(cfg), ParameterError);
        cfg = small_config();
        cfg.k_values = {11};
        CHECK_THROWS_AS(run_sweep(cfg), ParameterError);
        cfg = small_config();
        cfg.imbalance_class_ids = {"missing"};
        CHECK_THROWS_AS(run_sweep(cfg), UnknownClass);
    }
}

TEST_CASE("sweep CSV") {
    SUBCASE("header and row shape") {
        const auto points = run_sweep(small_config());
        const std::string csv = sweep_to_csv(points);
        CHECK(csv.rfind("k,method,belief,disbelief,uncertainty,n_total\n", 0) ==
              0);
        std::size_t rows = 0;
        for (char c : csv) {
            if (c == '\n') ++rows;
        }
        CHECK(rows == 1 + 2 * points.size());
    }
    SUBCASE("round trip") {
        const auto points = run_sweep(small_config());
        const auto back = sweep_from_csv(sweep_to_csv(points));
        REQUIRE(back.size() == points.size());
        for (std::size_t i = 0; i < points.size(); ++i) {
            CHECK(back[i].k == points[i].k);
            CHECK(back[i].merged_total == points[i].merged_total);
            CHECK(back[i].method1.belief == points[i].method1.belief);
            CHECK(back[i].method2.belief == points[i].method2.belief);
        }
    }
    SUBCASE("bad header is rejected") {
        CHECK_THROWS_AS(sweep_from_csv("k,b,d\n"), FormatError);
    }
}

TEST_CASE("k specification parsing") {
    CHECK(parse_k_values("0..100").size() == 101);
    CHECK(parse_k_values("0..100").front() == 0);
    CHECK(parse_k_values("0..100").back() == 100);
    CHECK(parse_k_values("0..10..2") ==
          std::vector<std::size_t>{0, 2, 4, 6, 8, 10});
    CHECK(parse_k_values("0..9..4") == std::vector<std::size_t>{0, 4, 8});
    CHECK(parse_k_values("3,1,9") == std::vector<std::size_t>{3, 1, 9});
    CHECK(parse_k_values("5") == std::vector<std::size_t>{5});
    CHECK_THROWS_AS(parse_k_values("5..3"), ParameterError);
    CHECK_THROWS_AS(parse_k_values("0..10..0"), ParameterError);
    CHECK_THROWS_AS(parse_k_values("abc"), ParameterError);
    CHECK_THROWS_AS(parse_k_values(""), ParameterError);
}

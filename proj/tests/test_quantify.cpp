#include <doctest.h>

#include "helpers.hpp"
#include "sltrust/quantify.hpp"

using namespace sltrust;
using namespace sltrust::testing;

TEST_CASE("baseline quantification") {
    const QuantConfig q2{2.0, 0.5};
    SUBCASE("no evidence is vacuous") {
        const Opinion op = quantify_baseline(Evidence{0, 0}, q2);
        CHECK(near(op, Opinion{0, 0, 1, 0.5}, 0.0));
    }
    SUBCASE("direct formula evaluation") {
        const Opinion a = quantify_baseline(Evidence{98, 2}, q2);
        CHECK(near(a.belief, 98.0 / 102));
        CHECK(near(a.disbelief, 2.0 / 102));
        CHECK(near(a.uncertainty, 2.0 / 102));
        CHECK(near(a.belief, 0.960784, 1e-6));

        const Opinion b = quantify_baseline(Evidence{8, 2}, q2);
        CHECK(near(b.belief, 2.0 / 3));
        CHECK(near(b.disbelief, 1.0 / 6));
        CHECK(near(b.uncertainty, 1.0 / 6));
    }
    SUBCASE("uncertainty strictly decreases as evidence grows") {
        OpinionGen gen(21);
        for (int i = 0; i < 500; ++i) {
            const double r = 10.0 * gen.uniform();
            const double s = 10.0 * gen.uniform();
            const double extra = 0.1 + 5.0 * gen.uniform();
            const double u1 = quantify_baseline(Evidence{r, s}, q2).uncertainty;
            const double u2 =
                quantify_baseline(Evidence{r + extra, s}, q2).uncertainty;
            CHECK(u2 < u1);
        }
    }
    SUBCASE("config validation") {
        CHECK_THROWS_AS(quantify_baseline(Evidence{1, 1}, QuantConfig{0.0, 0.5}),
                        ParameterError);
        CHECK_THROWS_AS(quantify_baseline(Evidence{1, 1}, QuantConfig{2.0, 1.5}),
                        ParameterError);
    }
}

TEST_CASE("evidence-weighted quantification") {
    SUBCASE("weight plays the role of the prior weight") {
        const Opinion w = quantify_weighted(Evidence{8, 2, 2.0}, {});
        const Opinion b = quantify_baseline(Evidence{8, 2}, QuantConfig{2.0, 0.5});
        CHECK(near(w, b, 0.0));
    }
    SUBCASE("direct formula evaluation") {
        const Opinion op = quantify_weighted(Evidence{8, 2, 10.0}, {});
        CHECK(near(op, Opinion{0.4, 0.1, 0.5, 0.5}));
    }
    SUBCASE("vacuous regardless of weight") {
        const Opinion op = quantify_weighted(Evidence{0, 0, 5.0}, {});
        CHECK(near(op, Opinion{0, 0, 1, 0.5}, 0.0));
    }
    SUBCASE("missing weight") {
        CHECK_THROWS_AS(quantify_weighted(Evidence{8, 2}, {}), MissingWeight);
    }
}

TEST_CASE("constant-uncertainty quantification") {
    SUBCASE("all classes in the tolerance zone") {
        const Opinion op = quantify_constant_u(1.0, 0.0, 0.36, {});
        CHECK(near(op, Opinion{0.64, 0.0, 0.36, 0.5}));
    }
    SUBCASE("tolerance-zone fractions with pinned uncertainty") {
        const Opinion op =
            quantify_constant_u(35.0 / 43, 8.0 / 43, 0.39, {});
        CHECK(near(op.belief, 0.61 * 35 / 43));
        CHECK(near(op.disbelief, 0.61 * 8 / 43));
        CHECK(op.uncertainty == 0.39);
        CHECK(near(op.belief, 0.4965, 1e-4));
        CHECK(near(op.disbelief, 0.1135, 1e-4));
    }
    SUBCASE("full uncertainty zeroes the belief mass") {
        const Opinion op = quantify_constant_u(0.7, 0.3, 1.0, {});
        CHECK(near(op, Opinion{0, 0, 1, 0.5}));
    }
    SUBCASE("uncertainty equals the requested value exactly") {
        OpinionGen gen(22);
        for (int i = 0; i < 500; ++i) {
            const double r = gen.uniform() + 1e-3;
            const double s = gen.uniform();
            const double u = gen.uniform();
            const Opinion op = quantify_constant_u(r, s, u, {});
            CHECK(op.uncertainty == u);
            if (s > 0.0) {
                CHECK(near(op.belief / op.disbelief, r / s, 1e-6 * (r / s)));
            }
        }
    }
    SUBCASE("scaling both fractions leaves the opinion unchanged") {
        OpinionGen gen(23);
        for (int i = 0; i < 500; ++i) {
            const double r = gen.uniform() + 1e-3;
            const double s = gen.uniform();
            const double u = gen.uniform();
            const double c = 0.1 + 10.0 * gen.uniform();
            CHECK(near(quantify_constant_u(r, s, u, {}),
                       quantify_constant_u(c * r, c * s, u, {})));
        }
    }
    SUBCASE("no evidence") {
        CHECK_THROWS_AS(quantify_constant_u(0, 0, 0.4, {}), NoEvidence);
    }
    SUBCASE("uncertainty outside [0,1]") {
        CHECK_THROWS_AS(quantify_constant_u(1, 0, 1.2, {}), ParameterError);
        CHECK_THROWS_AS(quantify_constant_u(1, 0, -0.1, {}), ParameterError);
    }
}

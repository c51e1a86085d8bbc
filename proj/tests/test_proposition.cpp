#include <doctest.h>

#include "helpers.hpp"
#include "sltrust/proposition.hpp"
#include "sltrust/quantify.hpp"

using namespace sltrust;
using namespace sltrust::testing;

namespace {

// Random expression trees for round-trip checks.
ExprPtr random_expr(OpinionGen& gen, int depth) {
    static const std::vector<std::string> names{"A", "R", "B", "x1", "trust_src",
                                                "_p", "Q9"};
    auto node = std::make_shared<PropositionExpr>();
    const auto pick = gen.rng()() % (depth <= 0 ? 1 : 4);
    switch (pick) {
        case 0:
            node->kind = PropositionExpr::Kind::Variable;
            node->name = names[gen.rng()() % names.size()];
            break;
        case 1:
            node->kind = PropositionExpr::Kind::Not;
            node->left = random_expr(gen, depth - 1);
            break;
        case 2:
            node->kind = PropositionExpr::Kind::And;
            node->left = random_expr(gen, depth - 1);
            node->right = random_expr(gen, depth - 1);
            break;
        default:
            node->kind = PropositionExpr::Kind::Or;
            node->left = random_expr(gen, depth - 1);
            node->right = random_expr(gen, depth - 1);
            break;
    }
    return node;
}

}  // namespace

TEST_CASE("parsing") {
    SUBCASE("simple conjunction") {
        const ExprPtr e = parse_proposition("A AND R");
        REQUIRE(e->kind == PropositionExpr::Kind::And);
        CHECK(e->left->name == "A");
        CHECK(e->right->name == "R");
    }
    SUBCASE("negated group") {
        const ExprPtr e = parse_proposition("NOT (A OR R)");
        REQUIRE(e->kind == PropositionExpr::Kind::Not);
        CHECK(e->left->kind == PropositionExpr::Kind::Or);
    }
    SUBCASE("AND binds tighter than OR") {
        const ExprPtr e = parse_proposition("A OR B AND C");
        REQUIRE(e->kind == PropositionExpr::Kind::Or);
        CHECK(e->left->name == "A");
        CHECK(e->right->kind == PropositionExpr::Kind::And);
    }
    SUBCASE("NOT applies to the nearest factor") {
        const ExprPtr e = parse_proposition("NOT A AND B");
        REQUIRE(e->kind == PropositionExpr::Kind::And);
        CHECK(e->left->kind == PropositionExpr::Kind::Not);
        CHECK(e->right->name == "B");
    }
    SUBCASE("keywords are case-insensitive, identifiers keep case") {
        const ExprPtr e = parse_proposition("alpha and NOT beta or Gamma");
        REQUIRE(e->kind == PropositionExpr::Kind::Or);
        CHECK(e->right->name == "Gamma");
        CHECK(e->left->kind == PropositionExpr::Kind::And);
        CHECK(e->left->left->name == "alpha");
    }
    SUBCASE("left association") {
        const ExprPtr e = parse_proposition("A AND B AND C");
        REQUIRE(e->kind == PropositionExpr::Kind::And);
        CHECK(e->left->kind == PropositionExpr::Kind::And);
        CHECK(e->right->name == "C");
    }
}

TEST_CASE("parsing is total over arbitrary input") {
    OpinionGen gen(55);
    const std::string charset = "ABxy_19() &|ANDORNTandornot.";
    for (int i = 0; i < 300; ++i) {
        std::string text;
        const std::size_t len = gen.rng()() % 24;
        for (std::size_t j = 0; j < len; ++j) {
            text += charset[gen.rng()() % charset.size()];
        }
        try {
            const ExprPtr tree = parse_proposition(text);
            CHECK(structurally_equal(parse_proposition(to_string(tree)), tree));
        } catch (const ParseError& e) {
            CHECK(e.position() >= 1);
            CHECK(e.position() <= text.size() + 1);
        }
    }
}

TEST_CASE("parse errors carry positions") {
    auto position_of = [](const std::string& text) -> std::size_t {
        try {
            parse_proposition(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        return 0;  // no error raised
    };
    CHECK(position_of("") == 1);
    CHECK(position_of("A AND") == 6);
    CHECK(position_of("OR A") == 1);
    CHECK(position_of("(A") == 1);
    CHECK(position_of("A)") == 2);
    CHECK(position_of("A B") == 3);
    CHECK(position_of("NOT") == 4);
    CHECK(position_of("A AND (B OR)") == 12);
    CHECK(position_of("()") == 2);
    CHECK(position_of("A AND AND B") == 7);
    CHECK(position_of("1A") == 1);
    CHECK(position_of("&") == 1);
    CHECK(position_of("A OR (B") == 6);
    CHECK(position_of("NOT ()") == 6);
    CHECK(position_of("A NOT B") == 3);
    CHECK(position_of("(") == 2);
    CHECK(position_of(")") == 1);
    CHECK(position_of("A (B)") == 3);
    CHECK(position_of("AND") == 1);
    CHECK(position_of("A OR B) AND C") == 7);
}

TEST_CASE("printing and round trips") {
    SUBCASE("right-nested conjunctions keep their parentheses") {
        auto c = std::make_shared<PropositionExpr>();
        c->kind = PropositionExpr::Kind::Variable;
        c->name = "c";
        auto b = std::make_shared<PropositionExpr>();
        b->kind = PropositionExpr::Kind::Variable;
        b->name = "b";
        auto inner = std::make_shared<PropositionExpr>();
        inner->kind = PropositionExpr::Kind::And;
        inner->left = b;
        inner->right = c;
        auto a = std::make_shared<PropositionExpr>();
        a->kind = PropositionExpr::Kind::Variable;
        a->name = "a";
        auto root = std::make_shared<PropositionExpr>();
        root->kind = PropositionExpr::Kind::And;
        root->left = a;
        root->right = inner;
        CHECK(to_string(root) == "a AND (b AND c)");
        CHECK(structurally_equal(parse_proposition(to_string(root)), root));
    }
    SUBCASE("parse-print-parse is the identity on random trees") {
        OpinionGen gen(51);
        for (int i = 0; i < 200; ++i) {
            const ExprPtr tree = random_expr(gen, 4);
            const std::string text = to_string(tree);
            const ExprPtr reparsed = parse_proposition(text);
            CHECK(structurally_equal(tree, reparsed));
            CHECK(to_string(reparsed) == text);
        }
    }
    SUBCASE("variables in first-appearance order") {
        const auto vars = variables(parse_proposition("B AND (A OR B) AND C"));
        CHECK(vars == std::vector<std::string>{"B", "A", "C"});
    }
}

TEST_CASE("evaluation") {
    const std::map<std::string, Opinion> dogmatic{
        {"A", make_opinion(0.9, 0.1, 0, 0.5)},
        {"R", make_opinion(0.8, 0.2, 0, 0.5)}};
    SUBCASE("bare variable passes through") {
        const Opinion b = make_opinion(0.3, 0.3, 0.4, 0.5);
        const Opinion out =
            evaluate_proposition(parse_proposition("B"), {{"B", b}});
        CHECK(near(out, b, 0.0));
    }
    SUBCASE("dogmatic conjunction and disjunction") {
        const Opinion land =
            evaluate_proposition(parse_proposition("A AND R"), dogmatic);
        CHECK(near(land.belief, 0.72));
        CHECK(near(land.disbelief, 0.28));
        CHECK(land.uncertainty == 0.0);
        const Opinion lor =
            evaluate_proposition(parse_proposition("A OR R"), dogmatic);
        CHECK(near(lor.belief, 0.98));
        CHECK(near(lor.disbelief, 0.02));
    }
    SUBCASE("projected probability multiplies under AND") {
        OpinionGen gen(52);
        for (int i = 0; i < 500; ++i) {
            const Opinion a = gen.next_with_base_rate(0.5);
            const Opinion r = gen.next_with_base_rate(0.5);
            const Opinion out = evaluate_proposition(
                parse_proposition("A AND R"), {{"A", a}, {"R", r}});
            CHECK(near(projected_probability(out),
                       projected_probability(a) * projected_probability(r)));
        }
    }
    SUBCASE("NOT evaluates to negation") {
        OpinionGen gen(53);
        for (int i = 0; i < 200; ++i) {
            const Opinion a = gen.next();
            const Opinion out =
                evaluate_proposition(parse_proposition("NOT A"), {{"A", a}});
            CHECK(near(out, negate(a), 0.0));
        }
    }
    SUBCASE("dogmatic AND chains are associative") {
        const std::map<std::string, Opinion> three{
            {"A", make_opinion(0.9, 0.1, 0, 0.5)},
            {"B", make_opinion(0.8, 0.2, 0, 0.5)},
            {"C", make_opinion(0.7, 0.3, 0, 0.5)}};
        const Opinion left =
            evaluate_proposition(parse_proposition("(A AND B) AND C"), three);
        const Opinion right =
            evaluate_proposition(parse_proposition("A AND (B AND C)"), three);
        CHECK(near(left, right, 1e-12));
        CHECK(near(left.belief, 0.9 * 0.8 * 0.7, 1e-12));
    }
    SUBCASE("unbound variables are reported by name") {
        try {
            evaluate_proposition(parse_proposition("A AND R"),
                                 {{"A", make_opinion(1, 0, 0, 0.5)}});
            FAIL("expected UnboundVariable");
        } catch (const UnboundVariable& e) {
            CHECK(e.name() == "R");
        }
    }
}

TEST_CASE("source resolution") {
    SUBCASE("single source without referral passes through") {
        const Opinion op = make_opinion(0.7, 0.1, 0.2, 0.5);
        const auto resolved = resolve_sources(
            {SourceBinding{"A", {SourceOpinion{"s1", op, {}}}, {}}});
        CHECK(near(resolved.at("A"), op, 0.0));
    }
    SUBCASE("duplicated source under averaging fusion is a no-op") {
        const Opinion op = make_opinion(0.7, 0.1, 0.2, 0.5);
        const auto resolved = resolve_sources({SourceBinding{
            "A",
            {SourceOpinion{"s1", op, {}}, SourceOpinion{"s2", op, {}}},
            FusionOperator::Averaging}});
        CHECK(near(resolved.at("A"), op));
    }
    SUBCASE("referral trust discounts the source") {
        const auto resolved = resolve_sources({SourceBinding{
            "A",
            {SourceOpinion{"s1", make_opinion(0.8, 0.1, 0.1, 0.5),
                           make_opinion(0.5, 0.3, 0.2, 0.5)}},
            {}}});
        CHECK(near(resolved.at("A"), Opinion{0.48, 0.06, 0.46, 0.5}));
    }
    SUBCASE("cumulative fold is order-insensitive") {
        OpinionGen gen(54);
        for (int i = 0; i < 100; ++i) {
            const Opinion a = gen.next_with_base_rate(0.5);
            const Opinion b = gen.next_with_base_rate(0.5);
            const Opinion c = gen.next_with_base_rate(0.5);
            const auto forward = resolve_sources({SourceBinding{
                "P",
                {SourceOpinion{"1", a, {}}, SourceOpinion{"2", b, {}},
                 SourceOpinion{"3", c, {}}},
                FusionOperator::Cumulative}});
            const auto backward = resolve_sources({SourceBinding{
                "P",
                {SourceOpinion{"3", c, {}}, SourceOpinion{"2", b, {}},
                 SourceOpinion{"1", a, {}}},
                FusionOperator::Cumulative}});
            CHECK(near(forward.at("P"), backward.at("P")));
        }
    }
    SUBCASE("empty bindings are rejected; fusion errors propagate") {
        CHECK_THROWS_AS(resolve_sources({SourceBinding{"A", {}, {}}}),
                        ParameterError);
        CHECK_THROWS_AS(
            resolve_sources({SourceBinding{
                "A",
                {SourceOpinion{"1", make_opinion(1, 0, 0, 0.5), {}},
                 SourceOpinion{"2", make_opinion(0, 1, 0, 0.5), {}}},
                FusionOperator::Constraint}}),
            TotalConflict);
    }
}

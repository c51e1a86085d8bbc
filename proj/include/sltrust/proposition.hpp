#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sltrust/opinion.hpp"

namespace sltrust {

// Boolean expression tree over named atomic trust propositions.
struct PropositionExpr {
    enum class Kind { Variable, Not, And, Or };

    Kind kind = Kind::Variable;
    std::string name;                           // Variable
    std::shared_ptr<const PropositionExpr> left;   // Not, And, Or
    std::shared_ptr<const PropositionExpr> right;  // And, Or
};

using ExprPtr = std::shared_ptr<const PropositionExpr>;

// Grammar (keywords case-insensitive, AND binds tighter than OR):
//   expr   := term ('OR' term)*
//   term   := factor ('AND' factor)*
//   factor := 'NOT' factor | '(' expr ')' | identifier
// Identifiers match [A-Za-z_][A-Za-z0-9_]* and are case-sensitive.
// Throws ParseError with a 1-based character position.
ExprPtr parse_proposition(const std::string& text);

// Re-parseable text; parsing the result reproduces the tree structurally.
std::string to_string(const ExprPtr& expr);

bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

// Variable names in first-appearance order.
std::vector<std::string> variables(const ExprPtr& expr);

// And -> conjunction, Or -> disjunction, Not -> negate. Unbound variables
// raise UnboundVariable (first missing identifier in evaluation order).
Opinion evaluate_proposition(const ExprPtr& expr,
                             const std::map<std::string, Opinion>& opinions);

// One trust source feeding an atomic proposition; the opinion is discounted
// by the referral trust when present.
struct SourceOpinion {
    std::string name;
    Opinion opinion;
    std::optional<Opinion> referral;
};

struct SourceBinding {
    std::string proposition;
    std::vector<SourceOpinion> sources;
    FusionOperator fusion = FusionOperator::Cumulative;
};

// Discounts each source by its referral trust, then left-folds the sources
// with the binding's fusion operator in listed order.
std::map<std::string, Opinion> resolve_sources(
    const std::vector<SourceBinding>& bindings);

}  // namespace sltrust

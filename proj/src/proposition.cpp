#include "sltrust/proposition.hpp"

#include <algorithm>
#include <cctype>

namespace sltrust {

namespace {

enum class TokenKind { Identifier, KwAnd, KwOr, KwNot, LParen, RParen, End };

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t position;  // 1-based offset of the first character
};

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string to_upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
        return static_cast<char>(std::toupper(c));
    });
    return s;
}

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '(') {
            tokens.push_back({TokenKind::LParen, "(", i + 1});
            ++i;
            continue;
        }
        if (c == ')') {
            tokens.push_back({TokenKind::RParen, ")", i + 1});
            ++i;
            continue;
        }
        if (is_ident_start(c)) {
            std::size_t start = i;
            while (i < text.size() && is_ident_char(text[i])) ++i;
            std::string word = text.substr(start, i - start);
            const std::string upper = to_upper(word);
            TokenKind kind = TokenKind::Identifier;
            if (upper == "AND") kind = TokenKind::KwAnd;
            else if (upper == "OR") kind = TokenKind::KwOr;
            else if (upper == "NOT") kind = TokenKind::KwNot;
            tokens.push_back({kind, std::move(word), start + 1});
            continue;
        }
        throw ParseError(i + 1, std::string("unexpected character '") + c + "'");
    }
    tokens.push_back({TokenKind::End, "", text.size() + 1});
    return tokens;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ExprPtr parse() {
        if (tokens_.front().kind == TokenKind::End) {
            throw ParseError(1, "empty expression");
        }
        ExprPtr expr = parse_or();
        const Token& t = peek();
        if (t.kind != TokenKind::End) {
            throw ParseError(t.position, "unexpected '" + t.text + "'");
        }
        return expr;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    ExprPtr parse_or() {
        ExprPtr left = parse_and();
        while (peek().kind == TokenKind::KwOr) {
            advance();
            ExprPtr right = parse_and();
            auto node = std::make_shared<PropositionExpr>();
            node->kind = PropositionExpr::Kind::Or;
            node->left = std::move(left);
            node->right = std::move(right);
            left = std::move(node);
        }
        return left;
    }

    ExprPtr parse_and() {
        ExprPtr left = parse_factor();
        while (peek().kind == TokenKind::KwAnd) {
            advance();
            ExprPtr right = parse_factor();
            auto node = std::make_shared<PropositionExpr>();
            node->kind = PropositionExpr::Kind::And;
            node->left = std::move(left);
            node->right = std::move(right);
            left = std::move(node);
        }
        return left;
    }

    ExprPtr parse_factor() {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::KwNot: {
                advance();
                auto node = std::make_shared<PropositionExpr>();
                node->kind = PropositionExpr::Kind::Not;
                node->left = parse_factor();
                return node;
            }
            case TokenKind::LParen: {
                const std::size_t open_pos = t.position;
                advance();
                ExprPtr inner = parse_or();
                if (peek().kind != TokenKind::RParen) {
                    if (peek().kind == TokenKind::End) {
                        throw ParseError(open_pos, "unbalanced parenthesis");
                    }
                    throw ParseError(peek().position,
                                     "unexpected '" + peek().text + "'");
                }
                advance();
                return inner;
            }
            case TokenKind::Identifier: {
                advance();
                auto node = std::make_shared<PropositionExpr>();
                node->kind = PropositionExpr::Kind::Variable;
                node->name = t.text;
                return node;
            }
            case TokenKind::End:
                throw ParseError(t.position, "unexpected end of input");
            default:
                throw ParseError(t.position, "unexpected '" + t.text + "'");
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

int precedence(PropositionExpr::Kind kind) {
    switch (kind) {
        case PropositionExpr::Kind::Or:
            return 1;
        case PropositionExpr::Kind::And:
            return 2;
        case PropositionExpr::Kind::Not:
            return 3;
        case PropositionExpr::Kind::Variable:
            return 4;
    }
    return 0;
}

void print(const ExprPtr& e, int min_precedence, std::string& out) {
    const int prec = precedence(e->kind);
    const bool parens = prec < min_precedence;
    if (parens) out += '(';
    switch (e->kind) {
        case PropositionExpr::Kind::Variable:
            out += e->name;
            break;
        case PropositionExpr::Kind::Not:
            out += "NOT ";
            print(e->left, precedence(PropositionExpr::Kind::Not), out);
            break;
        case PropositionExpr::Kind::And:
            // Left-associative: the right child needs strictly higher
            // precedence to survive a round trip.
            print(e->left, prec, out);
            out += " AND ";
            print(e->right, prec + 1, out);
            break;
        case PropositionExpr::Kind::Or:
            print(e->left, prec, out);
            out += " OR ";
            print(e->right, prec + 1, out);
            break;
    }
    if (parens) out += ')';
}

void collect_variables(const ExprPtr& e, std::vector<std::string>& out) {
    switch (e->kind) {
        case PropositionExpr::Kind::Variable:
            if (std::find(out.begin(), out.end(), e->name) == out.end()) {
                out.push_back(e->name);
            }
            break;
        case PropositionExpr::Kind::Not:
            collect_variables(e->left, out);
            break;
        case PropositionExpr::Kind::And:
        case PropositionExpr::Kind::Or:
            collect_variables(e->left, out);
            collect_variables(e->right, out);
            break;
    }
}

}  // namespace

ExprPtr parse_proposition(const std::string& text) {
    Parser parser(tokenize(text));
    return parser.parse();
}

std::string to_string(const ExprPtr& expr) {
    std::string out;
    print(expr, 0, out);
    return out;
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case PropositionExpr::Kind::Variable:
            return a->name == b->name;
        case PropositionExpr::Kind::Not:
            return structurally_equal(a->left, b->left);
        case PropositionExpr::Kind::And:
        case PropositionExpr::Kind::Or:
            return structurally_equal(a->left, b->left) &&
                   structurally_equal(a->right, b->right);
    }
    return false;
}

std::vector<std::string> variables(const ExprPtr& expr) {
    std::vector<std::string> out;
    collect_variables(expr, out);
    return out;
}

Opinion evaluate_proposition(const ExprPtr& expr,
                             const std::map<std::string, Opinion>& opinions) {
    switch (expr->kind) {
        case PropositionExpr::Kind::Variable: {
            auto it = opinions.find(expr->name);
            if (it == opinions.end()) {
                throw UnboundVariable(expr->name);
            }
            return it->second;
        }
        case PropositionExpr::Kind::Not:
            return negate(evaluate_proposition(expr->left, opinions));
        case PropositionExpr::Kind::And:
            return conjunction(evaluate_proposition(expr->left, opinions),
                               evaluate_proposition(expr->right, opinions));
        case PropositionExpr::Kind::Or:
            return disjunction(evaluate_proposition(expr->left, opinions),
                               evaluate_proposition(expr->right, opinions));
    }
    throw ParameterError("malformed expression tree");
}

std::map<std::string, Opinion> resolve_sources(
    const std::vector<SourceBinding>& bindings) {
    std::map<std::string, Opinion> resolved;
    for (const auto& binding : bindings) {
        if (binding.sources.empty()) {
            throw ParameterError("proposition '" + binding.proposition +
                                 "' has no sources");
        }
        std::optional<Opinion> acc;
        for (const auto& source : binding.sources) {
            const Opinion effective = source.referral
                                          ? discount(*source.referral, source.opinion)
                                          : source.opinion;
            acc = acc ? fuse(binding.fusion, *acc, effective) : effective;
        }
        resolved[binding.proposition] = *acc;
    }
    return resolved;
}

}  // namespace sltrust

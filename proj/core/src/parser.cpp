#include "parity/parser.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

namespace parity {

namespace {

constexpr std::size_t kMaxInput = std::size_t{64} * 1024;
constexpr int kMaxDepth = 256;
constexpr long long kMaxExponent = 1'000'000;
constexpr long long kMaxNonconstBaseExponent = 2048;
constexpr long long kWorkBudget = 2'000'000;

struct Token {
    enum class Type { Int, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Type type;
    std::size_t offset;
    std::size_t length;
    std::string digits;  // Type::Int
    char var = 0;        // Type::Var
};

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Type::Int, i, j - i, std::string(text.substr(i, j - i)), 0});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
            std::string name(text.substr(i, j - i));
            if (name != "z" && name != "w")
                throw ParseError("unknown symbol '" + name + "'; variables are 'z' and 'w'", i);
            out.push_back({Token::Type::Var, i, 1, {}, name[0]});
            i = j;
            continue;
        }
        Token::Type t;
        switch (c) {
            case '+': t = Token::Type::Plus; break;
            case '-': t = Token::Type::Minus; break;
            case '*': t = Token::Type::Star; break;
            case '/': t = Token::Type::Slash; break;
            case '^': t = Token::Type::Caret; break;
            case '(': t = Token::Type::LParen; break;
            case ')': t = Token::Type::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({t, i, 1, {}, 0});
        ++i;
    }
    out.push_back({Token::Type::End, text.size(), 0, {}, 0});
    return out;
}

// intermediate value: a formal quotient of bivariate polynomials
struct Val {
    BiPoly num;
    BiPoly den = BiPoly::constant(Rational(1));

    bool divisor_is_constant() const { return num.is_constant() && den.is_constant(); }
};

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(lex(text)) {}

    ParsedExpr run() {
        Val v = parse_expr_prod();
        const Token& t = peek();
        if (t.type != Token::Type::End) {
            if (starts_primary(t.type))
                throw ParseError("missing operator (no implicit multiplication; write '2*z')",
                                 t.offset);
            throw ParseError("unexpected trailing input", t.offset);
        }
        return lower(std::move(v));
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int depth_ = 0;
    long long budget_ = kWorkBudget;
    bool saw_w_ = false;
    std::optional<std::size_t> nonconst_div_offset_;

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    const Token& next() { return tokens_[pos_++]; }

    static bool starts_primary(Token::Type t) {
        return t == Token::Type::Int || t == Token::Type::Var || t == Token::Type::LParen;
    }

    void charge(std::size_t cost, std::size_t offset) {
        budget_ -= static_cast<long long>(cost);
        if (budget_ < 0)
            throw ParseError("expression exceeds internal size limits", offset);
    }

    struct DepthGuard {
        Parser& p;
        std::size_t offset;
        DepthGuard(Parser& parser, std::size_t off) : p(parser), offset(off) {
            if (++p.depth_ > kMaxDepth)
                throw ParseError("expression nested too deeply (limit " +
                                     std::to_string(kMaxDepth) + ")",
                                 offset);
        }
        ~DepthGuard() { --p.depth_; }
    };

    Val parse_expr_prod() {
        Val acc = parse_term();
        for (;;) {
            const Token& t = peek();
            if (t.type == Token::Type::Plus || t.type == Token::Type::Minus) {
                next();
                Val rhs = parse_term();
                acc = add_vals(acc, rhs, t.type == Token::Type::Minus, t.offset);
            } else if (starts_primary(t.type)) {
                throw ParseError("missing operator (no implicit multiplication; write '2*z')",
                                 t.offset);
            } else {
                return acc;
            }
        }
    }

    Val parse_term() {
        Val acc = parse_factor();
        for (;;) {
            const Token& t = peek();
            if (t.type == Token::Type::Star) {
                next();
                Val rhs = parse_factor();
                acc = mul_vals(acc, rhs, t.offset);
            } else if (t.type == Token::Type::Slash) {
                next();
                Val rhs = parse_factor();
                acc = div_vals(acc, rhs, t.offset);
            } else if (starts_primary(t.type)) {
                throw ParseError("missing operator (no implicit multiplication; write '2*z')",
                                 t.offset);
            } else {
                return acc;
            }
        }
    }

    Val parse_factor() {
        const Token& t = peek();
        if (t.type == Token::Type::Minus) {
            DepthGuard g(*this, t.offset);
            next();
            Val v = parse_factor();
            v.num = -v.num;
            return v;
        }
        return parse_power();
    }

    Val parse_power() {
        Val base = parse_primary();
        if (peek().type != Token::Type::Caret) return base;
        const Token& caret = next();
        long long e = parse_exponent();
        // single-term bases stay single-term under powers; only multi-term
        // bases can expand
        const bool expansive = base.num.terms().size() > 1 || base.den.terms().size() > 1;
        if (expansive && e > kMaxNonconstBaseExponent)
            throw ParseError("exponent too large for a multi-term base (limit " +
                                 std::to_string(kMaxNonconstBaseExponent) + ")",
                             caret.offset);
        base.num = budgeted_pow(std::move(base.num), e, caret.offset);
        base.den = budgeted_pow(std::move(base.den), e, caret.offset);
        return base;
    }

    long long parse_exponent() {
        const Token& t = peek();
        if (t.type != Token::Type::Int)
            throw ParseError("exponent must be a non-negative integer literal", t.offset);
        next();
        std::string digits = t.digits;
        digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
        if (digits.size() > 7)
            throw ParseError("exponent too large (limit " + std::to_string(kMaxExponent) + ")",
                             t.offset);
        long long value = std::stoll(digits);
        if (value > kMaxExponent)
            throw ParseError("exponent too large (limit " + std::to_string(kMaxExponent) + ")",
                             t.offset);
        if (peek().type == Token::Type::Caret) {
            const Token& caret = next();
            long long rhs = parse_exponent();
            // integer tower, e.g. z^2^3 = z^8, still capped
            long long acc = 1;
            for (long long i = 0; i < rhs; ++i) {
                acc *= value;
                if (acc > kMaxExponent || acc < 0)
                    throw ParseError("exponent too large (limit " +
                                         std::to_string(kMaxExponent) + ")",
                                     caret.offset);
                if (acc == 0 || acc == 1) break;  // 0^n, 1^n stabilize
            }
            if (value == 0 && rhs == 0) acc = 1;
            if (value == 0 && rhs > 0) acc = 0;
            if (value == 1) acc = 1;
            value = acc;
        }
        return value;
    }

    Val parse_primary() {
        const Token& t = peek();
        switch (t.type) {
            case Token::Type::Int: {
                next();
                // adjacent INT '/' INT is a rational literal
                const Token& slash = peek();
                const Token& denom = peek(1);
                if (slash.type == Token::Type::Slash && denom.type == Token::Type::Int &&
                    slash.offset == t.offset + t.length && denom.offset == slash.offset + 1) {
                    next();
                    next();
                    BigInt d(denom.digits);
                    if (d.is_zero())
                        throw ParseError("zero denominator in rational literal", denom.offset);
                    return {BiPoly::constant(Rational(BigInt(t.digits), std::move(d)))};
                }
                return {BiPoly::constant(Rational(BigInt(t.digits)))};
            }
            case Token::Type::Var:
                next();
                if (t.var == 'w') {
                    saw_w_ = true;
                    return {BiPoly::var_w()};
                }
                return {BiPoly::var_z()};
            case Token::Type::LParen: {
                DepthGuard g(*this, t.offset);
                next();
                Val v = parse_expr_prod();
                const Token& close = peek();
                if (close.type != Token::Type::RParen)
                    throw ParseError("expected ')'", close.offset);
                next();
                return v;
            }
            default:
                throw ParseError("expected a number, 'z', 'w', or '('", t.offset);
        }
    }

    BiPoly budgeted_mul(const BiPoly& a, const BiPoly& b, std::size_t offset) {
        charge(a.terms().size() * b.terms().size() + 1, offset);
        return a * b;
    }

    BiPoly budgeted_pow(BiPoly base, long long e, std::size_t offset) {
        BiPoly result = BiPoly::constant(Rational(1));
        while (e > 0) {
            if (e & 1) result = budgeted_mul(result, base, offset);
            e >>= 1;
            if (e) base = budgeted_mul(base, base, offset);
        }
        return result;
    }

    Val add_vals(const Val& a, const Val& b, bool subtract, std::size_t offset) {
        Val r;
        BiPoly lhs = budgeted_mul(a.num, b.den, offset);
        BiPoly rhs = budgeted_mul(b.num, a.den, offset);
        r.num = subtract ? lhs - rhs : lhs + rhs;
        r.den = budgeted_mul(a.den, b.den, offset);
        return r;
    }

    Val mul_vals(const Val& a, const Val& b, std::size_t offset) {
        Val r;
        r.num = budgeted_mul(a.num, b.num, offset);
        r.den = budgeted_mul(a.den, b.den, offset);
        return r;
    }

    Val div_vals(const Val& a, const Val& b, std::size_t offset) {
        if (b.num.is_zero())
            throw ParseError("division by an expression that is identically zero", offset);
        if (!b.divisor_is_constant() && !nonconst_div_offset_) nonconst_div_offset_ = offset;
        Val r;
        r.num = budgeted_mul(a.num, b.den, offset);
        r.den = budgeted_mul(a.den, b.num, offset);
        return r;
    }

    static UniPoly to_unipoly(const BiPoly& p) {
        std::map<Exp, Rational> t;
        for (const auto& [k, c] : p.terms()) t.emplace(k.first, c);
        return UniPoly::from_terms(std::move(t));
    }

    ParsedExpr lower(const Val& v) {
        if (saw_w_) {
            if (nonconst_div_offset_)
                throw ParseError(
                    "expressions containing 'w' cannot divide by a non-constant expression",
                    *nonconst_div_offset_);
            // denominator is a nonzero constant here
            return v.num.scaled(Rational(1) / v.den.value_at_origin());
        }
        UniPoly num = to_unipoly(v.num);
        UniPoly den = to_unipoly(v.den);
        if (nonconst_div_offset_) return RationalFunction::make(std::move(num), std::move(den));
        return num.scaled(Rational(1) / den.constant_term());
    }
};

}  // namespace

ParsedExpr parse_expr(std::string_view text) {
    if (text.size() > kMaxInput) throw ParseError("input exceeds 64 KiB", kMaxInput);
    return Parser(text).run();
}

UniPoly parse_unipoly(std::string_view text) {
    ParsedExpr e = parse_expr(text);
    if (auto* p = std::get_if<UniPoly>(&e)) return std::move(*p);
    throw std::invalid_argument("expected a univariate polynomial in z");
}

BiPoly parse_bipoly(std::string_view text) {
    ParsedExpr e = parse_expr(text);
    if (auto* p = std::get_if<BiPoly>(&e)) return std::move(*p);
    if (auto* p = std::get_if<UniPoly>(&e)) return BiPoly::from_uni(*p);
    throw std::invalid_argument("expected a polynomial in z and w (rational functions not allowed)");
}

RationalFunction parse_rational_function(std::string_view text) {
    ParsedExpr e = parse_expr(text);
    if (auto* p = std::get_if<RationalFunction>(&e)) return std::move(*p);
    if (auto* p = std::get_if<UniPoly>(&e)) return RationalFunction::from_poly(std::move(*p));
    throw std::invalid_argument("expected a univariate rational function");
}

}  // namespace parity

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "parity/bipoly.hpp"
#include "parity/rational_fn.hpp"
#include "parity/unipoly.hpp"

namespace parity {

/// Syntax or lowering failure, carrying the byte offset of the offending
/// input position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset),
          message_(message) {}

    std::size_t offset() const { return offset_; }
    const std::string& bare_message() const { return message_; }

private:
    std::size_t offset_;
    std::string message_;
};

using ParsedExpr = std::variant<UniPoly, BiPoly, RationalFunction>;

/// Parses an expression over { rational literal, z, w, + - * / ^, parens }
/// and lowers it to exactly one of UniPoly, BiPoly, or RationalFunction.
///
/// Grammar (precedence low to high: +,- then *,/ then unary- then ^):
///   expr     := term (('+' | '-') term)*
///   term     := factor (('*' | '/') factor)*
///   factor   := '-' factor | power
///   power    := primary ('^' exponent)?
///   exponent := INT ('^' exponent)?          -- right-associative, literal only
///   primary  := RATIONAL | INT | 'z' | 'w' | '(' expr ')'
///
/// An INT '/' INT sequence written without whitespace is a single rational
/// literal when it appears in primary position; every other '/' is
/// division. Division by a non-constant expression yields a
/// RationalFunction; any appearance of 'w' yields a BiPoly and forbids such
/// division. There is no implicit multiplication.
///
/// Totality limits (diagnosed, never a crash): input <= 64 KiB, nesting
/// depth <= 256, exponent literals <= 10^6 (<= 2048 on non-constant bases),
/// and an internal term-operation budget for pathological expansions.
ParsedExpr parse_expr(std::string_view text);

/// Coercing wrappers; throw std::invalid_argument when the expression
/// lowers to the wrong kind.
UniPoly parse_unipoly(std::string_view text);
BiPoly parse_bipoly(std::string_view text);              // embeds univariate input
RationalFunction parse_rational_function(std::string_view text);  // embeds polynomials as p/1

}  // namespace parity

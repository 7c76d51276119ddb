#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parity/rational.hpp"

namespace parity {

/// Term exponent. Always non-negative.
using Exp = long long;

class UniPoly;
struct EvenOddParts;

/// Sparse univariate polynomial with exact rational coefficients, keyed by
/// exponent. Stored coefficients are never zero; the zero polynomial has no
/// terms and reports no degree. Values are immutable once built.
class UniPoly {
public:
    UniPoly() = default;  // the zero polynomial

    static UniPoly constant(Rational c);
    static UniPoly variable();  // z
    static UniPoly monomial(Exp e, Rational c);
    static UniPoly from_terms(std::map<Exp, Rational> terms);
    /// Dense helper: coefficients in ascending exponent order.
    static UniPoly from_coeffs(const std::vector<Rational>& ascending);

    const std::map<Exp, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_.rbegin()->first == 0; }
    /// Degree, or nullopt for the zero polynomial (which has none).
    std::optional<Exp> degree() const;
    Rational coeff(Exp e) const;
    const Rational& leading_coeff() const;  // throws std::domain_error on zero
    Rational constant_term() const { return coeff(0); }

    bool is_even() const;  // every exponent even (true for zero)
    bool is_odd() const;   // every exponent odd (true for zero)

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);

    UniPoly scaled(const Rational& c) const;
    UniPoly pow(Exp n) const;  // n >= 0

    /// Horner-style evaluation in double-precision complex arithmetic.
    std::complex<double> eval(std::complex<double> z) const;
    /// Exact evaluation at a rational point.
    Rational eval_rational(const Rational& x) const;

    /// Canonical text: terms in decreasing exponent order, e.g. "z^6 + 4*z^3 + 4".
    std::string to_string(const std::string& var = "z") const;

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    std::map<Exp, Rational> terms_;
};

struct EvenOddParts {
    UniPoly even;
    UniPoly odd;
};

UniPoly compose(const UniPoly& outer, const UniPoly& inner);  // outer(inner(z))
UniPoly reflect(const UniPoly& p);                            // p(-z)
EvenOddParts even_odd_parts(const UniPoly& p);
UniPoly shift_argument(const UniPoly& p, const Rational& a);  // p(z + a)

/// Residue classification of a polynomial's exponents modulo N: the
/// polynomial lies in C_k exactly when every exponent is congruent to k.
/// The zero polynomial is its own variant (it lies in every class).
class CyclicClassResult {
public:
    enum class Kind { Zero, NotCyclic, Class };

    static CyclicClassResult zero(long modulus) { return {Kind::Zero, 0, modulus}; }
    static CyclicClassResult not_cyclic(long modulus) { return {Kind::NotCyclic, 0, modulus}; }
    static CyclicClassResult cls(long k, long modulus) { return {Kind::Class, k, modulus}; }

    Kind kind() const { return kind_; }
    long k() const;  // residue; only valid for Kind::Class
    long modulus() const { return modulus_; }

    bool is_class() const { return kind_ == Kind::Class; }
    /// Member of C = union of all C_k (zero belongs to every class).
    bool in_c() const { return kind_ != Kind::NotCyclic; }
    bool in_c0() const { return in_class(0); }
    bool in_class(long k) const {
        return kind_ == Kind::Zero || (kind_ == Kind::Class && k_ == k);
    }

    std::string str() const;

    friend bool operator==(const CyclicClassResult&, const CyclicClassResult&) = default;

private:
    CyclicClassResult(Kind kind, long k, long modulus) : kind_(kind), k_(k), modulus_(modulus) {}
    Kind kind_;
    long k_;
    long modulus_;
};

/// Exponent-residue scan. N >= 2 required (primality is not; theorem-level
/// callers that need a prime go through PrimeModulus).
CyclicClassResult cyclic_class(const UniPoly& p, long modulus);

struct DivMod {
    UniPoly quotient;
    UniPoly remainder;
};

DivMod divmod(const UniPoly& a, const UniPoly& b);     // b != 0
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);  // monic; poly_gcd(0,0) = 0

std::ostream& operator<<(std::ostream& os, const UniPoly& p);
std::ostream& operator<<(std::ostream& os, const CyclicClassResult& c);

}  // namespace parity

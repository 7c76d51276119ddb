#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include "parity/unipoly.hpp"

namespace parity {

/// Composing f with g annihilated f's denominator identically, so the
/// quotient has no meaning as a rational function.
class DegenerateComposition : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Quotient of two univariate polynomials in canonical form: the gcd of
/// numerator and denominator is cancelled and the denominator is monic (and
/// never zero). Zero is 0/1.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(UniPoly::constant(Rational(1))) {}

    /// Canonicalizing constructor; throws std::domain_error on a zero
    /// denominator.
    static RationalFunction make(UniPoly num, UniPoly den);
    static RationalFunction from_poly(UniPoly p) { return make(std::move(p), UniPoly::constant(Rational(1))); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_ == UniPoly::constant(Rational(1)); }
    bool analytic_at_origin() const { return !den_.constant_term().is_zero(); }

    /// Exact value, or nullopt at a pole.
    std::optional<Rational> value_at(const Rational& x) const;
    std::complex<double> eval(std::complex<double> z) const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);

    /// Canonical text "(num) / (den)".
    std::string to_string() const;

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    UniPoly num_, den_;
};

/// f(g(z)): exact substitution with denominators cleared, then canonical
/// form. Throws DegenerateComposition when the resulting denominator is
/// identically zero.
RationalFunction rf_compose(const RationalFunction& f, const RationalFunction& g);

RationalFunction reflect(const RationalFunction& f);  // f(-z)

/// Exact cyclic classification of a rational function mod N >= 2 via the
/// cross-multiplied identity num(wz)*den(z) = w^k * num(z)*den(wz), checked
/// coefficient-wise in Q[x]/(Phi_N(x)). Poles are irrelevant: the test is
/// formal.
CyclicClassResult rf_cyclic_class(const RationalFunction& f, long modulus);

/// True when f(z) = O(z) + c with O odd: equivalently f(z) + f(-z) is a
/// constant rational function.
bool rf_is_odd_plus_constant(const RationalFunction& f);

/// Cyclotomic polynomial Phi_n, n >= 1, with integer coefficients.
UniPoly cyclotomic_polynomial(long n);

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace parity

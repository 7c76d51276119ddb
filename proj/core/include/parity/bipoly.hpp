#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parity/rational.hpp"
#include "parity/theorem_check.hpp"
#include "parity/unipoly.hpp"

namespace parity {

/// Sparse bivariate polynomial in z and w over the rationals. A term is
/// keyed by its exponent pair (z-exponent, w-exponent); its total degree is
/// the sum. No stored coefficient is zero.
class BiPoly {
public:
    using Key = std::pair<Exp, Exp>;

    BiPoly() = default;  // zero

    static BiPoly constant(Rational c);
    static BiPoly var_z();
    static BiPoly var_w();
    static BiPoly monomial(Exp i, Exp j, Rational c);
    static BiPoly from_terms(std::map<Key, Rational> terms);
    static BiPoly from_uni(const UniPoly& p, bool in_w = false);

    const std::map<Key, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational coeff(Exp i, Exp j) const;
    Rational value_at_origin() const { return coeff(0, 0); }
    std::optional<Exp> total_degree() const;  // nullopt for zero
    bool uses_w() const;

    /// Even in the joint sense: P(-z,-w) = P(z,w), i.e. every term has even
    /// total degree. (Distinct from evenness in each variable separately.)
    bool is_even() const;
    /// Even in each variable separately: every z-exponent and every
    /// w-exponent is even.
    bool is_even_per_variable() const;
    bool is_symmetric() const;  // coeff(i,j) = coeff(j,i) throughout

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly scaled(const Rational& c) const;
    BiPoly pow(Exp n) const;

    BiPoly transpose() const;  // swap z and w

    /// Restriction to the line (az, bz): term (i,j,c) contributes
    /// c * a^i * b^j * z^(i+j).
    UniPoly restrict_line(const Rational& a, const Rational& b) const;

    /// Odd-total-degree homogeneous components, highest degree first.
    /// Empty exactly when the polynomial is even.
    std::vector<std::pair<Exp, BiPoly>> odd_homogeneous_components() const;

    /// Canonical text, graded-lex term order (total degree, then z-exponent),
    /// decreasing.
    std::string to_string() const;

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

private:
    std::map<Key, Rational> terms_;
};

/// P(Q(z), R(z)): exact substitution of univariate polynomials for z and w.
UniPoly subst_uni(const BiPoly& P, const UniPoly& Q, const UniPoly& R);

/// P(Q(z,w)): univariate outer composed with a bivariate inner.
BiPoly compose_uni_bi(const UniPoly& P, const BiPoly& Q);

struct HomogeneityResult {
    bool homogeneous = false;
    std::optional<Exp> degree;  // nullopt for the zero polynomial

    friend bool operator==(const HomogeneityResult&, const HomogeneityResult&) = default;
};

/// Some(k) when every term has total degree k; the zero polynomial is
/// homogeneous of indeterminate degree.
HomogeneityResult is_homogeneous(const BiPoly& P);

/// With R(z,w) = P(Q(z,w)): if Q(0,0) = 0 and R is even, then P or Q must
/// be even. Hypothesis failures and violations come back as data.
TheoremCheck theorem_pqr_assert(const UniPoly& P, const BiPoly& Q);

std::ostream& operator<<(std::ostream& os, const BiPoly& p);

}  // namespace parity

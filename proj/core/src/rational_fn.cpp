#include "parity/rational_fn.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace parity {

RationalFunction RationalFunction::make(UniPoly num, UniPoly den) {
    if (den.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    RationalFunction f;
    if (num.is_zero()) return f;  // canonical zero: 0/1
    UniPoly g = poly_gcd(num, den);
    if (g.degree().value_or(0) > 0) {
        num = divmod(num, g).quotient;
        den = divmod(den, g).quotient;
    }
    const Rational lead = den.leading_coeff();
    if (!lead.is_one()) {
        Rational inv = Rational(1) / lead;
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    return f;
}

std::optional<Rational> RationalFunction::value_at(const Rational& x) const {
    Rational d = den_.eval_rational(x);
    if (d.is_zero()) return std::nullopt;
    return num_.eval_rational(x) / d;
}

std::complex<double> RationalFunction::eval(std::complex<double> z) const {
    return num_.eval(z) / den_.eval(z);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction f = *this;
    f.num_ = -f.num_;
    return f;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction::make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction::make(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction::make(a.num_ * b.num_, a.den_ * b.den_);
}

std::string RationalFunction::to_string() const {
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

namespace {

// sum over i of coeff_i * g_num^i * g_den^(n-i), the numerator of p(g) over
// the common denominator g_den^n
UniPoly clear_denominator(const UniPoly& p, const UniPoly& g_num, const UniPoly& g_den, Exp n) {
    UniPoly acc;
    for (const auto& [e, c] : p.terms())
        acc += (g_num.pow(e) * g_den.pow(n - e)).scaled(c);
    return acc;
}

}  // namespace

RationalFunction rf_compose(const RationalFunction& f, const RationalFunction& g) {
    const Exp n = std::max(f.num().degree().value_or(0), f.den().degree().value_or(0));
    UniPoly num_hat = clear_denominator(f.num(), g.num(), g.den(), n);
    UniPoly den_hat = clear_denominator(f.den(), g.num(), g.den(), n);
    if (den_hat.is_zero())
        throw DegenerateComposition("rf_compose: denominator vanishes identically under substitution");
    return RationalFunction::make(std::move(num_hat), std::move(den_hat));
}

RationalFunction reflect(const RationalFunction& f) {
    return RationalFunction::make(reflect(f.num()), reflect(f.den()));
}

UniPoly cyclotomic_polynomial(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    UniPoly xn_minus_1 = UniPoly::monomial(n, Rational(1)) - UniPoly::constant(Rational(1));
    UniPoly divisor = UniPoly::constant(Rational(1));
    for (long d = 1; d < n; ++d)
        if (n % d == 0) divisor = divisor * cyclotomic_polynomial(d);
    DivMod dm = divmod(xn_minus_1, divisor);
    return dm.quotient;
}

CyclicClassResult rf_cyclic_class(const RationalFunction& f, long modulus) {
    if (modulus < 2) throw std::invalid_argument("rf_cyclic_class: modulus must be >= 2");
    if (f.is_zero()) return CyclicClassResult::zero(modulus);

    const long N = modulus;
    const UniPoly phi = cyclotomic_polynomial(N);

    // For A = num(wz)*den(z) and B = num(z)*den(wz), collect, per z-degree m,
    // the coefficient of w^r (powers of the root of unity reduced mod N).
    // f in C_k  <=>  for every m, A_m(x) - x^k * B_m(x) = 0 mod Phi_N(x).
    const auto& nt = f.num().terms();
    const auto& dt = f.den().terms();
    std::map<Exp, std::vector<Rational>> a_vecs, b_vecs;
    auto bump = [&](std::map<Exp, std::vector<Rational>>& vecs, Exp m, long r, const Rational& v) {
        auto& vec = vecs[m];
        if (vec.empty()) vec.resize(static_cast<size_t>(N));
        vec[static_cast<size_t>(r)] += v;
    };
    for (const auto& [i, ci] : nt) {
        for (const auto& [j, cj] : dt) {
            Rational prod = ci * cj;
            bump(a_vecs, i + j, static_cast<long>(i % N), prod);
            bump(b_vecs, i + j, static_cast<long>(j % N), prod);
        }
    }

    auto reduces_to_zero = [&](const UniPoly& c) { return divmod(c, phi).remainder.is_zero(); };

    for (long k = 0; k < N; ++k) {
        bool all_zero = true;
        for (const auto& [m, av] : a_vecs) {
            std::map<Exp, Rational> cyc;
            for (long r = 0; r < N; ++r) {
                Rational v = av[static_cast<size_t>(r)];
                auto bit = b_vecs.find(m);
                if (bit != b_vecs.end()) {
                    // x^k * B_m shifts the root-of-unity power by k (mod N)
                    long src = ((r - k) % N + N) % N;
                    v -= bit->second[static_cast<size_t>(src)];
                }
                if (!v.is_zero()) cyc.emplace(r, std::move(v));
            }
            if (!cyc.empty() && !reduces_to_zero(UniPoly::from_terms(std::move(cyc)))) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) return CyclicClassResult::cls(k, modulus);
    }
    return CyclicClassResult::not_cyclic(modulus);
}

bool rf_is_odd_plus_constant(const RationalFunction& f) {
    RationalFunction sum = f + reflect(f);
    return sum.is_constant();
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    return os << f.to_string();
}

}  // namespace parity

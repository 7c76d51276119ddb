#include "parity/unipoly.hpp"

#include <stdexcept>
#include <utility>

#include "format_util.hpp"

namespace parity {

namespace {

std::complex<double> cpow_int(std::complex<double> z, Exp n) {
    std::complex<double> r(1.0, 0.0);
    while (n > 0) {
        if (n & 1) r *= z;
        n >>= 1;
        if (n) z *= z;
    }
    return r;
}

}  // namespace

UniPoly UniPoly::constant(Rational c) {
    UniPoly p;
    if (!c.is_zero()) p.terms_.emplace(0, std::move(c));
    return p;
}

UniPoly UniPoly::variable() { return monomial(1, Rational(1)); }

UniPoly UniPoly::monomial(Exp e, Rational c) {
    if (e < 0) throw std::invalid_argument("UniPoly: negative exponent");
    UniPoly p;
    if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
    return p;
}

UniPoly UniPoly::from_terms(std::map<Exp, Rational> terms) {
    UniPoly p;
    for (auto& [e, c] : terms) {
        if (e < 0) throw std::invalid_argument("UniPoly: negative exponent");
        if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
    }
    return p;
}

UniPoly UniPoly::from_coeffs(const std::vector<Rational>& ascending) {
    UniPoly p;
    for (Exp e = 0; e < static_cast<Exp>(ascending.size()); ++e) {
        if (!ascending[static_cast<size_t>(e)].is_zero())
            p.terms_.emplace(e, ascending[static_cast<size_t>(e)]);
    }
    return p;
}

std::optional<Exp> UniPoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

Rational UniPoly::coeff(Exp e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

const Rational& UniPoly::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("UniPoly: zero polynomial has no leading coefficient");
    return terms_.rbegin()->second;
}

bool UniPoly::is_even() const {
    for (const auto& [e, c] : terms_)
        if (e % 2 != 0) return false;
    return true;
}

bool UniPoly::is_odd() const {
    for (const auto& [e, c] : terms_)
        if (e % 2 == 0) return false;
    return true;
}

UniPoly UniPoly::operator-() const {
    UniPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Rational prod = ca * cb;
            auto it = r.terms_.find(ea + eb);
            if (it == r.terms_.end()) {
                r.terms_.emplace(ea + eb, std::move(prod));
            } else {
                it->second += prod;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

UniPoly UniPoly::scaled(const Rational& c) const {
    UniPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

UniPoly UniPoly::pow(Exp n) const {
    if (n < 0) throw std::invalid_argument("UniPoly::pow: negative exponent");
    UniPoly result = constant(Rational(1));
    UniPoly base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

std::complex<double> UniPoly::eval(std::complex<double> z) const {
    if (terms_.empty()) return {0.0, 0.0};
    auto it = terms_.rbegin();
    std::complex<double> acc = it->second.to_complex();
    Exp prev = it->first;
    for (++it; it != terms_.rend(); ++it) {
        acc = acc * cpow_int(z, prev - it->first) + it->second.to_complex();
        prev = it->first;
    }
    return acc * cpow_int(z, prev);
}

Rational UniPoly::eval_rational(const Rational& x) const {
    if (terms_.empty()) return Rational(0);
    auto it = terms_.rbegin();
    Rational acc = it->second;
    Exp prev = it->first;
    for (++it; it != terms_.rend(); ++it) {
        acc = acc * x.pow(prev - it->first) + it->second;
        prev = it->first;
    }
    return acc * x.pow(prev);
}

std::string UniPoly::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        detail::append_term(out, it->second, detail::power_body(var, it->first));
    return out;
}

UniPoly compose(const UniPoly& outer, const UniPoly& inner) {
    UniPoly acc;
    UniPoly cur = UniPoly::constant(Rational(1));
    Exp cur_exp = 0;
    for (const auto& [e, c] : outer.terms()) {
        if (e != cur_exp) {
            cur = cur * inner.pow(e - cur_exp);
            cur_exp = e;
        }
        acc += cur.scaled(c);
    }
    return acc;
}

UniPoly reflect(const UniPoly& p) {
    std::map<Exp, Rational> t;
    for (const auto& [e, c] : p.terms()) t.emplace(e, e % 2 == 0 ? c : -c);
    return UniPoly::from_terms(std::move(t));
}

EvenOddParts even_odd_parts(const UniPoly& p) {
    std::map<Exp, Rational> ev, od;
    for (const auto& [e, c] : p.terms()) (e % 2 == 0 ? ev : od).emplace(e, c);
    return {UniPoly::from_terms(std::move(ev)), UniPoly::from_terms(std::move(od))};
}

UniPoly shift_argument(const UniPoly& p, const Rational& a) {
    return compose(p, UniPoly::variable() + UniPoly::constant(a));
}

long CyclicClassResult::k() const {
    if (kind_ != Kind::Class)
        throw std::logic_error("CyclicClassResult: residue requested from a non-Class result");
    return k_;
}

std::string CyclicClassResult::str() const {
    switch (kind_) {
        case Kind::Zero:
            return "zero (in every class mod " + std::to_string(modulus_) + ")";
        case Kind::NotCyclic:
            return "not cyclic mod " + std::to_string(modulus_);
        case Kind::Class:
            return "C_" + std::to_string(k_) + " mod " + std::to_string(modulus_);
    }
    return {};
}

CyclicClassResult cyclic_class(const UniPoly& p, long modulus) {
    if (modulus < 2) throw std::invalid_argument("cyclic_class: modulus must be >= 2");
    if (p.is_zero()) return CyclicClassResult::zero(modulus);
    std::optional<long> k;
    for (const auto& [e, c] : p.terms()) {
        long r = static_cast<long>(e % modulus);
        if (!k) {
            k = r;
        } else if (*k != r) {
            return CyclicClassResult::not_cyclic(modulus);
        }
    }
    return CyclicClassResult::cls(*k, modulus);
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
    UniPoly q, r = a;
    const Exp db = *b.degree();
    const Rational& lb = b.leading_coeff();
    while (!r.is_zero() && *r.degree() >= db) {
        Exp e = *r.degree() - db;
        Rational c = r.leading_coeff() / lb;
        UniPoly t = UniPoly::monomial(e, c);
        q += t;
        r -= t * b;
    }
    return {std::move(q), std::move(r)};
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = divmod(x, y).remainder;
        // keep coefficients small: remainders are made monic as we go
        if (!r.is_zero()) r = r.scaled(Rational(1) / r.leading_coeff());
        x = std::move(y);
        y = std::move(r);
    }
    if (!x.is_zero()) x = x.scaled(Rational(1) / x.leading_coeff());
    return x;
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

std::ostream& operator<<(std::ostream& os, const CyclicClassResult& c) { return os << c.str(); }

}  // namespace parity

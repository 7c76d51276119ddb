#include "parity/bipoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "format_util.hpp"

namespace parity {

BiPoly BiPoly::constant(Rational c) {
    BiPoly p;
    if (!c.is_zero()) p.terms_.emplace(Key{0, 0}, std::move(c));
    return p;
}

BiPoly BiPoly::var_z() { return monomial(1, 0, Rational(1)); }
BiPoly BiPoly::var_w() { return monomial(0, 1, Rational(1)); }

BiPoly BiPoly::monomial(Exp i, Exp j, Rational c) {
    if (i < 0 || j < 0) throw std::invalid_argument("BiPoly: negative exponent");
    BiPoly p;
    if (!c.is_zero()) p.terms_.emplace(Key{i, j}, std::move(c));
    return p;
}

BiPoly BiPoly::from_terms(std::map<Key, Rational> terms) {
    BiPoly p;
    for (auto& [k, c] : terms) {
        if (k.first < 0 || k.second < 0) throw std::invalid_argument("BiPoly: negative exponent");
        if (!c.is_zero()) p.terms_.emplace(k, std::move(c));
    }
    return p;
}

BiPoly BiPoly::from_uni(const UniPoly& p, bool in_w) {
    BiPoly r;
    for (const auto& [e, c] : p.terms())
        r.terms_.emplace(in_w ? Key{0, e} : Key{e, 0}, c);
    return r;
}

bool BiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
}

Rational BiPoly::coeff(Exp i, Exp j) const {
    auto it = terms_.find(Key{i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Exp> BiPoly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    Exp d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

bool BiPoly::uses_w() const {
    for (const auto& [k, c] : terms_)
        if (k.second > 0) return true;
    return false;
}

bool BiPoly::is_even() const {
    for (const auto& [k, c] : terms_)
        if ((k.first + k.second) % 2 != 0) return false;
    return true;
}

bool BiPoly::is_even_per_variable() const {
    for (const auto& [k, c] : terms_)
        if (k.first % 2 != 0 || k.second % 2 != 0) return false;
    return true;
}

bool BiPoly::is_symmetric() const {
    for (const auto& [k, c] : terms_)
        if (coeff(k.second, k.first) != c) return false;
    return true;
}

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            BiPoly::Key k{ka.first + kb.first, ka.second + kb.second};
            Rational prod = ca * cb;
            auto it = r.terms_.find(k);
            if (it == r.terms_.end()) {
                r.terms_.emplace(k, std::move(prod));
            } else {
                it->second += prod;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

BiPoly BiPoly::scaled(const Rational& c) const {
    BiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

BiPoly BiPoly::pow(Exp n) const {
    if (n < 0) throw std::invalid_argument("BiPoly::pow: negative exponent");
    BiPoly result = constant(Rational(1));
    BiPoly base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

BiPoly BiPoly::transpose() const {
    BiPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.second, k.first}, c);
    return r;
}

UniPoly BiPoly::restrict_line(const Rational& a, const Rational& b) const {
    std::map<Exp, Rational> t;
    for (const auto& [k, c] : terms_) {
        Rational v = c * a.pow(k.first) * b.pow(k.second);
        if (v.is_zero()) continue;
        auto it = t.find(k.first + k.second);
        if (it == t.end())
            t.emplace(k.first + k.second, std::move(v));
        else
            it->second += v;
    }
    return UniPoly::from_terms(std::move(t));
}

std::vector<std::pair<Exp, BiPoly>> BiPoly::odd_homogeneous_components() const {
    std::map<Exp, BiPoly> groups;
    for (const auto& [k, c] : terms_) {
        Exp d = k.first + k.second;
        if (d % 2 == 0) continue;
        groups[d] += monomial(k.first, k.second, c);
    }
    std::vector<std::pair<Exp, BiPoly>> out;
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) out.emplace_back(it->first, it->second);
    return out;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Key, Rational>> items(terms_.begin(), terms_.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        Exp da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    std::string out;
    for (const auto& [k, c] : items) {
        std::string body = detail::power_body("z", k.first);
        std::string wpart = detail::power_body("w", k.second);
        if (!body.empty() && !wpart.empty())
            body += "*" + wpart;
        else if (!wpart.empty())
            body = wpart;
        detail::append_term(out, c, body);
    }
    return out;
}

UniPoly subst_uni(const BiPoly& P, const UniPoly& Q, const UniPoly& R) {
    // cache powers of Q and R up to the exponents that actually occur
    std::map<Exp, UniPoly> qp, rp;
    auto power = [](std::map<Exp, UniPoly>& cache, const UniPoly& base, Exp e) -> const UniPoly& {
        auto it = cache.find(e);
        if (it == cache.end()) it = cache.emplace(e, base.pow(e)).first;
        return it->second;
    };
    UniPoly acc;
    for (const auto& [k, c] : P.terms())
        acc += (power(qp, Q, k.first) * power(rp, R, k.second)).scaled(c);
    return acc;
}

BiPoly compose_uni_bi(const UniPoly& P, const BiPoly& Q) {
    BiPoly acc;
    BiPoly cur = BiPoly::constant(Rational(1));
    Exp cur_exp = 0;
    for (const auto& [e, c] : P.terms()) {
        if (e != cur_exp) {
            cur = cur * Q.pow(e - cur_exp);
            cur_exp = e;
        }
        acc += cur.scaled(c);
    }
    return acc;
}

HomogeneityResult is_homogeneous(const BiPoly& P) {
    if (P.is_zero()) return {true, std::nullopt};
    std::optional<Exp> d;
    for (const auto& [k, c] : P.terms()) {
        Exp td = k.first + k.second;
        if (!d) {
            d = td;
        } else if (*d != td) {
            return {false, std::nullopt};
        }
    }
    return {true, d};
}

TheoremCheck theorem_pqr_assert(const UniPoly& P, const BiPoly& Q) {
    if (!Q.value_at_origin().is_zero()) return TheoremCheck::unmet("Q(0,0) != 0");
    BiPoly R = compose_uni_bi(P, Q);
    if (!R.is_even()) return TheoremCheck::unmet("R = P(Q) is not even");
    if (P.is_even() || Q.is_even()) return TheoremCheck::holds();
    return TheoremCheck::violation("P(Q) even with Q(0,0)=0, but neither P nor Q even: P = " +
                                   P.to_string() + ", Q = " + Q.to_string());
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.to_string(); }

}  // namespace parity

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace parity {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. Zero is stored as 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    /// Parses "a" or "a/b", with an optional leading sign on a.
    static Rational from_string(const std::string& text);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    Rational operator-() const {
        Rational r(*this);
        r.num_ = -r.num_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// Exact integer power; a negative exponent inverts (throws on zero base).
    Rational pow(long long e) const {
        if (e < 0) {
            if (is_zero()) throw std::domain_error("Rational: 0 raised to a negative power");
            Rational inv(den_, num_);
            return inv.pow(-e);
        }
        Rational r(boost::multiprecision::pow(num_, static_cast<unsigned>(e)),
                   boost::multiprecision::pow(den_, static_cast<unsigned>(e)));
        return r;
    }

    /// Exact square root, when one exists in the rationals.
    std::optional<Rational> sqrt() const {
        if (sign() < 0) return std::nullopt;
        BigInt rn = boost::multiprecision::sqrt(num_);
        BigInt rd = boost::multiprecision::sqrt(den_);
        if (rn * rn != num_ || rd * rd != den_) return std::nullopt;
        return Rational(rn, rd);
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    double to_double() const {
        double dn = num_.convert_to<double>();
        double dd = den_.convert_to<double>();
        if (std::isfinite(dn) && std::isfinite(dd) && dd != 0.0) return dn / dd;
        // magnitudes outside double range: rescale by powers of two first
        BigInt n = boost::multiprecision::abs(num_);
        long long nb = n.is_zero() ? 0 : static_cast<long long>(boost::multiprecision::msb(n));
        long long db = static_cast<long long>(boost::multiprecision::msb(den_));
        long long ns = std::max(0LL, nb - 60), ds = std::max(0LL, db - 60);
        double v = (n >> static_cast<unsigned>(ns)).convert_to<double>() /
                   (den_ >> static_cast<unsigned>(ds)).convert_to<double>();
        v = std::ldexp(v, static_cast<int>(ns - ds));
        return sign() < 0 ? -v : v;
    }

    std::complex<double> to_complex() const { return {to_double(), 0.0}; }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

private:
    BigInt num_, den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }
};

inline Rational Rational::from_string(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt n(text.substr(0, slash));
        BigInt d(text.substr(slash + 1));
        return Rational(std::move(n), std::move(d));
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("Rational::from_string: cannot parse \"" + text + "\"");
    }
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace parity

#include "parity/witness.hpp"

#include <cmath>
#include <numbers>

#include "parity/verification.hpp"

namespace parity {

namespace {

std::complex<double> cpow_int(std::complex<double> z, long long n) {
    std::complex<double> r(1.0, 0.0);
    while (n > 0) {
        if (n & 1) r *= z;
        n >>= 1;
        if (n) z *= z;
    }
    return r;
}

std::string shifted_var(const Rational& k) {
    if (k.is_zero()) return "z";
    if (k.sign() < 0) return "z + " + (-k).str();
    return "z - " + k.str();
}

}  // namespace

std::complex<double> eval_witness(const Witness& w, std::complex<double> z) {
    struct Eval {
        std::complex<double> z;
        std::complex<double> operator()(const WitnessIdentity&) const { return z; }
        std::complex<double> operator()(const WitnessShiftedSquare& w) const {
            std::complex<double> t = z - w.k.to_complex();
            return t * t;
        }
        std::complex<double> operator()(const WitnessCosSqrt& w) const {
            std::complex<double> d = std::sqrt(w.d_squared.to_complex());
            std::complex<double> alpha = w.kind == CosSqrtKind::EvenMaker
                                             ? 2.0 * std::numbers::pi / d
                                             : std::numbers::pi / (2.0 * d);
            return std::cos(alpha * std::sqrt(z - w.k.to_complex()));
        }
        std::complex<double> operator()(const WitnessPowerShift& w) const {
            return cpow_int(z - w.c.to_complex(), w.modulus);
        }
    };
    return std::visit(Eval{z}, w);
}

std::string witness_to_string(const Witness& w) {
    struct Str {
        std::string operator()(const WitnessIdentity&) const { return "z"; }
        std::string operator()(const WitnessShiftedSquare& w) const {
            return "(" + shifted_var(w.k) + ")^2";
        }
        std::string operator()(const WitnessCosSqrt& w) const {
            auto d = w.d_squared.sign() > 0 ? w.d_squared.sqrt() : std::nullopt;
            std::string ds = d ? d->str() : "sqrt(" + w.d_squared.str() + ")";
            std::string alpha = w.kind == CosSqrtKind::EvenMaker
                                    ? (ds == "1" ? "2*pi" : "2*pi/" + ds)
                                    : (ds == "1" ? "pi/2" : "pi/(2*" + ds + ")");
            return "cos(" + alpha + "*sqrt(" + shifted_var(w.k) + "))";
        }
        std::string operator()(const WitnessPowerShift& w) const {
            return "(" + shifted_var(w.c) + ")^" + std::to_string(w.modulus);
        }
    };
    return std::visit(Str{}, w);
}

void ResidualAccumulator::add(std::complex<double> lhs, std::complex<double> rhs) {
    double abs_res = std::abs(lhs - rhs);
    double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    add_abs(abs_res, scale);
}

void ResidualAccumulator::add_abs(double residual, double scale) {
    if (!std::isfinite(residual) || !std::isfinite(scale)) {
        non_finite_ = true;
        return;
    }
    max_abs_ = std::max(max_abs_, residual);
    max_rel_ = std::max(max_rel_, residual / scale);
}

VerificationReport ResidualAccumulator::finish(int samples, double tolerance, std::string note) const {
    VerificationReport r;
    r.samples = samples;
    r.tolerance = tolerance;
    r.max_abs_residual = max_abs_;
    r.max_rel_residual = max_rel_;
    if (non_finite_) {
        r.pass = false;
        r.note = note.empty() ? "non-finite evaluation" : note + "; non-finite evaluation";
    } else {
        r.pass = max_rel_ <= tolerance;
        r.note = std::move(note);
    }
    return r;
}

std::vector<std::complex<double>> unit_circle_points(int n) {
    std::vector<std::complex<double>> pts;
    pts.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        double theta = 2.0 * std::numbers::pi * j / n;
        pts.emplace_back(std::cos(theta), std::sin(theta));
    }
    return pts;
}

}  // namespace parity

#include "parity/rpe.hpp"

#include <cmath>
#include <numbers>

namespace parity {

std::optional<QuadOddForm> detect_quad_odd_form(const UniPoly& even_part, const UniPoly& odd_part) {
    if (odd_part.is_zero() || even_part.is_constant()) return std::nullopt;
    // p = (s+d)^2 + k  <=>  E = s^2 + d^2 + k and O = 2ds, which forces
    // deg E = 2 deg O and E - lambda*O^2 constant with lambda = lc(E)/lc(O)^2.
    if (*even_part.degree() != 2 * *odd_part.degree()) return std::nullopt;
    const Rational& lo = odd_part.leading_coeff();
    const Rational lambda = even_part.leading_coeff() / (lo * lo);
    UniPoly residue = even_part - (odd_part * odd_part).scaled(lambda);
    if (!residue.is_constant()) return std::nullopt;
    const Rational c = residue.constant_term();
    QuadOddForm form;
    form.odd_part = odd_part;
    form.d_squared = Rational(1) / (lambda * Rational(4));
    form.k = c - form.d_squared;
    // s = sqrt(lambda) * O when that root is rational (canonical d > 0)
    if (auto root = lambda.sqrt()) form.s = odd_part.scaled(*root);
    return form;
}

RpeClassification classify_rpe(const UniPoly& p) {
    EvenOddParts parts = even_odd_parts(p);
    if (parts.odd.is_zero()) return EvenA{};
    if (parts.even.is_constant()) return OddPlusConstB{parts.odd, parts.even.constant_term()};
    if (auto form = detect_quad_odd_form(parts.even, parts.odd)) return *form;
    return NotRpe{};
}

RpoClassification classify_rpo(const UniPoly& p) {
    EvenOddParts parts = even_odd_parts(p);
    if (parts.even.is_zero()) return OddA{};
    if (auto form = detect_quad_odd_form(parts.even, parts.odd)) return *form;
    return NotRpo{};
}

Witness build_witness(const RpeClassification& c) {
    struct Build {
        Witness operator()(const EvenA&) const { return WitnessIdentity{}; }
        Witness operator()(const OddPlusConstB& b) const { return WitnessShiftedSquare{b.k}; }
        Witness operator()(const QuadOddForm& q) const {
            return WitnessCosSqrt{CosSqrtKind::EvenMaker, q.d_squared, q.k};
        }
        Witness operator()(const NotRpe&) const {
            throw NoWitnessError("no non-constant entire f makes f(p) even");
        }
    };
    return std::visit(Build{}, c);
}

Witness build_witness(const RpoClassification& c) {
    struct Build {
        Witness operator()(const OddA&) const { return WitnessIdentity{}; }
        Witness operator()(const QuadOddForm& q) const {
            return WitnessCosSqrt{CosSqrtKind::OddMaker, q.d_squared, q.k};
        }
        Witness operator()(const NotRpo&) const {
            throw NoWitnessError("no non-constant entire f makes f(p) odd");
        }
    };
    return std::visit(Build{}, c);
}

VerificationReport verify_witness_numeric(const Witness& w, const UniPoly& p, ParityTarget target,
                                          int samples, double tol) {
    if (samples < 1) throw std::invalid_argument("verify_witness_numeric: samples must be >= 1");
    if (tol <= 0) throw std::invalid_argument("verify_witness_numeric: tol must be positive");
    ResidualAccumulator acc;
    for (const auto& x : unit_circle_points(samples)) {
        std::complex<double> lhs = eval_witness(w, p.eval(x));
        std::complex<double> rhs = eval_witness(w, p.eval(-x));
        acc.add(lhs, target == ParityTarget::Even ? rhs : -rhs);
    }
    return acc.finish(samples, tol,
                      target == ParityTarget::Even ? "F(p(x)) vs F(p(-x))" : "F(p(x)) vs -F(p(-x))");
}

PowerParityResult power_parity_check(const UniPoly& f, long n) {
    if (n < 1) throw std::invalid_argument("power_parity_check: n must be >= 1");
    if (!f.pow(n).is_even()) return {false, std::nullopt};
    PowerParityResult r;
    r.power_even = true;
    if (f.is_even())
        r.base_parity = PowerParityResult::BaseParity::Even;  // zero counts as even
    else if (f.is_odd())
        r.base_parity = PowerParityResult::BaseParity::Odd;
    else
        throw std::logic_error("power_parity_check: f^n even but f neither even nor odd");
    return r;
}

VerificationReport theorem_eo_demo(int samples, double tol) {
    if (samples < 1) throw std::invalid_argument("theorem_eo_demo: samples must be >= 1");
    auto p = [](std::complex<double> v) { return v * v * v * v - 2.0 * v * v; };
    auto q = [](std::complex<double> v) { return v * v + 2.0 * v; };
    ResidualAccumulator acc;
    for (int j = 0; j < samples; ++j) {
        double x = -std::numbers::pi + 2.0 * std::numbers::pi * j / samples;
        double c = std::cos(x), s = std::sin(x);
        double cm = std::cos(-x), sm = std::sin(-x);
        // p(cos x + sin x) is even and equals -4cos^4 x + 4cos^2 x - 1
        std::complex<double> pf = p({c + s, 0.0});
        acc.add(pf, p({cm + sm, 0.0}));
        acc.add(pf, {-4.0 * c * c * c * c + 4.0 * c * c - 1.0, 0.0});
        // q(cos x + sin x - 1) is odd
        acc.add(q({c + s - 1.0, 0.0}), -q({cm + sm - 1.0, 0.0}));
    }
    return acc.finish(samples, tol,
                      "p(f(x)) vs p(f(-x)); p(f(x)) vs -4cos^4+4cos^2-1; q(g(x)) vs -q(g(-x))");
}

std::string classification_label(const RpeClassification& c) {
    struct L {
        std::string operator()(const EvenA&) const { return "even (A)"; }
        std::string operator()(const OddPlusConstB&) const { return "odd-plus-constant (B)"; }
        std::string operator()(const QuadOddForm&) const { return "quadratic-of-odd (C)"; }
        std::string operator()(const NotRpe&) const { return "not RPE"; }
    };
    return std::visit(L{}, c);
}

std::string classification_label(const RpoClassification& c) {
    struct L {
        std::string operator()(const OddA&) const { return "odd (A)"; }
        std::string operator()(const QuadOddForm&) const { return "quadratic-of-odd (B)"; }
        std::string operator()(const NotRpo&) const { return "not RPO"; }
    };
    return std::visit(L{}, c);
}

}  // namespace parity

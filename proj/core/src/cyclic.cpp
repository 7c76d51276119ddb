#include "parity/cyclic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace parity {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (long d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::complex<double> cpow_int(std::complex<double> z, long long n) {
    std::complex<double> r(1.0, 0.0);
    while (n > 0) {
        if (n & 1) r *= z;
        n >>= 1;
        if (n) z *= z;
    }
    return r;
}

}  // namespace

PrimeModulus::PrimeModulus(long n) : n_(n) {
    if (!is_prime(n)) throw std::invalid_argument("PrimeModulus: " + std::to_string(n) + " is not prime");
}

std::complex<double> PrimeModulus::omega() const {
    double theta = 2.0 * std::numbers::pi / static_cast<double>(n_);
    return {std::cos(theta), std::sin(theta)};
}

RightCyclicResult right_cyclic_classify(const UniPoly& p, const PrimeModulus& m) {
    if (m.n() < 3)
        throw std::invalid_argument(
            "right_cyclic_classify: stated for N >= 3; use the parity classifiers for N = 2");
    const Rational p0 = p.constant_term();
    const UniPoly shifted = p - UniPoly::constant(p0);
    const CyclicClassResult cls = cyclic_class(shifted, m.n());
    if (!cls.in_c()) return {};

    RightCyclicResult r;
    r.exists = true;
    r.k = cls.is_class() ? cls.k() : 0;  // constant p: composition is constant, class 0
    r.witness = WitnessPowerShift{p0, m.n()};

    // exact check that the witness composition (p - p(0))^N lands in C_0
    UniPoly composed = compose(UniPoly::monomial(m.n(), Rational(1)), shifted);
    if (!cyclic_class(composed, m.n()).in_c0())
        throw std::logic_error("right_cyclic_classify: witness composition escaped C_0");
    return r;
}

CyclicClassResult composition_class(const UniPoly& p, const UniPoly& q, const PrimeModulus& m) {
    return cyclic_class(compose(p, q), m.n());
}

TheoremCheck proposition_c_assert(const UniPoly& p, const UniPoly& q, const PrimeModulus& m) {
    if (p.is_constant()) return TheoremCheck::unmet("p constant");
    if (!q.constant_term().is_zero()) return TheoremCheck::unmet("q(0) != 0");
    if (cyclic_class(q, m.n()).in_c()) return TheoremCheck::unmet("q is cyclic");
    CyclicClassResult result = composition_class(p, q, m);
    if (!result.in_c()) return TheoremCheck::holds();
    return TheoremCheck::violation("p(q) is " + result.str() + " for p = " + p.to_string() +
                                   ", q = " + q.to_string());
}

ShiftDecomposition shift_decompose(const UniPoly& p, const UniPoly& q, const PrimeModulus& m) {
    ShiftDecomposition out;
    if (q.constant_term().is_zero()) {
        out.reason = "q(0) = 0";
        return out;
    }
    if (p.is_constant()) {
        out.reason = "p constant";
        return out;
    }
    CyclicClassResult comp = composition_class(p, q, m);
    if (!comp.in_c()) {
        out.reason = "p(q) not cyclic";
        return out;
    }
    out.hypotheses_met = true;
    out.composition = comp;
    const Rational q0 = q.constant_term();
    out.r = q - UniPoly::constant(q0);
    out.s = shift_argument(p, q0);  // s(z) = p(z + q(0)), so p(z) = s(z - q(0))
    out.r_class = cyclic_class(out.r, m.n());
    out.s_class = cyclic_class(out.s, m.n());
    // with q outside C_0 (r not in C_0), both pieces must be cyclic;
    // otherwise the claim is vacuous for this instance
    if (out.r_class->in_c0())
        out.conclusion_ok = true;
    else
        out.conclusion_ok = out.r_class->in_c() && out.s_class->in_c();
    return out;
}

TheoremCheck self_composition_assert(const UniPoly& p, const PrimeModulus& m) {
    const UniPoly pp = compose(p, p);
    const CyclicClassResult pp_class = cyclic_class(pp, m.n());
    const CyclicClassResult p_class = cyclic_class(p, m.n());

    const bool a_applies = p.constant_term().is_zero() && pp_class.in_c();
    const bool b_applies = pp_class.in_c0();
    if (!a_applies && !b_applies)
        return TheoremCheck::unmet("neither p(0)=0 with p(p) cyclic, nor p(p) in C_0");
    if (a_applies && !p_class.in_c())
        return TheoremCheck::violation("p(0)=0, p(p) in C, but p = " + p.to_string() +
                                       " is not cyclic");
    if (b_applies && !p_class.in_c0())
        return TheoremCheck::violation("p(p) in C_0 but p = " + p.to_string() + " is " +
                                       p_class.str());
    return TheoremCheck::holds();
}

VerificationReport numeric_omega_check(const UniPoly& p, long k, const PrimeModulus& m, int samples,
                                       double tol) {
    if (samples < 1) throw std::invalid_argument("numeric_omega_check: samples must be >= 1");
    ResidualAccumulator acc;
    const std::complex<double> w = m.omega();
    const std::complex<double> wk = cpow_int(w, ((k % m.n()) + m.n()) % m.n());
    for (const auto& x : unit_circle_points(samples)) acc.add(p.eval(w * x), wk * p.eval(x));
    return acc.finish(samples, tol, "p(omega*x) vs omega^k * p(x)");
}

}  // namespace parity

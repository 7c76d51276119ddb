#pragma once

#include <complex>
#include <optional>
#include <string>

#include "parity/theorem_check.hpp"
#include "parity/unipoly.hpp"
#include "parity/verification.hpp"
#include "parity/witness.hpp"

namespace parity {

/// A verified prime modulus N with its primitive root of unity
/// omega = exp(2*pi*i/N). omega is used only on numeric paths; every exact
/// cyclic test is an exponent-residue scan.
class PrimeModulus {
public:
    /// Throws std::invalid_argument unless n is prime (trial division).
    explicit PrimeModulus(long n);

    long n() const { return n_; }
    std::complex<double> omega() const;

    friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

private:
    long n_;
};

/// Whether some non-constant entire f puts f(p) in C mod N (N >= 3 prime):
/// possible exactly when p - p(0) is cyclic, and then f(z) = (z - p(0))^N
/// works, landing the composition in C_0.
struct RightCyclicResult {
    bool exists = false;
    long k = 0;                      // class of p - p(0) when exists (0 for constant p)
    std::optional<Witness> witness;  // PowerShift{p(0), N} when exists

    friend bool operator==(const RightCyclicResult&, const RightCyclicResult&) = default;
};

RightCyclicResult right_cyclic_classify(const UniPoly& p, const PrimeModulus& m);

/// cyclic_class(p(q(z)), N), exact.
CyclicClassResult composition_class(const UniPoly& p, const UniPoly& q, const PrimeModulus& m);

/// Hypotheses: p nonconstant, q(0) = 0, q not cyclic. Conclusion: p(q) not
/// cyclic. A Violation is returned, never thrown, so sweeps can surface it.
TheoremCheck proposition_c_assert(const UniPoly& p, const UniPoly& q, const PrimeModulus& m);

/// Decomposition q = r + q(0), p = s(z - q(0)) for q(0) != 0, p nonconstant
/// and p(q) cyclic; when additionally r is not in C_0 (the q-not-in-C_0
/// hypothesis), both r and s must be cyclic.
struct ShiftDecomposition {
    bool hypotheses_met = false;
    std::string reason;  // why hypotheses failed
    UniPoly r;           // q - q(0)
    UniPoly s;           // p(z + q(0))
    std::optional<CyclicClassResult> r_class;
    std::optional<CyclicClassResult> s_class;
    std::optional<CyclicClassResult> composition;
    bool conclusion_ok = false;  // true when the decomposition claim holds (or is vacuous)
};

ShiftDecomposition shift_decompose(const UniPoly& p, const UniPoly& q, const PrimeModulus& m);

/// Self-composition claims, each checked exactly when its hypotheses hold:
/// (A) p(0) = 0 and p(p) cyclic imply p cyclic; (B) p(p) in C_0 implies p
/// in C_0.
TheoremCheck self_composition_assert(const UniPoly& p, const PrimeModulus& m);

/// Floating-point cross-check of the exact residue test:
/// |p(omega*x) - omega^k * p(x)| over unit-circle samples.
VerificationReport numeric_omega_check(const UniPoly& p, long k, const PrimeModulus& m, int samples,
                                       double tol);

}  // namespace parity

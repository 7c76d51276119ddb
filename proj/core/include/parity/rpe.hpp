#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "parity/unipoly.hpp"
#include "parity/verification.hpp"
#include "parity/witness.hpp"

namespace parity {

/// Requested a witness for a polynomial that admits none.
class NoWitnessError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// p is even; any f works, f(z) = z suffices.
struct EvenA {
    friend bool operator==(const EvenA&, const EvenA&) = default;
};

/// p = s + k with s odd nonzero and k constant.
struct OddPlusConstB {
    UniPoly s;
    Rational k;
    friend bool operator==(const OddPlusConstB&, const OddPlusConstB&) = default;
};

/// p = (s + d)^2 + k with s odd nonzero and d != 0. d is kept as d_squared:
/// d itself can be irrational or imaginary even for rational p, so the exact
/// layer stores the odd part O = 2ds together with d^2 (the fully rational
/// data O^2 = 4 * d_squared * s^2). When sqrt(lc(E)) / lc(O) happens to be
/// rational, the canonical s with d > 0 is materialized in `s`.
struct QuadOddForm {
    UniPoly odd_part;
    Rational d_squared;
    Rational k;
    std::optional<UniPoly> s;
    friend bool operator==(const QuadOddForm&, const QuadOddForm&) = default;
};

struct NotRpe {
    friend bool operator==(const NotRpe&, const NotRpe&) = default;
};
struct OddA {
    friend bool operator==(const OddA&, const OddA&) = default;
};
struct NotRpo {
    friend bool operator==(const NotRpo&, const NotRpo&) = default;
};

/// Outcome of the even-composer decision: some non-constant entire f makes
/// f(p) even exactly when p is even (A), odd plus a constant (B), or a
/// shifted square of an odd polynomial (C).
using RpeClassification = std::variant<EvenA, OddPlusConstB, QuadOddForm, NotRpe>;

/// Odd-composer version: f(p) can be made odd exactly when p is odd (A) or
/// a shifted square of an odd polynomial (B).
using RpoClassification = std::variant<OddA, QuadOddForm, NotRpo>;

RpeClassification classify_rpe(const UniPoly& p);
RpoClassification classify_rpo(const UniPoly& p);

/// Shared case test: E nonconstant, O nonzero, and E - lambda*O^2 constant
/// for lambda = lc(E)/lc(O)^2; then d^2 = 1/(4*lambda) and k = c - d^2.
std::optional<QuadOddForm> detect_quad_odd_form(const UniPoly& even_part, const UniPoly& odd_part);

Witness build_witness(const RpeClassification& c);  // throws NoWitnessError on NotRpe
Witness build_witness(const RpoClassification& c);  // throws NoWitnessError on NotRpo

enum class ParityTarget { Even, Odd };

/// Samples F(p(x)) -/+ F(p(-x)) on the complex unit circle and reports the
/// largest residual against the target symmetry.
VerificationReport verify_witness_numeric(const Witness& w, const UniPoly& p, ParityTarget target,
                                          int samples, double tol);

struct PowerParityResult {
    enum class BaseParity { Even, Odd };
    bool power_even = false;
    std::optional<BaseParity> base_parity;  // set when power_even

    friend bool operator==(const PowerParityResult&, const PowerParityResult&) = default;
};

/// Decides exactly whether f^n is even; when it is, f itself must be even
/// or odd, and that parity is reported.
PowerParityResult power_parity_check(const UniPoly& f, long n);

/// Fixed numeric demo: p = z^4 - 2z^2 composed with cos x + sin x is even
/// and equals -4cos^4 x + 4cos^2 x - 1; and q = z^2 + 2z composed with
/// cos x + sin x - 1 is odd. Sampled at `samples` real points in [-pi, pi).
VerificationReport theorem_eo_demo(int samples, double tol);

std::string classification_label(const RpeClassification& c);
std::string classification_label(const RpoClassification& c);

}  // namespace parity

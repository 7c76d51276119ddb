#pragma once

#include <complex>
#include <string>
#include <variant>

#include "parity/rational.hpp"

namespace parity {

/// f(z) = z. Composing changes nothing; used when p already has the target
/// symmetry.
struct WitnessIdentity {
    friend bool operator==(const WitnessIdentity&, const WitnessIdentity&) = default;
};

/// f(z) = (z - k)^2. For p = s + k with s odd, f(p) = s^2 is even.
struct WitnessShiftedSquare {
    Rational k;
    friend bool operator==(const WitnessShiftedSquare&, const WitnessShiftedSquare&) = default;
};

enum class CosSqrtKind { EvenMaker, OddMaker };

/// f(z) = cos(alpha * sqrt(z - k)) with alpha = 2*pi/d (EvenMaker) or
/// pi/(2d) (OddMaker), d the principal square root of d_squared. Entire in
/// (z - k) since cos composed with sqrt expands in whole powers; numeric
/// evaluation is branch-independent because cosine is even.
struct WitnessCosSqrt {
    CosSqrtKind kind;
    Rational d_squared;
    Rational k;
    friend bool operator==(const WitnessCosSqrt&, const WitnessCosSqrt&) = default;
};

/// f(z) = (z - c)^N with c = p(0); makes f(p) land in C_0 mod N.
struct WitnessPowerShift {
    Rational c;
    long modulus;
    friend bool operator==(const WitnessPowerShift&, const WitnessPowerShift&) = default;
};

using Witness = std::variant<WitnessIdentity, WitnessShiftedSquare, WitnessCosSqrt, WitnessPowerShift>;

std::complex<double> eval_witness(const Witness& w, std::complex<double> z);
std::string witness_to_string(const Witness& w);

}  // namespace parity

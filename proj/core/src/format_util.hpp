#pragma once

#include <string>

#include "parity/rational.hpp"

namespace parity::detail {

// Appends "c*body" (or "c" when body is empty) to out, with " + " / " - "
// separators and unit coefficients suppressed in front of a variable part.
inline void append_term(std::string& out, const Rational& c, const std::string& body) {
    const bool first = out.empty();
    const Rational mag = c.abs();
    if (first) {
        if (c.sign() < 0) out += "-";
    } else {
        out += c.sign() < 0 ? " - " : " + ";
    }
    if (body.empty()) {
        out += mag.str();
    } else {
        if (!mag.is_one()) out += mag.str() + "*";
        out += body;
    }
}

inline std::string power_body(const std::string& var, long long e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

}  // namespace parity::detail

#pragma once

#include <string>

namespace parity {

/// Outcome of asserting a proved statement on one instance. Hypothesis
/// failures and violations are data, not errors: exhaustive sweeps consume
/// them in bulk, and a Violation signals an implementation bug upstream.
struct TheoremCheck {
    enum class Status { HypothesesUnmet, Holds, Violation };

    Status status;
    std::string detail;  // unmet reason or violation details

    static TheoremCheck unmet(std::string why) {
        return {Status::HypothesesUnmet, std::move(why)};
    }
    static TheoremCheck holds() { return {Status::Holds, {}}; }
    static TheoremCheck violation(std::string details) {
        return {Status::Violation, std::move(details)};
    }

    bool is_violation() const { return status == Status::Violation; }
};

inline const char* to_label(TheoremCheck::Status s) {
    switch (s) {
        case TheoremCheck::Status::HypothesesUnmet:
            return "hypotheses-unmet";
        case TheoremCheck::Status::Holds:
            return "holds";
        case TheoremCheck::Status::Violation:
            return "VIOLATION";
    }
    return "";
}

}  // namespace parity

#pragma once

#include <complex>
#include <string>
#include <vector>

namespace parity {

/// Result of a floating-point residual check. A sample's relative residual
/// is |lhs - rhs| / max(1, |lhs|, |rhs|); the check passes when the largest
/// relative residual stays within tolerance and every evaluation was finite.
struct VerificationReport {
    int samples = 0;
    double tolerance = 0.0;
    double max_abs_residual = 0.0;
    double max_rel_residual = 0.0;
    bool pass = false;
    std::string note;
};

/// Accumulates residuals sample by sample; non-finite values mark the
/// report as a diagnostic failure instead of crashing.
class ResidualAccumulator {
public:
    void add(std::complex<double> lhs, std::complex<double> rhs);
    void add_abs(double residual, double scale);
    VerificationReport finish(int samples, double tolerance, std::string note = {}) const;

private:
    double max_abs_ = 0.0;
    double max_rel_ = 0.0;
    bool non_finite_ = false;
};

/// n evenly spaced points on the complex unit circle, starting at 1.
std::vector<std::complex<double>> unit_circle_points(int n);

}  // namespace parity

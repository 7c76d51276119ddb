#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "parity/bipoly.hpp"
#include "parity/cyclic.hpp"
#include "parity/rational_fn.hpp"
#include "parity/unipoly.hpp"

namespace parity {

enum class Family { Polynomial, RationalFunction, Bivariate };

/// Raised when a requested enumeration would exceed the configured ceiling;
/// the message carries the size estimate.
class FamilySizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SearchConfig {
    int max_degree = 3;
    std::vector<Rational> coefficient_set;  // nonempty, must contain 0
    std::optional<PrimeModulus> modulus;
    Family family = Family::Polynomial;
    int parallelism = 1;
    std::uint64_t ceiling = 100'000'000;  // refusal threshold on raw enumeration size
    int lemma_b_max_power = 4;
    int bivariate_max_degree = 2;  // total-degree bound for Q in the PQR sweeps
    std::uint64_t max_stored_examples = 200;

    /// degree <= 3 over {-2,-1,0,1,2}, serial.
    static SearchConfig defaults();
};

void validate_config(const SearchConfig& cfg);  // throws std::invalid_argument

enum class ConstantTermRule { Any, Zero, NonZero };

/// Deterministic, index-addressable enumeration of the nonzero polynomials
/// with degree <= max_degree and coefficients drawn from the given set:
/// graded by exact degree, then lexicographic on the coefficient tuple
/// (leading first) over the ascending-sorted set. Restartable from any
/// index.
class PolyFamily {
public:
    PolyFamily(int max_degree, std::vector<Rational> coefficients,
               ConstantTermRule rule = ConstantTermRule::Any, bool exclude_constants = false);

    std::uint64_t size() const { return size_; }
    UniPoly at(std::uint64_t index) const;
    /// |coefficients|^(max_degree+1), the measure tested against the ceiling.
    std::uint64_t raw_tuple_count() const;

private:
    int max_degree_;
    std::vector<Rational> coeffs_;   // sorted ascending, deduplicated
    std::vector<Rational> nonzero_;  // coeffs_ without 0
    ConstantTermRule rule_;
    int min_degree_;
    std::vector<std::uint64_t> degree_counts_;  // per degree min_degree_..max_degree_
    std::uint64_t size_ = 0;
};

/// Same scheme for nonzero bivariate polynomials graded by exact total
/// degree; within a degree block the coefficient tuple runs over monomials
/// sorted by (total degree desc, z-exponent desc).
class BiPolyFamily {
public:
    BiPolyFamily(int max_total_degree, std::vector<Rational> coefficients);

    std::uint64_t size() const { return size_; }
    BiPoly at(std::uint64_t index) const;
    std::uint64_t raw_tuple_count() const;

private:
    int max_degree_;
    std::vector<Rational> coeffs_;
    std::vector<std::uint64_t> degree_counts_;
    std::uint64_t size_ = 0;
};

/// Canonicalized (gcd-reduced, monic-denominator) rational functions with
/// numerator/denominator degrees <= max_degree, deduplicated, in
/// first-occurrence enumeration order.
struct RationalFamily {
    std::vector<RationalFunction> instances;
    std::uint64_t pairs_scanned = 0;  // raw (num, den) pairs before dedup
};

RationalFamily enumerate_rational_family(const SearchConfig& cfg);

struct SearchReport {
    std::string suite;
    std::string config_summary;
    std::uint64_t instances_checked = 0;
    std::vector<std::string> violations;           // sorted by enumeration order
    std::vector<std::string> supporting_examples;  // capped at max_stored_examples
    std::uint64_t supporting_count = 0;
    std::string status;  // "ok" exactly when violations is empty
    std::string summary;
    std::chrono::milliseconds elapsed{0};
};

/// Field-wise equality ignoring elapsed time (determinism checks).
bool same_outcome(const SearchReport& a, const SearchReport& b);

enum class TheoremSuite {
    PropC,            // p nonconstant, q(0)=0, q not cyclic => p(q) not cyclic
    ThmFA,            // q(0)=0, p(q) cyclic => class decomposition claims
    ThmFB,            // q(0)!=0 shift decomposition claims
    SelfComp,         // p(p) cyclic claims
    LemmaB,           // f^n even => f even or odd
    Pqr,              // P(Q(z,w)) even, Q(0,0)=0 => P or Q even
    BorelPolyRemark,  // f neither even nor odd-plus-constant => p(f) not even
    LemmaMod,         // m(n-1)+r !≡ 0 integer property
    PqrHomogeneous,   // P(Q(z,w)) homogeneous, Q(0,0)=0 => P or Q homogeneous
};

const char* suite_name(TheoremSuite t);
std::optional<TheoremSuite> suite_from_name(std::string_view name);

/// Exhaustive sweep asserting one proved statement over the configured
/// family; any violation is an implementation bug, and the report says so.
SearchReport run_theorem_suite(TheoremSuite t, const SearchConfig& cfg);

/// Instances with f(f) even, f not even, f(0) != 0, recording whether each
/// is odd-plus-constant. Polynomial non-conforming hits are violations;
/// rational ones are flagged as outside the question's entire-function
/// scope. Evidence only — no claim of resolving the question.
SearchReport search_open_q1(const SearchConfig& cfg);

/// Rational R outside C_0 with R(R) in C_0, for prime N >= 3. Hits are an
/// experimental outcome, never violations.
SearchReport search_open_q2(const PrimeModulus& m, const SearchConfig& cfg);

/// Pairs (P, Q) with P(Q(z,w)) symmetric but Q not symmetric; pure
/// counterexample search, asserts nothing.
SearchReport search_pqr_symmetric(const SearchConfig& cfg);

}  // namespace parity

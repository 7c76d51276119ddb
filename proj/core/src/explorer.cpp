#include "parity/explorer.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <map>
#include <set>
#include <utility>

#include "parity/rpe.hpp"

namespace parity {

namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kU64Max / b) return kU64Max;
    return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r = sat_mul(r, base);
    return r;
}

std::vector<Rational> sorted_unique(std::vector<Rational> coeffs) {
    std::sort(coeffs.begin(), coeffs.end());
    coeffs.erase(std::unique(coeffs.begin(), coeffs.end()), coeffs.end());
    return coeffs;
}

void enforce_ceiling(std::uint64_t raw, std::uint64_t ceiling, const std::string& what) {
    if (raw > ceiling)
        throw FamilySizeError(what + " needs " + std::to_string(raw) +
                              " raw instances, above the ceiling of " + std::to_string(ceiling));
}

std::string coeffs_to_string(const std::vector<Rational>& coeffs) {
    std::string s = "{";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) s += ",";
        s += coeffs[i].str();
    }
    return s + "}";
}

const char* family_name(Family f) {
    switch (f) {
        case Family::Polynomial: return "polynomial";
        case Family::RationalFunction: return "rational-function";
        case Family::Bivariate: return "bivariate";
    }
    return "";
}

std::string describe_config(const SearchConfig& cfg) {
    std::string s = std::string("family=") + family_name(cfg.family) +
                    " degree<=" + std::to_string(cfg.max_degree) +
                    " coeffs=" + coeffs_to_string(cfg.coefficient_set);
    if (cfg.modulus) s += " modulus=" + std::to_string(cfg.modulus->n());
    s += " parallelism=" + std::to_string(cfg.parallelism);
    return s;
}

// ------------------------------------------------------------------
// parallel index sweep with deterministic, order-preserving merge
// ------------------------------------------------------------------

struct SweepOutcome {
    std::uint64_t checked = 0;
    std::vector<std::pair<std::uint64_t, std::string>> violations;
    std::vector<std::pair<std::uint64_t, std::string>> supporting;
    std::uint64_t supporting_count = 0;
};

constexpr std::uint64_t kMaxStoredViolations = 1000;

template <typename Fn>
SweepOutcome parallel_sweep(std::uint64_t total, int parallelism, std::uint64_t example_cap,
                            Fn per_range) {
    int workers = std::max(1, parallelism);
    if (total < 64 || workers == 1) {
        SweepOutcome out;
        per_range(0, total, out, example_cap);
        return out;
    }
    std::vector<std::future<SweepOutcome>> futures;
    std::uint64_t chunk = (total + workers - 1) / static_cast<std::uint64_t>(workers);
    for (int w = 0; w < workers; ++w) {
        std::uint64_t begin = chunk * static_cast<std::uint64_t>(w);
        std::uint64_t end = std::min(total, begin + chunk);
        if (begin >= end) break;
        futures.push_back(std::async(std::launch::async, [=, &per_range]() {
            SweepOutcome out;
            per_range(begin, end, out, example_cap);
            return out;
        }));
    }
    SweepOutcome merged;
    for (auto& f : futures) {
        SweepOutcome part = f.get();
        merged.checked += part.checked;
        merged.supporting_count += part.supporting_count;
        for (auto& v : part.violations)
            if (merged.violations.size() < kMaxStoredViolations) merged.violations.push_back(std::move(v));
        for (auto& s : part.supporting)
            if (merged.supporting.size() < example_cap) merged.supporting.push_back(std::move(s));
    }
    return merged;
}

SearchReport finish_report(std::string suite, const SearchConfig& cfg, SweepOutcome outcome,
                           std::chrono::steady_clock::time_point start, std::string summary) {
    SearchReport r;
    r.suite = std::move(suite);
    r.config_summary = describe_config(cfg);
    r.instances_checked = outcome.checked;
    for (auto& [idx, text] : outcome.violations) r.violations.push_back(std::move(text));
    for (auto& [idx, text] : outcome.supporting) r.supporting_examples.push_back(std::move(text));
    r.supporting_count = outcome.supporting_count;
    r.status = r.violations.empty() ? "ok" : "violation";
    r.summary = std::move(summary);
    r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return r;
}

void record_support(SweepOutcome& out, std::uint64_t cap, std::uint64_t idx, std::string text) {
    ++out.supporting_count;
    if (out.supporting.size() < cap) out.supporting.emplace_back(idx, std::move(text));
}

void record_violation(SweepOutcome& out, std::uint64_t idx, std::string text) {
    if (out.violations.size() < kMaxStoredViolations)
        out.violations.emplace_back(idx, std::move(text));
}

}  // namespace

// ------------------------------------------------------------------
// configuration and families
// ------------------------------------------------------------------

SearchConfig SearchConfig::defaults() {
    SearchConfig cfg;
    cfg.coefficient_set = {Rational(-2), Rational(-1), Rational(0), Rational(1), Rational(2)};
    return cfg;
}

void validate_config(const SearchConfig& cfg) {
    if (cfg.max_degree < 1) throw std::invalid_argument("SearchConfig: max_degree must be >= 1");
    if (cfg.coefficient_set.empty())
        throw std::invalid_argument("SearchConfig: coefficient_set must be nonempty");
    if (std::find(cfg.coefficient_set.begin(), cfg.coefficient_set.end(), Rational(0)) ==
        cfg.coefficient_set.end())
        throw std::invalid_argument("SearchConfig: coefficient_set must contain 0");
    if (cfg.parallelism < 1) throw std::invalid_argument("SearchConfig: parallelism must be >= 1");
    if (cfg.lemma_b_max_power < 1)
        throw std::invalid_argument("SearchConfig: lemma_b_max_power must be >= 1");
}

PolyFamily::PolyFamily(int max_degree, std::vector<Rational> coefficients, ConstantTermRule rule,
                       bool exclude_constants)
    : max_degree_(max_degree),
      coeffs_(sorted_unique(std::move(coefficients))),
      rule_(rule),
      min_degree_(exclude_constants ? 1 : 0) {
    if (max_degree_ < 0) throw std::invalid_argument("PolyFamily: negative degree bound");
    for (const auto& c : coeffs_)
        if (!c.is_zero()) nonzero_.push_back(c);
    if (nonzero_.empty()) throw std::invalid_argument("PolyFamily: no nonzero coefficients");

    const std::uint64_t s = coeffs_.size();
    const std::uint64_t nz = nonzero_.size();
    for (int d = min_degree_; d <= max_degree_; ++d) {
        std::uint64_t count;
        if (d == 0) {
            count = rule_ == ConstantTermRule::Zero ? 0 : nz;
        } else {
            std::uint64_t a0 = rule_ == ConstantTermRule::Any ? s
                               : rule_ == ConstantTermRule::Zero ? 1
                                                                 : nz;
            count = sat_mul(sat_mul(nz, sat_pow(s, d - 1)), a0);
        }
        degree_counts_.push_back(count);
        size_ += count;
    }
}

std::uint64_t PolyFamily::raw_tuple_count() const {
    return sat_pow(coeffs_.size(), max_degree_ + 1);
}

UniPoly PolyFamily::at(std::uint64_t index) const {
    if (index >= size_) throw std::out_of_range("PolyFamily::at: index out of range");
    int d = min_degree_;
    for (std::size_t i = 0; i < degree_counts_.size(); ++i, ++d) {
        if (index < degree_counts_[i]) break;
        index -= degree_counts_[i];
    }
    const std::uint64_t s = coeffs_.size();
    const std::uint64_t nz = nonzero_.size();
    std::map<Exp, Rational> terms;
    if (d == 0) {
        terms.emplace(0, nonzero_[index]);
        return UniPoly::from_terms(std::move(terms));
    }
    // digits: leading (nonzero set), middles over the full set, constant per rule
    std::uint64_t a0_opts = rule_ == ConstantTermRule::Any ? s
                            : rule_ == ConstantTermRule::Zero ? 1
                                                              : nz;
    std::uint64_t inner = sat_mul(sat_pow(s, d - 1), a0_opts);
    std::uint64_t lead = index / inner;
    index %= inner;
    terms.emplace(d, nonzero_[lead]);
    for (int e = d - 1; e >= 1; --e) {
        std::uint64_t w = sat_mul(sat_pow(s, e - 1), a0_opts);
        std::uint64_t digit = index / w;
        index %= w;
        if (!coeffs_[digit].is_zero()) terms.emplace(e, coeffs_[digit]);
    }
    Rational a0 = rule_ == ConstantTermRule::Any ? coeffs_[index]
                  : rule_ == ConstantTermRule::Zero ? Rational(0)
                                                    : nonzero_[index];
    if (!a0.is_zero()) terms.emplace(0, a0);
    return UniPoly::from_terms(std::move(terms));
}

namespace {

// monomials of total degree <= d, sorted by (total degree desc, z-exp desc)
std::vector<BiPoly::Key> bi_monomials(int max_degree) {
    std::vector<BiPoly::Key> out;
    for (int d = max_degree; d >= 0; --d)
        for (int i = d; i >= 0; --i) out.emplace_back(i, d - i);
    return out;
}

}  // namespace

BiPolyFamily::BiPolyFamily(int max_total_degree, std::vector<Rational> coefficients)
    : max_degree_(max_total_degree), coeffs_(sorted_unique(std::move(coefficients))) {
    if (max_degree_ < 0) throw std::invalid_argument("BiPolyFamily: negative degree bound");
    // digit alphabet with zero first, so skipping digit rank 0 on the
    // top-degree block skips exactly the all-zero tuple
    std::vector<Rational> alphabet;
    alphabet.emplace_back(0);
    for (const auto& c : coeffs_)
        if (!c.is_zero()) alphabet.push_back(c);
    if (alphabet.size() != coeffs_.size())
        throw std::invalid_argument("BiPolyFamily: coefficient set must contain 0");
    coeffs_ = std::move(alphabet);
    const std::uint64_t s = coeffs_.size();
    for (int d = 0; d <= max_degree_; ++d) {
        // tuples over monomials of degree <= d whose top-degree part is nonzero
        std::uint64_t top = d + 1;
        std::uint64_t rest = static_cast<std::uint64_t>(d) * (d + 1) / 2;
        std::uint64_t count = sat_mul(sat_pow(s, static_cast<int>(top)) - 1,
                                      sat_pow(s, static_cast<int>(rest)));
        degree_counts_.push_back(count);
        size_ += count;
    }
}

std::uint64_t BiPolyFamily::raw_tuple_count() const {
    int monos = (max_degree_ + 1) * (max_degree_ + 2) / 2;
    return sat_pow(coeffs_.size(), monos);
}

BiPoly BiPolyFamily::at(std::uint64_t index) const {
    if (index >= size_) throw std::out_of_range("BiPolyFamily::at: index out of range");
    int d = 0;
    for (std::size_t i = 0; i < degree_counts_.size(); ++i, ++d) {
        if (index < degree_counts_[i]) break;
        index -= degree_counts_[i];
    }
    const std::uint64_t s = coeffs_.size();
    const std::uint64_t rest_count = sat_pow(s, d * (d + 1) / 2);
    std::uint64_t top_rank = index / rest_count + 1;  // skip the all-zero top tuple
    std::uint64_t rest_rank = index % rest_count;

    std::map<BiPoly::Key, Rational> terms;
    auto monos = bi_monomials(d);
    // first d+1 monomials are the degree-d block, remainder the lower block
    for (int pos = d; pos >= 0; --pos) {
        std::uint64_t digit = top_rank % s;
        top_rank /= s;
        if (!coeffs_[digit].is_zero()) terms.emplace(monos[static_cast<std::size_t>(pos)], coeffs_[digit]);
    }
    for (int pos = static_cast<int>(monos.size()) - 1; pos >= d + 1; --pos) {
        std::uint64_t digit = rest_rank % s;
        rest_rank /= s;
        if (!coeffs_[digit].is_zero()) terms.emplace(monos[static_cast<std::size_t>(pos)], coeffs_[digit]);
    }
    return BiPoly::from_terms(std::move(terms));
}

RationalFamily enumerate_rational_family(const SearchConfig& cfg) {
    validate_config(cfg);
    PolyFamily polys(cfg.max_degree, cfg.coefficient_set, ConstantTermRule::Any);
    std::uint64_t raw = sat_mul(polys.raw_tuple_count(), polys.raw_tuple_count());
    enforce_ceiling(raw, cfg.ceiling, "rational-function family");

    RationalFamily fam;
    fam.pairs_scanned = sat_mul(polys.size() + 1, polys.size());  // numerators include zero
    std::set<std::string> seen;
    for (std::uint64_t ni = 0; ni <= polys.size(); ++ni) {
        UniPoly num = ni == 0 ? UniPoly() : polys.at(ni - 1);
        for (std::uint64_t di = 0; di < polys.size(); ++di) {
            RationalFunction rf = RationalFunction::make(num, polys.at(di));
            if (seen.insert(rf.to_string()).second) fam.instances.push_back(std::move(rf));
            if (ni == 0) break;  // 0/den canonicalizes identically for every den
        }
    }
    return fam;
}

// ------------------------------------------------------------------
// theorem suites
// ------------------------------------------------------------------

const char* suite_name(TheoremSuite t) {
    switch (t) {
        case TheoremSuite::PropC: return "prop-c";
        case TheoremSuite::ThmFA: return "thm-f-a";
        case TheoremSuite::ThmFB: return "thm-f-b";
        case TheoremSuite::SelfComp: return "self-comp";
        case TheoremSuite::LemmaB: return "lemma-b";
        case TheoremSuite::Pqr: return "pqr";
        case TheoremSuite::BorelPolyRemark: return "borel-poly";
        case TheoremSuite::LemmaMod: return "lemma-mod";
        case TheoremSuite::PqrHomogeneous: return "pqr-homogeneous";
    }
    return "";
}

std::optional<TheoremSuite> suite_from_name(std::string_view name) {
    for (TheoremSuite t :
         {TheoremSuite::PropC, TheoremSuite::ThmFA, TheoremSuite::ThmFB, TheoremSuite::SelfComp,
          TheoremSuite::LemmaB, TheoremSuite::Pqr, TheoremSuite::BorelPolyRemark,
          TheoremSuite::LemmaMod, TheoremSuite::PqrHomogeneous}) {
        if (name == suite_name(t)) return t;
    }
    return std::nullopt;
}

namespace {

PrimeModulus require_modulus(const SearchConfig& cfg, const char* suite) {
    if (!cfg.modulus)
        throw std::invalid_argument(std::string(suite) + ": a prime modulus is required");
    return *cfg.modulus;
}

SearchReport run_prop_c(const SearchConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    PrimeModulus m = require_modulus(cfg, "prop-c");
    PolyFamily ps(cfg.max_degree, cfg.coefficient_set, ConstantTermRule::Any, true);
    PolyFamily qs(cfg.max_degree, cfg.coefficient_set, ConstantTermRule::Zero);
    enforce_ceiling(ps.raw_tuple_count(), cfg.ceiling, "p family");
    enforce_ceiling(sat_mul(ps.size(), qs.size()), cfg.ceiling, "(p, q) sweep");

    std::uint64_t total = ps.size() * qs.size();
    SweepOutcome outcome = parallel_sweep(
        total, cfg.parallelism, cfg.max_stored_examples,
        [&](std::uint64_t begin, std::uint64_t end, SweepOutcome& out, std::uint64_t cap) {
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                UniPoly q = qs.at(idx / ps.size());
                UniPoly p = ps.at(idx % ps.size());
                TheoremCheck check = proposition_c_assert(p, q, m);
                ++out.checked;
                if (check.is_violation())
                    record_violation(out, idx, check.detail);
                else if (check.status == TheoremCheck::Status::Holds)
                    record_support(out, cap, idx,
                                   "p = " + p.to_string() + "; q = " + q.to_string());
            }
        });
    return finish_report("prop-c", cfg, std::move(outcome), start,
                         "p nonconstant, q(0)=0, q not cyclic => p(q) not cyclic; exhaustive");
}

SearchReport run_thm_f_a(const SearchConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    PrimeModulus m = require_modulus(cfg, "thm-f-a");
    PolyFamily ps(cfg.max_degree, cfg.coefficient_set, ConstantTermRule::Any);
    PolyFamily qs(cfg.max_degree, cfg.coefficient_set, ConstantTermRule::Zero);
    enforce_ceiling(sat_mul(ps.size(), qs.size()), cfg.ceiling, "(p, q) sweep");

    std::uint64_t total = ps.size() * qs.size();
    SweepOutcome outcome = parallel_sweep(
        total, cfg.parallelism, cfg.max_stored_examples,
        [&](std::uint64_t begin, std::uint64_t end, SweepOutcome& out, std::uint64_t cap) {
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                UniPoly q = qs.at(idx / ps.size());
                UniPoly p = ps.at(idx % ps.size());
                ++out.checked;
                CyclicClassResult comp = cyclic_class(compose(p, q), m.n());
                if (!comp.in_c()) continue;
                CyclicClassResult pc = cyclic_class(p, m.n());
                CyclicClassResult qc = cyclic_class(q, m.n());
                std::string inst = "p = " + p.to_string() + " [" + pc.str() + "]; q = " +
                                   q.to_string() + " [" + qc.str() + "]; p(q) in " + comp.str();
                bool ok = qc.in_c() || pc.in_c();
                if (!p.is_constant() && !qc.in_c0()) ok = ok && pc.in_c() && qc.in_c();
                if (comp.in_c0()) ok = ok && (pc.in_c0() || qc.in_c0());
                if (!ok)
                    record_violation(out, idx, inst);
                else
                    record_support(out, cap, idx, inst);
            }
        });
    return finish_report("thm-f-a", cfg, std::move(outcome), start,
                         "q(0)=0 and p(q) cyclic => class membership claims; exhaustive");
}

SearchReport run_thm_f_b(const SearchConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    PrimeModulus m = require_modulus(cfg, "thm-f-b");
    PolyFamily ps(cfg.max_degree, cfg.coefficient_set, ConstantTermRule::Any, true);
    PolyFamily qs(cfg.max_degree, cfg.coefficient_set, ConstantTermRule::NonZero);
    enforce_ceiling(sat_mul(ps.size(), qs.size()), cfg.ceiling, "(p, q) sweep");

    std::uint64_t total = ps.size() * qs.size();
    SweepOutcome outcome = parallel_sweep(
        total, cfg.parallelism, cfg.max_stored_examples,
        [&](std::uint64_t begin, std::uint64_t end, SweepOutcome& out, std::uint64_t cap) {
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                UniPoly q = qs.at(idx / ps.size());
                UniPoly p = ps.at(idx % ps.size());
                ++out.checked;
                ShiftDecomposition d = shift_decompose(p, q, m);
                if (!d.hypotheses_met) continue;
                if (d.r_class->in_c0()) continue;  // q in C_0: claim vacuous
                std::string inst = "p = " + p.to_string() + "; q = " + q.to_string() +
                                   "; r = " + d.r.to_string() + " [" + d.r_class->str() +
                                   "]; s = " + d.s.to_string() + " [" + d.s_class->str() + "]";
                if (!d.conclusion_ok)
                    record_violation(out, idx, inst);
                else
                    record_support(out, cap, idx, inst);
            }
        });
    return finish_report("thm-f-b", cfg, std::move(outcome), start,
                         "q(0)!=0, p nonconstant, q not in C_0, p(q) cyclic => q = r + q(0) and "
                         "p = s(z - q(0)) with r, s cyclic; exhaustive");
}

SearchReport run_self_comp(const SearchConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    PrimeModulus m = require_modulus(cfg, "self-comp");
    PolyFamily ps(cfg.max_degree, cfg.coefficient_set, ConstantTermRule::Any);
    enforce_ceiling(ps.raw_tuple_count(), cfg.ceiling, "p family");

    SweepOutcome outcome = parallel_sweep(
        ps.size(), cfg.parallelism, cfg.max_stored_examples,
        [&](std::uint64_t begin, std::uint64_t end, SweepOutcome& out, std::uint64_t cap) {
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                UniPoly p = ps.at(idx);
                ++out.checked;
                TheoremCheck check = self_composition_assert(p, m);
                if (check.is_violation())
                    record_violation(out, idx, check.detail);
                else if (check.status == TheoremCheck::Status::Holds)
                    record_support(out, cap, idx, "p = " + p.to_string());
            }
        });
    return finish_report("self-comp", cfg, std::move(outcome), start,
                         "p(0)=0 & p(p) cyclic => p cyclic; p(p) in C_0 => p in C_0; exhaustive");
}

SearchReport run_lemma_b(const SearchConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    PolyFamily fs(cfg.max_degree, cfg.coefficient_set, ConstantTermRule::Any);
    enforce_ceiling(fs.raw_tuple_count(), cfg.ceiling, "f family");
    const int nmax = cfg.lemma_b_max_power;

    std::uint64_t total = fs.size() * static_cast<std::uint64_t>(nmax);
    SweepOutcome outcome = parallel_sweep(
        total, cfg.parallelism, cfg.max_stored_examples,
        [&](std::uint64_t begin, std::uint64_t end, SweepOutcome& out, std::uint64_t cap) {
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                UniPoly f = fs.at(idx / static_cast<std::uint64_t>(nmax));
                long n = static_cast<long>(idx % static_cast<std::uint64_t>(nmax)) + 1;
                ++out.checked;
                try {
                    PowerParityResult r = power_parity_check(f, n);
                    if (r.power_even)
                        record_support(out, cap, idx,
                                       "f = " + f.to_string() + "; n = " + std::to_string(n));
                } catch (const std::logic_error& e) {
                    record_violation(out, idx, "f = " + f.to_string() +
                                                   "; n = " + std::to_string(n) + "; " + e.what());
                }
            }
        });
    return finish_report("lemma-b", cfg, std::move(outcome), start,
                         "f^n even implies f even or odd, n = 1.." + std::to_string(nmax) +
                             "; exhaustive");
}

SearchReport run_pqr(const SearchConfig& cfg, bool homogeneous_version) {
    auto start = std::chrono::steady_clock::now();
    PolyFamily ps(cfg.max_degree, cfg.coefficient_set, ConstantTermRule::Any);
    BiPolyFamily qs(cfg.bivariate_max_degree, cfg.coefficient_set);
    enforce_ceiling(qs.raw_tuple_count(), cfg.ceiling, "Q family");
    enforce_ceiling(sat_mul(ps.size(), qs.size()), cfg.ceiling, "(P, Q) sweep");

    std::uint64_t total = ps.size() * qs.size();
    const char* name = homogeneous_version ? "pqr-homogeneous" : "pqr";
    SweepOutcome outcome = parallel_sweep(
        total, cfg.parallelism, cfg.max_stored_examples,
        [&](std::uint64_t begin, std::uint64_t end, SweepOutcome& out, std::uint64_t cap) {
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                BiPoly Q = qs.at(idx / ps.size());
                UniPoly P = ps.at(idx % ps.size());
                ++out.checked;
                if (!homogeneous_version) {
                    TheoremCheck check = theorem_pqr_assert(P, Q);
                    if (check.is_violation())
                        record_violation(out, idx, check.detail);
                    else if (check.status == TheoremCheck::Status::Holds)
                        record_support(out, cap, idx,
                                       "P = " + P.to_string() + "; Q = " + Q.to_string());
                    continue;
                }
                if (!Q.value_at_origin().is_zero()) continue;
                BiPoly R = compose_uni_bi(P, Q);
                if (!is_homogeneous(R).homogeneous) continue;
                bool p_homog = P.terms().size() <= 1;
                bool q_homog = is_homogeneous(Q).homogeneous;
                std::string inst = "P = " + P.to_string() + "; Q = " + Q.to_string() +
                                   "; R = " + R.to_string();
                if (p_homog || q_homog)
                    record_support(out, cap, idx, inst);
                else
                    record_violation(out, idx, inst);
            }
        });
    return finish_report(name, cfg, std::move(outcome), start,
                         homogeneous_version
                             ? "P(Q) homogeneous with Q(0,0)=0 => P or Q homogeneous; exhaustive"
                             : "P(Q) even with Q(0,0)=0 => P or Q even; exhaustive");
}

SearchReport run_borel_poly(const SearchConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    PolyFamily fs(cfg.max_degree, cfg.coefficient_set, ConstantTermRule::Any);
    PolyFamily ps(cfg.max_degree, cfg.coefficient_set, ConstantTermRule::Any, true);
    enforce_ceiling(sat_mul(fs.size(), ps.size()), cfg.ceiling, "(f, p) sweep");

    auto qualifying = [](const UniPoly& f) {
        // neither even nor odd-plus-constant: some odd exponent AND some
        // even exponent >= 2
        bool has_odd = false, has_even_ge2 = false;
        for (const auto& [e, c] : f.terms()) {
            if (e % 2 == 1) has_odd = true;
            if (e % 2 == 0 && e >= 2) has_even_ge2 = true;
        }
        return has_odd && has_even_ge2;
    };

    std::uint64_t total = fs.size() * ps.size();
    SweepOutcome outcome = parallel_sweep(
        total, cfg.parallelism, cfg.max_stored_examples,
        [&](std::uint64_t begin, std::uint64_t end, SweepOutcome& out, std::uint64_t cap) {
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                UniPoly f = fs.at(idx / ps.size());
                ++out.checked;
                if (!qualifying(f)) continue;
                UniPoly p = ps.at(idx % ps.size());
                UniPoly pf = compose(p, f);
                if (cyclic_class(pf, 2).in_c0())
                    record_violation(out, idx,
                                     "p = " + p.to_string() + "; f = " + f.to_string() +
                                         "; p(f) = " + pf.to_string() + " is even");
                else
                    record_support(out, cap, idx, "p = " + p.to_string() + "; f = " + f.to_string());
            }
        });
    return finish_report("borel-poly", cfg, std::move(outcome), start,
                         "f neither even nor odd-plus-constant, p nonconstant => p(f) not even; "
                         "exhaustive");
}

SearchReport run_lemma_mod(const SearchConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    std::vector<long> moduli;
    if (cfg.modulus)
        moduli.push_back(cfg.modulus->n());
    else
        moduli = {2, 3, 5, 7, 11, 13};

    SweepOutcome outcome;
    for (long N : moduli) {
        long bound = 3 * N;
        for (long mm = 1; mm <= bound; ++mm) {
            for (long n = 1; n <= bound; ++n) {
                for (long r = 1; r <= bound; ++r) {
                    ++outcome.checked;
                    if (n % N != 0 || r % N == mm % N) continue;
                    if ((mm * (n - 1) + r) % N == 0)
                        record_violation(outcome, outcome.checked,
                                         "N=" + std::to_string(N) + " m=" + std::to_string(mm) +
                                             " n=" + std::to_string(n) +
                                             " r=" + std::to_string(r));
                    else
                        ++outcome.supporting_count;
                }
            }
        }
    }
    return finish_report("lemma-mod", cfg, std::move(outcome), start,
                         "n ≡ 0 and r !≡ m (mod N) imply m(n-1)+r !≡ 0 (mod N); parameters <= 3N");
}

}  // namespace

SearchReport run_theorem_suite(TheoremSuite t, const SearchConfig& cfg) {
    validate_config(cfg);
    switch (t) {
        case TheoremSuite::PropC: return run_prop_c(cfg);
        case TheoremSuite::ThmFA: return run_thm_f_a(cfg);
        case TheoremSuite::ThmFB: return run_thm_f_b(cfg);
        case TheoremSuite::SelfComp: return run_self_comp(cfg);
        case TheoremSuite::LemmaB: return run_lemma_b(cfg);
        case TheoremSuite::Pqr: return run_pqr(cfg, false);
        case TheoremSuite::BorelPolyRemark: return run_borel_poly(cfg);
        case TheoremSuite::LemmaMod: return run_lemma_mod(cfg);
        case TheoremSuite::PqrHomogeneous: return run_pqr(cfg, true);
    }
    throw std::invalid_argument("run_theorem_suite: unknown suite");
}

// ------------------------------------------------------------------
// open-question searches
// ------------------------------------------------------------------

SearchReport search_open_q1(const SearchConfig& cfg) {
    validate_config(cfg);
    auto start = std::chrono::steady_clock::now();
    if (cfg.family == Family::Bivariate)
        throw std::invalid_argument("search_open_q1: family must be polynomial or rational");

    SweepOutcome outcome;
    if (cfg.family == Family::Polynomial) {
        PolyFamily fs(cfg.max_degree, cfg.coefficient_set, ConstantTermRule::Any);
        enforce_ceiling(fs.raw_tuple_count(), cfg.ceiling, "f family");
        outcome = parallel_sweep(
            fs.size(), cfg.parallelism, cfg.max_stored_examples,
            [&](std::uint64_t begin, std::uint64_t end, SweepOutcome& out, std::uint64_t cap) {
                for (std::uint64_t idx = begin; idx < end; ++idx) {
                    UniPoly f = fs.at(idx);
                    ++out.checked;
                    if (f.constant_term().is_zero()) continue;
                    if (cyclic_class(f, 2).in_c0()) continue;  // f even
                    if (!cyclic_class(compose(f, f), 2).in_c0()) continue;
                    bool odd_plus_const = even_odd_parts(f).even.is_constant();
                    std::string inst = "f = " + f.to_string() + "; f(f) even, f not even, f(0) = " +
                                       f.constant_term().str();
                    if (odd_plus_const)
                        record_support(out, cap, idx, inst + "; shape: odd + constant");
                    else
                        record_violation(out, idx, inst + "; shape: NOT odd + constant");
                }
            });
    } else {
        RationalFamily fam = enumerate_rational_family(cfg);
        outcome = parallel_sweep(
            fam.instances.size(), cfg.parallelism, cfg.max_stored_examples,
            [&](std::uint64_t begin, std::uint64_t end, SweepOutcome& out, std::uint64_t cap) {
                for (std::uint64_t idx = begin; idx < end; ++idx) {
                    const RationalFunction& f = fam.instances[idx];
                    ++out.checked;
                    if (!f.analytic_at_origin()) continue;
                    if (f.num().constant_term().is_zero()) continue;  // f(0) = 0
                    if (rf_cyclic_class(f, 2).in_c0()) continue;      // f even
                    RationalFunction ff;
                    try {
                        ff = rf_compose(f, f);
                    } catch (const DegenerateComposition&) {
                        continue;
                    }
                    if (!rf_cyclic_class(ff, 2).in_c0()) continue;
                    std::string inst = "f = " + f.to_string() + "; f(f) = " + ff.to_string() +
                                       " even, f not even, f(0) != 0";
                    if (rf_is_odd_plus_constant(f))
                        record_support(out, cap, idx, inst + "; shape: odd + constant");
                    else
                        record_support(out, cap, idx,
                                       inst + "; shape: NOT odd + constant [rational, outside the "
                                              "entire-function scope of the question]");
                }
            });
    }
    SearchReport r = finish_report(
        "open-q1", cfg, std::move(outcome), start,
        "search for f with f(f) even, f not even, f(0) != 0, asking whether f = odd + constant; "
        "bounded-family evidence only, the question (posed for entire f) is not resolved here");
    return r;
}

SearchReport search_open_q2(const PrimeModulus& m, const SearchConfig& cfg) {
    validate_config(cfg);
    auto start = std::chrono::steady_clock::now();
    if (m.n() < 3) throw std::invalid_argument("search_open_q2: the question is posed for N >= 3");
    if (cfg.family != Family::RationalFunction)
        throw std::invalid_argument("search_open_q2: family must be rational-function");

    RationalFamily fam = enumerate_rational_family(cfg);
    SweepOutcome outcome = parallel_sweep(
        fam.instances.size(), cfg.parallelism, cfg.max_stored_examples,
        [&](std::uint64_t begin, std::uint64_t end, SweepOutcome& out, std::uint64_t cap) {
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                const RationalFunction& R = fam.instances[idx];
                ++out.checked;
                if (!R.analytic_at_origin()) continue;
                if (rf_cyclic_class(R, m.n()).in_c0()) continue;
                RationalFunction RR;
                try {
                    RR = rf_compose(R, R);
                } catch (const DegenerateComposition&) {
                    continue;
                }
                if (!RR.analytic_at_origin()) continue;
                if (!rf_cyclic_class(RR, m.n()).in_c0()) continue;
                record_support(out, cap, idx,
                               "R = " + R.to_string() + "; R(R) = " + RR.to_string() +
                                   " in C_0 mod " + std::to_string(m.n()) + ", R not in C_0");
            }
        });
    SearchConfig annotated = cfg;
    annotated.modulus = m;
    SearchReport r = finish_report(
        "open-q2", annotated, std::move(outcome), start,
        "search for rational R not in C_0 with R(R) in C_0 (R and R(R) analytic at 0); hits are "
        "an experimental outcome, no claim either way");
    return r;
}

SearchReport search_pqr_symmetric(const SearchConfig& cfg) {
    validate_config(cfg);
    auto start = std::chrono::steady_clock::now();
    PolyFamily ps(cfg.max_degree, cfg.coefficient_set, ConstantTermRule::Any, true);
    BiPolyFamily qs(cfg.bivariate_max_degree, cfg.coefficient_set);
    enforce_ceiling(qs.raw_tuple_count(), cfg.ceiling, "Q family");
    enforce_ceiling(sat_mul(ps.size(), qs.size()), cfg.ceiling, "(P, Q) sweep");

    std::uint64_t total = ps.size() * qs.size();
    SweepOutcome outcome = parallel_sweep(
        total, cfg.parallelism, cfg.max_stored_examples,
        [&](std::uint64_t begin, std::uint64_t end, SweepOutcome& out, std::uint64_t cap) {
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                BiPoly Q = qs.at(idx / ps.size());
                UniPoly P = ps.at(idx % ps.size());
                ++out.checked;
                if (Q.is_symmetric()) continue;
                BiPoly R = compose_uni_bi(P, Q);
                if (!R.is_symmetric()) continue;
                record_support(out, cap, idx,
                               "P = " + P.to_string() + "; Q = " + Q.to_string() +
                                   " (not symmetric); R = " + R.to_string() +
                                   " (symmetric); Q(0,0) = " + Q.value_at_origin().str());
            }
        });
    return finish_report("pqr-symmetric", cfg, std::move(outcome), start,
                         "counterexample search: P(Q) symmetric with Q not symmetric; hits are "
                         "answers in the negative for the bounded family only");
}

bool same_outcome(const SearchReport& a, const SearchReport& b) {
    return a.suite == b.suite && a.config_summary == b.config_summary &&
           a.instances_checked == b.instances_checked && a.violations == b.violations &&
           a.supporting_examples == b.supporting_examples &&
           a.supporting_count == b.supporting_count && a.status == b.status &&
           a.summary == b.summary;
}

}  // namespace parity

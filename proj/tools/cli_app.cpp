#include "cli_app.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "parity/cyclic.hpp"
#include "parity/explorer.hpp"
#include "parity/parser.hpp"
#include "parity/rpe.hpp"

namespace parity::cli {

namespace {

using nlohmann::json;

const char* kGrammarText = R"(Expression grammar
------------------
  expr     := term (('+' | '-') term)*
  term     := factor (('*' | '/') factor)*
  factor   := '-' factor | power
  power    := primary ('^' exponent)?
  exponent := INT ('^' exponent)?            (right-associative, literals only)
  primary  := RATIONAL | INT | 'z' | 'w' | '(' expr ')'

Rational literals: an INT '/' INT written without whitespace (e.g. 1/2) is a
single literal when it appears in primary position. Every other '/' is
division, so z^2/3 means (z^2)/3. There is no implicit multiplication:
write 2*z, not 2z.

Lowering: division by a syntactically non-constant expression produces a
rational function; any appearance of 'w' produces a bivariate polynomial and
forbids such division.

Limits (diagnosed with a byte offset): input <= 64 KiB, nesting depth <= 256,
exponent literals <= 10^6 (<= 2048 on multi-term bases), and an internal
work budget for pathological expansions.
)";

struct CommandOutput {
    json report;
    std::string human;
    int exit_code = kExitOk;
};

json verification_to_json(const VerificationReport& r) {
    return json{{"samples", r.samples},
                {"tol", r.tolerance},
                {"max_abs_residual", r.max_abs_residual},
                {"residual", r.max_rel_residual},
                {"pass", r.pass},
                {"note", r.note}};
}

std::string verification_to_text(const VerificationReport& r) {
    std::ostringstream os;
    os << (r.pass ? "pass" : "FAIL") << " (max residual " << r.max_rel_residual << " vs tol "
       << r.tolerance << ", " << r.samples << " samples)";
    return os.str();
}

json search_report_to_json(const SearchReport& r) {
    return json{{"suite", r.suite},
                {"config", r.config_summary},
                {"instances_checked", r.instances_checked},
                {"violations", r.violations},
                {"supporting_examples", r.supporting_examples},
                {"supporting_count", r.supporting_count},
                {"status", r.status},
                {"summary", r.summary},
                {"elapsed_ms", r.elapsed.count()}};
}

std::string search_report_to_text(const SearchReport& r) {
    std::ostringstream os;
    os << r.suite << ": " << r.status << "\n  " << r.config_summary << "\n  instances checked: "
       << r.instances_checked << "\n  supporting instances: " << r.supporting_count
       << " (stored " << r.supporting_examples.size() << ")\n  violations: "
       << r.violations.size() << "\n  elapsed: " << r.elapsed.count() << " ms\n  " << r.summary
       << "\n";
    for (const auto& v : r.violations) os << "  VIOLATION: " << v << "\n";
    std::size_t shown = 0;
    for (const auto& s : r.supporting_examples) {
        if (shown++ >= 10) {
            os << "  ... (" << r.supporting_examples.size() - 10 << " more stored)\n";
            break;
        }
        os << "  example: " << s << "\n";
    }
    return os.str();
}

int search_exit_code(const SearchReport& r) { return r.violations.empty() ? kExitOk : kExitViolation; }

std::vector<Rational> parse_coeff_spec(const std::string& spec) {
    std::vector<Rational> out;
    auto range_pos = spec.find("..");
    if (range_pos != std::string::npos) {
        long lo = std::stol(spec.substr(0, range_pos));
        long hi = std::stol(spec.substr(range_pos + 2));
        if (lo > hi) throw std::invalid_argument("--coeffs: empty range " + spec);
        if (hi - lo > 1000) throw std::invalid_argument("--coeffs: range too wide");
        for (long v = lo; v <= hi; ++v) out.emplace_back(v);
        return out;
    }
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(Rational::from_string(item));
    }
    if (out.empty()) throw std::invalid_argument("--coeffs: no coefficients in \"" + spec + "\"");
    return out;
}

std::uint64_t ceiling_from_env() {
    if (const char* raw = std::getenv("PARITY_LAB_CEILING")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(raw, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::invalid_argument("PARITY_LAB_CEILING is not a positive integer");
    }
    return 100'000'000ULL;
}

// ---------------------------------------------------------------- commands

CommandOutput cmd_classify(const std::string& expr, bool odd_target, int samples, double tol) {
    UniPoly p = parse_unipoly(expr);
    CommandOutput out;
    out.report["input_canonical"] = p.to_string();
    json result{{"s", nullptr},          {"d_squared", nullptr}, {"k", nullptr},
                {"odd_part", nullptr},   {"witness", nullptr},   {"verification", nullptr}};
    std::ostringstream human;
    human << "input: " << p.to_string() << "\n";

    auto emit_form = [&](const QuadOddForm& q) {
        result["d_squared"] = q.d_squared.str();
        result["k"] = q.k.str();
        result["s"] = q.s ? json(q.s->to_string()) : json(nullptr);
        result["odd_part"] = q.odd_part.to_string();
        human << "  d^2 = " << q.d_squared.str() << "\n  k = " << q.k.str() << "\n  s = "
              << (q.s ? q.s->to_string() : "(odd part)/(2*d) with d = sqrt(" + q.d_squared.str() + ")")
              << "\n";
    };

    std::optional<Witness> witness;
    if (!odd_target) {
        RpeClassification c = classify_rpe(p);
        result["variant"] = classification_label(c);
        human << "classification: " << classification_label(c) << "\n";
        if (auto* b = std::get_if<OddPlusConstB>(&c)) {
            result["s"] = b->s.to_string();
            result["k"] = b->k.str();
            human << "  s = " << b->s.to_string() << "\n  k = " << b->k.str() << "\n";
        } else if (auto* q = std::get_if<QuadOddForm>(&c)) {
            emit_form(*q);
        }
        if (!std::holds_alternative<NotRpe>(c)) witness = build_witness(c);
    } else {
        RpoClassification c = classify_rpo(p);
        result["variant"] = classification_label(c);
        human << "classification: " << classification_label(c) << "\n";
        if (auto* q = std::get_if<QuadOddForm>(&c)) emit_form(*q);
        if (!std::holds_alternative<NotRpo>(c)) witness = build_witness(c);
    }

    if (witness) {
        result["witness"] = witness_to_string(*witness);
        VerificationReport vr = verify_witness_numeric(
            *witness, p, odd_target ? ParityTarget::Odd : ParityTarget::Even, samples, tol);
        result["verification"] = verification_to_json(vr);
        human << "witness: " << witness_to_string(*witness) << "\n"
              << "verification: " << verification_to_text(vr) << "\n";
    } else {
        result["witness"] = nullptr;
        human << "no non-constant entire composer exists\n";
    }
    out.report["result"] = result;
    out.report["status"] = "ok";
    out.human = human.str();
    return out;
}

CommandOutput cmd_cyclic_class(const std::string& expr, long modulus, bool numeric, int samples,
                               double tol) {
    UniPoly p = parse_unipoly(expr);
    CyclicClassResult c = cyclic_class(p, modulus);
    CommandOutput out;
    out.report["input_canonical"] = p.to_string();
    json result{{"class", c.str()}, {"modulus", modulus}};
    if (c.is_class()) result["k"] = c.k();
    std::ostringstream human;
    human << "input: " << p.to_string() << "\n" << "class: " << c.str() << "\n";
    if (numeric && c.is_class()) {
        VerificationReport vr = numeric_omega_check(p, c.k(), PrimeModulus(modulus), samples, tol);
        result["numeric_check"] = verification_to_json(vr);
        human << "numeric check: " << verification_to_text(vr) << "\n";
    }
    out.report["result"] = result;
    out.report["status"] = "ok";
    out.human = human.str();
    return out;
}

CommandOutput cmd_right_cyclic(const std::string& expr, long modulus) {
    UniPoly p = parse_unipoly(expr);
    PrimeModulus m(modulus);
    RightCyclicResult r = right_cyclic_classify(p, m);
    CommandOutput out;
    out.report["input_canonical"] = p.to_string();
    UniPoly shifted = p - UniPoly::constant(p.constant_term());
    json result{{"exists", r.exists},
                {"shifted_class", cyclic_class(shifted, modulus).str()}};
    std::ostringstream human;
    human << "input: " << p.to_string() << "\n";
    if (r.exists) {
        result["k"] = r.k;
        result["witness"] = witness_to_string(*r.witness);
        human << "right-cyclic: yes (p - p(0) in C_" << r.k << " mod " << modulus << ")\n"
              << "witness: " << witness_to_string(*r.witness) << "\n";
    } else {
        human << "right-cyclic: no (p - p(0) is not cyclic mod " << modulus << ")\n";
    }
    out.report["result"] = result;
    out.report["status"] = "ok";
    out.human = human.str();
    return out;
}

CommandOutput cmd_compose(const std::string& fx, const std::string& gx, std::optional<long> modulus) {
    ParsedExpr fe = parse_expr(fx), ge = parse_expr(gx);
    if (std::holds_alternative<BiPoly>(fe) || std::holds_alternative<BiPoly>(ge))
        throw CLI::ValidationError("compose", "bivariate expressions cannot be composed here");
    CommandOutput out;
    std::ostringstream human;
    json result;
    if (std::holds_alternative<UniPoly>(fe) && std::holds_alternative<UniPoly>(ge)) {
        UniPoly c = compose(std::get<UniPoly>(fe), std::get<UniPoly>(ge));
        out.report["input_canonical"] =
            std::get<UniPoly>(fe).to_string() + " o " + std::get<UniPoly>(ge).to_string();
        result["composition"] = c.to_string();
        human << "composition: " << c.to_string() << "\n";
        if (modulus) {
            CyclicClassResult cls = cyclic_class(c, *modulus);
            result["class"] = cls.str();
            human << "class: " << cls.str() << "\n";
        }
    } else {
        RationalFunction f = std::holds_alternative<RationalFunction>(fe)
                                 ? std::get<RationalFunction>(fe)
                                 : RationalFunction::from_poly(std::get<UniPoly>(fe));
        RationalFunction g = std::holds_alternative<RationalFunction>(ge)
                                 ? std::get<RationalFunction>(ge)
                                 : RationalFunction::from_poly(std::get<UniPoly>(ge));
        RationalFunction c = rf_compose(f, g);
        out.report["input_canonical"] = f.to_string() + " o " + g.to_string();
        result["composition"] = c.to_string();
        result["num"] = c.num().to_string();
        result["den"] = c.den().to_string();
        human << "composition: " << c.to_string() << "\n";
        if (modulus) {
            CyclicClassResult cls = rf_cyclic_class(c, *modulus);
            result["class"] = cls.str();
            human << "class: " << cls.str() << "\n";
        }
    }
    out.report["result"] = result;
    out.report["status"] = "ok";
    out.human = human.str();
    return out;
}

CommandOutput cmd_verify_witness(const std::string& expr, const std::string& target,
                                 const std::string& witness_kind, const std::string& d2,
                                 const std::string& k, int samples, double tol) {
    UniPoly p = parse_unipoly(expr);
    const bool odd_target = target == "odd";
    Witness w = WitnessIdentity{};
    if (witness_kind == "auto") {
        if (odd_target) {
            RpoClassification c = classify_rpo(p);
            w = build_witness(c);  // throws NoWitnessError when none exists
        } else {
            RpeClassification c = classify_rpe(p);
            w = build_witness(c);
        }
    } else if (witness_kind == "identity") {
        w = WitnessIdentity{};
    } else if (witness_kind == "shifted-square") {
        if (k.empty()) throw CLI::ValidationError("verify-witness", "--k is required");
        w = WitnessShiftedSquare{Rational::from_string(k)};
    } else if (witness_kind == "cos-sqrt") {
        if (d2.empty() || k.empty())
            throw CLI::ValidationError("verify-witness", "--d2 and --k are required");
        w = WitnessCosSqrt{odd_target ? CosSqrtKind::OddMaker : CosSqrtKind::EvenMaker,
                           Rational::from_string(d2), Rational::from_string(k)};
    } else {
        throw CLI::ValidationError("verify-witness", "unknown witness kind " + witness_kind);
    }
    VerificationReport vr = verify_witness_numeric(
        w, p, odd_target ? ParityTarget::Odd : ParityTarget::Even, samples, tol);
    CommandOutput out;
    out.report["input_canonical"] = p.to_string();
    out.report["result"] =
        json{{"witness", witness_to_string(w)}, {"target", target},
             {"verification", verification_to_json(vr)}};
    out.report["status"] = "ok";
    std::ostringstream human;
    human << "witness: " << witness_to_string(w) << "\ntarget: " << target << "\nverification: "
          << verification_to_text(vr) << "\n";
    out.human = human.str();
    return out;
}

CommandOutput cmd_rational_class(const std::string& expr, long modulus) {
    RationalFunction f = parse_rational_function(expr);
    CyclicClassResult c = rf_cyclic_class(f, modulus);
    CommandOutput out;
    out.report["input_canonical"] = f.to_string();
    json result{{"class", c.str()}, {"modulus", modulus}, {"num", f.num().to_string()},
                {"den", f.den().to_string()}};
    if (c.is_class()) result["k"] = c.k();
    out.report["result"] = result;
    out.report["status"] = "ok";
    std::ostringstream human;
    human << "input: " << f.to_string() << "\nclass: " << c.str() << "\n";
    out.human = human.str();
    return out;
}

CommandOutput cmd_bipoly(const std::string& expr, const std::string& line) {
    BiPoly p = parse_bipoly(expr);
    CommandOutput out;
    out.report["input_canonical"] = p.to_string();
    HomogeneityResult h = is_homogeneous(p);
    json comps = json::array();
    for (const auto& [deg, comp] : p.odd_homogeneous_components())
        comps.push_back(json{{"degree", deg}, {"component", comp.to_string()}});
    json result{{"even", p.is_even()},
                {"even_per_variable", p.is_even_per_variable()},
                {"symmetric", p.is_symmetric()},
                {"homogeneous", h.homogeneous},
                {"odd_homogeneous_components", comps}};
    if (h.homogeneous && h.degree) result["homogeneous_degree"] = *h.degree;
    std::ostringstream human;
    human << "input: " << p.to_string() << "\n"
          << "even (joint): " << (p.is_even() ? "yes" : "no") << "\n"
          << "even per variable: " << (p.is_even_per_variable() ? "yes" : "no") << "\n"
          << "symmetric: " << (p.is_symmetric() ? "yes" : "no") << "\n"
          << "homogeneous: " << (h.homogeneous ? "yes" : "no") << "\n";
    for (const auto& [deg, comp] : p.odd_homogeneous_components())
        human << "odd component (degree " << deg << "): " << comp.to_string() << "\n";
    if (!line.empty()) {
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw CLI::ValidationError("bipoly", "--line expects \"a,b\"");
        Rational a = Rational::from_string(line.substr(0, comma));
        Rational b = Rational::from_string(line.substr(comma + 1));
        UniPoly restricted = p.restrict_line(a, b);
        result["line_restriction"] = json{{"a", a.str()},
                                          {"b", b.str()},
                                          {"polynomial", restricted.to_string()},
                                          {"even", restricted.is_even()}};
        human << "restriction to (" << a.str() << "*z, " << b.str()
              << "*z): " << restricted.to_string() << (restricted.is_even() ? " (even)" : "")
              << "\n";
    }
    out.report["result"] = result;
    out.report["status"] = "ok";
    out.human = human.str();
    return out;
}

CommandOutput cmd_pqr_check(const std::string& p_expr, const std::string& q_expr) {
    UniPoly P = parse_unipoly(p_expr);
    BiPoly Q = parse_bipoly(q_expr);
    TheoremCheck check = theorem_pqr_assert(P, Q);
    BiPoly R = compose_uni_bi(P, Q);
    CommandOutput out;
    out.report["input_canonical"] = "P = " + P.to_string() + "; Q = " + Q.to_string();
    out.report["result"] = json{{"check", to_label(check.status)},
                                {"detail", check.detail},
                                {"R", R.to_string()},
                                {"P_even", P.is_even()},
                                {"Q_even", Q.is_even()},
                                {"R_even", R.is_even()}};
    out.report["status"] = check.is_violation() ? "violation" : "ok";
    out.exit_code = check.is_violation() ? kExitViolation : kExitOk;
    std::ostringstream human;
    human << "P = " << P.to_string() << "\nQ = " << Q.to_string() << "\nR = P(Q) = "
          << R.to_string() << "\ncheck: " << to_label(check.status);
    if (!check.detail.empty()) human << " (" << check.detail << ")";
    human << "\n";
    out.human = human.str();
    return out;
}

CommandOutput cmd_eo_demo(int samples, double tol) {
    VerificationReport vr = theorem_eo_demo(samples, tol);
    CommandOutput out;
    out.report["input_canonical"] = "p = z^4 - 2*z^2 with cos(x) + sin(x); q = z^2 + 2*z with "
                                    "cos(x) + sin(x) - 1";
    out.report["result"] = json{{"verification", verification_to_json(vr)}};
    out.report["status"] = vr.pass ? "ok" : "violation";
    out.exit_code = vr.pass ? kExitOk : kExitViolation;
    out.human = "trig composition demo: " + verification_to_text(vr) + "\n";
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"parity-lab: exact even/odd/cyclic composition analysis for polynomials,\n"
                 "rational functions, and bivariate polynomials"};
    app.require_subcommand(0, 1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a structured JSON report");

    std::string expr, expr2;
    long modulus = 0;
    int samples = 64;
    double tol = 1e-9;
    bool numeric = false;
    std::string target = "even", witness_kind = "auto", d2, kval, line;
    std::string coeffs = "-2..2", family = "polynomial", suite, search;
    int max_degree = 3, parallelism = 1, nmax = 4, bivariate_degree = 2;

    auto* classify_rpe_cmd = app.add_subcommand("classify-rpe", "decide when some entire f makes f(p) even");
    classify_rpe_cmd->add_option("expr", expr, "polynomial in z")->required();
    classify_rpe_cmd->add_option("--samples", samples, "verification samples");
    classify_rpe_cmd->add_option("--tol", tol, "verification tolerance");

    auto* classify_rpo_cmd = app.add_subcommand("classify-rpo", "decide when some entire f makes f(p) odd");
    classify_rpo_cmd->add_option("expr", expr, "polynomial in z")->required();
    classify_rpo_cmd->add_option("--samples", samples, "verification samples");
    classify_rpo_cmd->add_option("--tol", tol, "verification tolerance");

    auto* cyclic_cmd = app.add_subcommand("cyclic-class", "exponent-residue class mod N");
    cyclic_cmd->add_option("expr", expr, "polynomial in z")->required();
    cyclic_cmd->add_option("--modulus", modulus, "modulus N >= 2")->required();
    cyclic_cmd->add_flag("--numeric", numeric, "cross-check numerically (prime N)");
    cyclic_cmd->add_option("--samples", samples, "numeric samples");
    cyclic_cmd->add_option("--tol", tol, "numeric tolerance");

    auto* right_cmd = app.add_subcommand("right-cyclic", "does some entire f put f(p) in C mod N (prime N >= 3)?");
    right_cmd->add_option("expr", expr, "polynomial in z")->required();
    right_cmd->add_option("--modulus", modulus, "prime modulus N >= 3")->required();

    auto* compose_cmd = app.add_subcommand("compose", "compose two expressions exactly");
    compose_cmd->add_option("outer", expr, "outer expression")->required();
    compose_cmd->add_option("inner", expr2, "inner expression")->required();
    compose_cmd->add_option("--modulus", modulus, "also classify the composition mod N");

    auto* verify_cmd = app.add_subcommand("verify-witness", "numerically verify a composer witness");
    verify_cmd->add_option("expr", expr, "polynomial in z")->required();
    verify_cmd->add_option("--target", target, "even | odd")
        ->check(CLI::IsMember({"even", "odd"}));
    verify_cmd->add_option("--witness", witness_kind, "auto | identity | shifted-square | cos-sqrt");
    verify_cmd->add_option("--d2", d2, "d^2 for cos-sqrt");
    verify_cmd->add_option("--k", kval, "k for cos-sqrt / shifted-square");
    verify_cmd->add_option("--samples", samples, "samples");
    verify_cmd->add_option("--tol", tol, "tolerance");

    auto* rational_cmd = app.add_subcommand("rational-class", "cyclic class of a rational function mod N");
    rational_cmd->add_option("expr", expr, "rational function in z")->required();
    rational_cmd->add_option("--modulus", modulus, "modulus N >= 2")->required();

    auto* bipoly_cmd = app.add_subcommand("bipoly", "analyze a bivariate polynomial");
    bipoly_cmd->add_option("expr", expr, "polynomial in z and w")->required();
    bipoly_cmd->add_option("--line", line, "restrict to the line (a*z, b*z), format \"a,b\"");

    auto* pqr_cmd = app.add_subcommand("pqr-check", "check the one-variable-outer composition law");
    pqr_cmd->add_option("P", expr, "univariate polynomial")->required();
    pqr_cmd->add_option("Q", expr2, "bivariate polynomial")->required();

    auto* suite_cmd = app.add_subcommand("theorem-suite", "exhaustive oracle sweep for one statement");
    suite_cmd->add_option("name", suite,
                          "prop-c | thm-f-a | thm-f-b | self-comp | lemma-b | pqr | borel-poly | "
                          "lemma-mod | pqr-homogeneous")
        ->required();
    suite_cmd->add_option("--modulus", modulus, "prime modulus (where the statement needs one)");
    suite_cmd->add_option("--max-degree", max_degree, "degree bound");
    suite_cmd->add_option("--coeffs", coeffs, "coefficient set: \"a..b\" or comma list");
    suite_cmd->add_option("--parallelism", parallelism, "worker count");
    suite_cmd->add_option("--nmax", nmax, "largest power for lemma-b");
    suite_cmd->add_option("--bivariate-degree", bivariate_degree, "total-degree bound for Q");

    auto* explore_cmd = app.add_subcommand("explore", "open-question searches");
    explore_cmd->add_option("target", search, "q1 | q2 | pqr-symmetric")->required();
    explore_cmd->add_option("--family", family, "polynomial | rational")
        ->check(CLI::IsMember({"polynomial", "rational"}));
    explore_cmd->add_option("--modulus", modulus, "prime modulus (q2)");
    explore_cmd->add_option("--max-degree", max_degree, "degree bound");
    explore_cmd->add_option("--coeffs", coeffs, "coefficient set: \"a..b\" or comma list");
    explore_cmd->add_option("--parallelism", parallelism, "worker count");
    explore_cmd->add_option("--bivariate-degree", bivariate_degree, "total-degree bound for Q");

    auto* eo_cmd = app.add_subcommand("eo-demo", "trig composition demo at double precision");
    eo_cmd->add_option("--samples", samples, "samples");
    eo_cmd->add_option("--tol", tol, "tolerance");

    auto* grammar_cmd = app.add_subcommand("grammar", "print the expression grammar");

    // let --json (and friends) appear after the subcommand name
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("parity-lab");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kExitUsage;
    }

    if (app.get_subcommands().empty()) {
        out << app.help();
        return kExitUsage;
    }

    try {
        CommandOutput result;
        if (grammar_cmd->parsed()) {
            out << kGrammarText;
            return kExitOk;
        } else if (classify_rpe_cmd->parsed()) {
            result = cmd_classify(expr, false, samples, tol);
            result.report["command"] = "classify-rpe";
        } else if (classify_rpo_cmd->parsed()) {
            result = cmd_classify(expr, true, samples, tol);
            result.report["command"] = "classify-rpo";
        } else if (cyclic_cmd->parsed()) {
            result = cmd_cyclic_class(expr, modulus, numeric, samples, tol);
            result.report["command"] = "cyclic-class";
        } else if (right_cmd->parsed()) {
            result = cmd_right_cyclic(expr, modulus);
            result.report["command"] = "right-cyclic";
        } else if (compose_cmd->parsed()) {
            result = cmd_compose(expr, expr2,
                                 compose_cmd->count("--modulus") ? std::optional<long>(modulus)
                                                                 : std::nullopt);
            result.report["command"] = "compose";
        } else if (verify_cmd->parsed()) {
            result = cmd_verify_witness(expr, target, witness_kind, d2, kval, samples, tol);
            result.report["command"] = "verify-witness";
        } else if (rational_cmd->parsed()) {
            result = cmd_rational_class(expr, modulus);
            result.report["command"] = "rational-class";
        } else if (bipoly_cmd->parsed()) {
            result = cmd_bipoly(expr, line);
            result.report["command"] = "bipoly";
        } else if (pqr_cmd->parsed()) {
            result = cmd_pqr_check(expr, expr2);
            result.report["command"] = "pqr-check";
        } else if (suite_cmd->parsed()) {
            auto id = suite_from_name(suite);
            if (!id) throw CLI::ValidationError("theorem-suite", "unknown suite " + suite);
            SearchConfig cfg;
            cfg.max_degree = max_degree;
            cfg.coefficient_set = parse_coeff_spec(coeffs);
            cfg.parallelism = parallelism;
            cfg.ceiling = ceiling_from_env();
            cfg.lemma_b_max_power = nmax;
            cfg.bivariate_max_degree = bivariate_degree;
            if (suite_cmd->count("--modulus")) cfg.modulus = PrimeModulus(modulus);
            SearchReport report = run_theorem_suite(*id, cfg);
            result.report["command"] = "theorem-suite";
            result.report["input_canonical"] = report.config_summary;
            result.report["result"] = search_report_to_json(report);
            result.report["status"] = report.status;
            result.human = search_report_to_text(report);
            result.exit_code = search_exit_code(report);
        } else if (explore_cmd->parsed()) {
            SearchConfig cfg;
            cfg.max_degree = max_degree;
            cfg.coefficient_set = parse_coeff_spec(coeffs);
            cfg.parallelism = parallelism;
            cfg.ceiling = ceiling_from_env();
            cfg.bivariate_max_degree = bivariate_degree;
            cfg.family = family == "rational" ? Family::RationalFunction : Family::Polynomial;
            SearchReport report;
            if (search == "q1") {
                report = search_open_q1(cfg);
            } else if (search == "q2") {
                if (!explore_cmd->count("--modulus"))
                    throw std::invalid_argument("explore q2: --modulus is required");
                cfg.family = Family::RationalFunction;
                report = search_open_q2(PrimeModulus(modulus), cfg);
            } else if (search == "pqr-symmetric") {
                report = search_pqr_symmetric(cfg);
            } else {
                throw CLI::ValidationError("explore", "unknown target " + search);
            }
            result.report["command"] = "explore";
            result.report["input_canonical"] = report.config_summary;
            result.report["result"] = search_report_to_json(report);
            result.report["status"] = report.status;
            result.human = search_report_to_text(report);
            result.exit_code = search_exit_code(report);
        } else if (eo_cmd->parsed()) {
            result = cmd_eo_demo(samples, tol);
            result.report["command"] = "eo-demo";
        }

        if (as_json)
            out << result.report.dump(2) << "\n";
        else
            out << result.human;
        return result.exit_code;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NoWitnessError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const FamilySizeError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const DegenerateComposition& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
}

}  // namespace parity::cli

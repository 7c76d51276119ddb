#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli_app.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = parity::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    args.push_back("--json");
    RunResult r = run(std::move(args));
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("json reports carry the stable schema") {
    for (auto args : {std::vector<std::string>{"classify-rpe", "z^2+2*z"},
                      std::vector<std::string>{"classify-rpo", "z^3"},
                      std::vector<std::string>{"cyclic-class", "z^4+2*z", "--modulus", "3"},
                      std::vector<std::string>{"right-cyclic", "z^4+2*z+5", "--modulus", "3"},
                      std::vector<std::string>{"compose", "z^2", "z+1"},
                      std::vector<std::string>{"rational-class", "z/(z-1)", "--modulus", "2"},
                      std::vector<std::string>{"bipoly", "z - w^2"},
                      std::vector<std::string>{"pqr-check", "z^2", "z + w"},
                      std::vector<std::string>{"eo-demo"}}) {
        json report = run_json(args);
        INFO(report.dump());
        CHECK(report.contains("command"));
        CHECK(report.contains("input_canonical"));
        CHECK(report.contains("result"));
        CHECK(report.contains("status"));
    }
}

TEST_CASE("classify-rpe reproduces the flagship example") {
    json report = run_json({"classify-rpe", "z^2+2*z"});
    CHECK(report["result"]["variant"] == "quadratic-of-odd (C)");
    CHECK(report["result"]["d_squared"] == "1");
    CHECK(report["result"]["k"] == "-1");
    CHECK(report["result"]["witness"] == "cos(2*pi*sqrt(z + 1))");
    CHECK(report["result"]["verification"]["pass"] == true);
    CHECK(report["result"]["verification"]["residual"].get<double>() <= 1e-9);
}

TEST_CASE("right-cyclic answers the shifted-power examples") {
    json no = run_json({"right-cyclic", "(z+1)^3", "--modulus", "3"});
    CHECK(no["result"]["exists"] == false);
    json yes = run_json({"right-cyclic", "z^4+2*z+5", "--modulus", "3"});
    CHECK(yes["result"]["exists"] == true);
    CHECK(yes["result"]["k"] == 1);
    CHECK(yes["result"]["witness"] == "(z - 5)^3");
}

TEST_CASE("compose with modulus classifies the composition") {
    json r = run_json({"compose", "(z+1)^3", "z-1", "--modulus", "3"});
    CHECK(r["result"]["composition"] == "z^3");
    CHECK(r["result"]["class"] == "C_0 mod 3");
    json rf = run_json({"compose", "z/(z-1)", "z/(z-1)", "--modulus", "2"});
    CHECK(rf["result"]["num"] == "z");
    CHECK(rf["result"]["den"] == "1");
    CHECK(rf["result"]["class"] == "C_1 mod 2");
}

TEST_CASE("verify-witness runs explicit and auto witnesses") {
    json autow = run_json({"verify-witness", "z^2+2*z", "--target", "even"});
    CHECK(autow["result"]["verification"]["pass"] == true);
    json manual = run_json({"verify-witness", "z^2+2*z", "--target", "odd", "--witness",
                            "cos-sqrt", "--d2", "1", "--k", "-1"});
    CHECK(manual["result"]["verification"]["pass"] == true);
    json failing = run_json({"verify-witness", "z^2+2*z", "--target", "even", "--witness",
                             "identity"});
    CHECK(failing["result"]["verification"]["pass"] == false);
}

TEST_CASE("exit codes") {
    CHECK(run({"no-such-command"}).code == 64);
    CHECK(run({}).code == 64);
    CHECK(run({"classify-rpe", "z**2"}).code == 65);
    CHECK(run({"classify-rpe", "2z"}).code == 65);
    CHECK(run({"classify-rpe"}).code == 64);  // missing argument
    CHECK(run({"right-cyclic", "z", "--modulus", "4"}).code == 3);    // composite
    CHECK(run({"right-cyclic", "z", "--modulus", "2"}).code == 3);    // parity modulus
    CHECK(run({"cyclic-class", "z", "--modulus", "1"}).code == 3);
    CHECK(run({"compose", "z/(z-1)", "1"}).code == 3);  // degenerate composition
    CHECK(run({"verify-witness", "z^4+z", "--target", "even"}).code == 3);  // no witness exists
}

TEST_CASE("explore q2 requires a modulus and prime N >= 3") {
    RunResult missing = run({"explore", "q2", "--family", "rational", "--max-degree", "1",
                             "--coeffs", "-1..1"});
    CHECK(missing.code == 3);
    RunResult even_n = run({"explore", "q2", "--family", "rational", "--modulus", "2",
                            "--max-degree", "1", "--coeffs", "-1..1"});
    CHECK(even_n.code == 3);
}

TEST_CASE("parse failures carry byte offsets") {
    RunResult r = run({"classify-rpe", "z**2"});
    CHECK(r.code == 65);
    CHECK(r.err.find("offset 2") != std::string::npos);
}

TEST_CASE("theorem-suite runs and reports") {
    RunResult r = run({"theorem-suite", "prop-c", "--modulus", "3", "--max-degree", "2",
                       "--coeffs", "-1..1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("violations: 0") != std::string::npos);
    RunResult lemma = run({"theorem-suite", "lemma-mod", "--json"});
    CHECK(lemma.code == 0);
    json report = json::parse(lemma.out);
    CHECK(report["result"]["status"] == "ok");
    CHECK(run({"theorem-suite", "no-such-suite"}).code == 64);
    CHECK(run({"theorem-suite", "prop-c", "--max-degree", "2", "--coeffs", "-1..1"}).code ==
          3);  // missing modulus
}

TEST_CASE("the enumeration ceiling is honored via the environment") {
    setenv("PARITY_LAB_CEILING", "10", 1);
    RunResult r = run({"theorem-suite", "prop-c", "--modulus", "3", "--max-degree", "3"});
    unsetenv("PARITY_LAB_CEILING");
    CHECK(r.code == 3);
    CHECK(r.err.find("ceiling") != std::string::npos);
}

TEST_CASE("bipoly command surfaces the two-variable analysis") {
    json r = run_json({"bipoly", "z - w^2", "--line", "0,1"});
    CHECK(r["result"]["even"] == false);
    CHECK(r["result"]["symmetric"] == false);
    CHECK(r["result"]["odd_homogeneous_components"].size() == 1);
    CHECK(r["result"]["line_restriction"]["polynomial"] == "-z^2");
    CHECK(r["result"]["line_restriction"]["even"] == true);
}

TEST_CASE("grammar help prints the literal rule") {
    RunResult r = run({"grammar"});
    CHECK(r.code == 0);
    bool mentions_literals = r.out.find("rational literal") != std::string::npos ||
                             r.out.find("Rational literals") != std::string::npos;
    CHECK(mentions_literals);
    CHECK(r.out.find("no implicit multiplication") != std::string::npos);
}

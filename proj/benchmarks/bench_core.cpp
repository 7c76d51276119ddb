#include <benchmark/benchmark.h>

#include "parity/cyclic.hpp"
#include "parity/explorer.hpp"
#include "parity/parser.hpp"
#include "parity/rpe.hpp"

using namespace parity;

namespace {

UniPoly dense_poly(int degree, int seed) {
    std::vector<Rational> coeffs;
    for (int e = 0; e <= degree; ++e) coeffs.emplace_back((seed + 3 * e) % 7 - 3, 1 + e % 4);
    return UniPoly::from_coeffs(coeffs);
}

void BM_Compose(benchmark::State& state) {
    UniPoly p = dense_poly(static_cast<int>(state.range(0)), 1);
    UniPoly q = dense_poly(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(compose(p, q));
}
BENCHMARK(BM_Compose)->Arg(4)->Arg(8)->Arg(12);

void BM_ClassifyRpe(benchmark::State& state) {
    // quadratic-of-odd instance of the requested degree
    UniPoly s = UniPoly::monomial(state.range(0), Rational(1)) + UniPoly::monomial(1, Rational(-2));
    UniPoly base = s + UniPoly::constant(Rational(3, 2));
    UniPoly p = base * base + UniPoly::constant(Rational(-7, 3));
    for (auto _ : state) benchmark::DoNotOptimize(classify_rpe(p));
}
BENCHMARK(BM_ClassifyRpe)->Arg(5)->Arg(9)->Arg(15);

void BM_RationalSelfCompose(benchmark::State& state) {
    RationalFunction f = parse_rational_function("(z^2 + z + 1)/(z^2 - z + 1)");
    for (auto _ : state) benchmark::DoNotOptimize(rf_compose(f, f));
}
BENCHMARK(BM_RationalSelfCompose);

void BM_RfCyclicClass(benchmark::State& state) {
    RationalFunction f = parse_rational_function("(3*z^4 + 7*z^2 + 3)/(z^4 + 5*z^2 + 1)");
    long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(rf_cyclic_class(f, n));
}
BENCHMARK(BM_RfCyclicClass)->Arg(2)->Arg(5)->Arg(12);

void BM_ParseCanonical(benchmark::State& state) {
    std::string text = dense_poly(40, 5).to_string();
    for (auto _ : state) benchmark::DoNotOptimize(parse_expr(text));
}
BENCHMARK(BM_ParseCanonical);

void BM_PropositionCSweep(benchmark::State& state) {
    SearchConfig cfg;
    cfg.max_degree = 2;
    cfg.coefficient_set = {Rational(-1), Rational(0), Rational(1)};
    cfg.modulus = PrimeModulus(3);
    cfg.parallelism = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SearchReport r = run_theorem_suite(TheoremSuite::PropC, cfg);
        benchmark::DoNotOptimize(r.instances_checked);
    }
}
BENCHMARK(BM_PropositionCSweep)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();

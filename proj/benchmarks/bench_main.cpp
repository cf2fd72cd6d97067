#include "superdensity/axioms.hpp"
#include "superdensity/cohomology.hpp"
#include "superdensity/parse.hpp"
#include "superdensity/verify.hpp"

#include <benchmark/benchmark.h>

using namespace superdensity;

static void BM_ContactBracket(benchmark::State& state) {
  const int n = int(state.range(0));
  const SuperPoly F = parse_superpoly(n == 2 ? "x^3*t1 + x*t2 + t1*t2" : "x^3 + x*t1", n);
  const SuperPoly G = parse_superpoly(n == 2 ? "x^2*t1*t2 + t2" : "x^2*t1 + 1", n);
  for (auto _ : state) benchmark::DoNotOptimize(contact_bracket(F, G));
}
BENCHMARK(BM_ContactBracket)->Arg(1)->Arg(2);

static void BM_Axioms(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(int(state.range(0)), 3));
}
BENCHMARK(BM_Axioms)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_InvariantBilinear(benchmark::State& state) {
  const int n = int(state.range(0));
  const Rational k(state.range(1), 2);
  const SubalgebraSpec spec{SubalgebraKind::Aff, n, std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(solve_invariance_bi(build_ansatz(n, k), spec));
}
BENCHMARK(BM_InvariantBilinear)->Args({0, 14})->Args({1, 9})->Args({2, 8})->Unit(benchmark::kMillisecond);

// One H1 cell without the stability re-run; includes resonance search.
static void BM_H1Cell(benchmark::State& state) {
  H1Options o;
  o.stability_check = false;
  const int n = int(state.range(0));
  const Rational shift(state.range(1), 2);
  for (auto _ : state) benchmark::DoNotOptimize(h1(n, shift, o));
}
BENCHMARK(BM_H1Cell)
    ->Args({0, 4})
    ->Args({0, 12})
    ->Args({1, 8})
    ->Args({2, 4})
    ->Unit(benchmark::kMillisecond);

static void BM_VerifyClaim(benchmark::State& state) {
  const char* ids[] = {"C_l_l+4", "U1_b1_b1+4", "U2t_l_l+2"};
  const std::string id = ids[state.range(0)];
  state.SetLabel(id);
  for (auto _ : state) benchmark::DoNotOptimize(verify_printed(id));
}
BENCHMARK(BM_VerifyClaim)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "polysurj/certify.hpp"
#include "polysurj/corpus.hpp"
#include "polysurj/fiber.hpp"
#include "polysurj/parser.hpp"
#include "polysurj/realalg.hpp"

namespace {

using namespace polysurj;

void BM_Power(benchmark::State& state) {
  const MultiPoly base = parse_poly("x*y - 1 + 3/2*x - y^2", 2);
  const auto e = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(power(base, e));
}
BENCHMARK(BM_Power)->Arg(4)->Arg(8)->Arg(16);

void BM_Multiply(benchmark::State& state) {
  const MultiPoly a = power(parse_poly("x + 2*y - 1/3", 2), static_cast<unsigned>(state.range(0)));
  const MultiPoly b = power(parse_poly("x*y + y - 5", 2), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->Arg(5)->Arg(10)->Arg(20);

void BM_IsolateRoots(benchmark::State& state) {
  // Product of (x - k/3) for k = 1..n: n close, rational roots.
  UniPoly p = UniPoly::constant(1);
  for (int k = 1; k <= state.range(0); ++k) p = p * UniPoly({Rational(-k, 3), 1});
  p = p + UniPoly::constant(Rational(1, 1000));
  for (auto _ : state) benchmark::DoNotOptimize(isolate_real_roots(p));
}
BENCHMARK(BM_IsolateRoots)->Arg(5)->Arg(10)->Arg(20);

void BM_BuildPinchuk(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_pinchuk());
}
BENCHMARK(BM_BuildPinchuk)->Unit(benchmark::kMillisecond);

void BM_JacobianProductPinchuk(benchmark::State& state) {
  const PolyMap f = build_pinchuk().map();
  for (auto _ : state) benchmark::DoNotOptimize(check_jacobian_product(f));
}
BENCHMARK(BM_JacobianProductPinchuk)->Unit(benchmark::kMillisecond);

void BM_SolveFiberOddPair(benchmark::State& state) {
  std::mt19937_64 rng(42);
  const OddPairParams k{1, -2, 3, 1, static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(0))};
  const PolyMap f = with_lower_order_noise(odd_pair_map(k), rng);
  const std::vector<Rational> target{Rational(7, 3), Rational(-5, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(solve_fiber(f, target));
}
BENCHMARK(BM_SolveFiberOddPair)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

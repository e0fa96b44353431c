#include <random>

#include <benchmark/benchmark.h>

#include "symtrig/continuous.hpp"
#include "symtrig/discrete.hpp"
#include "symtrig/kernel.hpp"
#include "symtrig/symmetry.hpp"

using namespace symtrig;

namespace {

std::vector<std::vector<double>> random_matrix(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<std::vector<double>> a(static_cast<size_t>(n),
                                     std::vector<double>(static_cast<size_t>(n)));
  for (auto& row : a)
    for (double& v : row) v = d(rng);
  return a;
}

std::vector<double> random_vec(int n, double lo, double hi, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> v(static_cast<size_t>(n));
  for (double& e : v) e = d(rng);
  return v;
}

void BM_Determinant(benchmark::State& state) {
  const auto a = random_matrix(static_cast<int>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(a));
}
BENCHMARK(BM_Determinant)->Arg(4)->Arg(8)->Arg(16);

void BM_PermanentDirect(benchmark::State& state) {
  const auto a = random_matrix(static_cast<int>(state.range(0)), 43);
  for (auto _ : state) benchmark::DoNotOptimize(permanent_direct(a));
}
BENCHMARK(BM_PermanentDirect)->Arg(4)->Arg(6)->Arg(8);

void BM_PermanentRyser(benchmark::State& state) {
  const auto a = random_matrix(static_cast<int>(state.range(0)), 44);
  for (auto _ : state) benchmark::DoNotOptimize(permanent_ryser(a));
}
BENCHMARK(BM_PermanentRyser)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void BM_Evaluate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Family f = state.range(1) ? Family::CosPlus : Family::SinMinus;
  const Label l = random_vec(n, 0.5, 4.0, 45);
  const Point x = random_vec(n, -1.0, 1.0, 46);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(f, AngularConvention::TwoPi, l, x));
}
BENCHMARK(BM_Evaluate)->Args({2, 0})->Args({4, 0})->Args({8, 0})->Args({2, 1})->Args({4, 1})->Args({8, 1});

void BM_EvaluateOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Label l = random_vec(n, 0.5, 4.0, 47);
  const Point x = random_vec(n, -1.0, 1.0, 48);
  for (auto _ : state)
    benchmark::DoNotOptimize(evaluate_oracle(Family::SinMinus, AngularConvention::TwoPi, l, x));
}
BENCHMARK(BM_EvaluateOracle)->Arg(2)->Arg(4)->Arg(6);

void BM_Fold(benchmark::State& state) {
  const Point x = random_vec(static_cast<int>(state.range(0)), -5.0, 5.0, 49);
  for (auto _ : state) benchmark::DoNotOptimize(fold(x));
}
BENCHMARK(BM_Fold)->Arg(4)->Arg(16);

void BM_MakeTransform(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(make_transform(TransformKind::Smdct, N, n));
}
BENCHMARK(BM_MakeTransform)->Args({8, 2})->Args({6, 3});

void BM_Forward(benchmark::State& state) {
  const Transform t = make_transform(TransformKind::Amdst, static_cast<int>(state.range(0)), 2);
  const auto data = random_vec(static_cast<int>(t.grid.size()), -1.0, 1.0, 50);
  for (auto _ : state) benchmark::DoNotOptimize(forward(t, data));
}
BENCHMARK(BM_Forward)->Arg(8)->Arg(16);

void BM_InnerProduct(benchmark::State& state) {
  const QuadratureRule rule{static_cast<int>(state.range(0))};
  for (auto _ : state)
    benchmark::DoNotOptimize(inner_product_F(Family::SinMinus, {2, 1}, {3, 1}, rule));
}
BENCHMARK(BM_InnerProduct)->Arg(16)->Arg(32)->Arg(48);

}  // namespace

BENCHMARK_MAIN();

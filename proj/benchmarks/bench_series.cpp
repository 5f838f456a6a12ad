#include <benchmark/benchmark.h>

#include "qdisk/deformation.hpp"
#include "qdisk/quotient.hpp"
#include "qdisk/random_gen.hpp"
#include "qdisk/starprod.hpp"

using namespace qdisk;

static void BM_fmul(benchmark::State& state) {
  SeriesGen gen(1);
  int terms = static_cast<int>(state.range(0));
  auto f = gen.free_series(3, 12, terms, 6);
  auto g = gen.free_series(3, 12, terms, 6);
  for (auto _ : state) benchmark::DoNotOptimize(fmul(f, g));
}
BENCHMARK(BM_fmul)->Arg(8)->Arg(32)->Arg(128);

static void BM_qmul(benchmark::State& state) {
  SeriesGen gen(2);
  QContext ctx(3, ExactComplex(Rational(1, 2)));
  int terms = static_cast<int>(state.range(0));
  auto f = gen.q_series(3, 12, terms, 6);
  auto g = gen.q_series(3, 12, terms, 6);
  for (auto _ : state) benchmark::DoNotOptimize(qmul(f, g, ctx));
}
BENCHMARK(BM_qmul)->Arg(8)->Arg(32)->Arg(128);

static void BM_normal_order(benchmark::State& state) {
  SeriesGen gen(3);
  QContext ctx(3, ExactComplex(Rational(1, 2)));
  auto f = gen.free_series(3, 10, static_cast<int>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(normal_order(f, ctx));
}
BENCHMARK(BM_normal_order)->Arg(32)->Arg(256);

static void BM_q_ratio(benchmark::State& state) {
  MultiIndex k{static_cast<int>(state.range(0)), 2, 2};
  for (auto _ : state) benchmark::DoNotOptimize(q_ratio(k));
}
BENCHMARK(BM_q_ratio)->Arg(2)->Arg(3)->Arg(4);

static void BM_quotient_ball_oracle(benchmark::State& state) {
  QContext ctx(3, ExactComplex(Rational(1, 2)));
  MultiIndex k{static_cast<int>(state.range(0)), 2, 1};
  auto target = QSeries<ExactComplex>::monomial(3, 8, k, ExactComplex(1));
  QuotientProblem prob{target, ctx, 1.0, Geometry::ball};
  for (auto _ : state) benchmark::DoNotOptimize(quotient_norm(prob, QuotientMode::oracle));
}
BENCHMARK(BM_quotient_ball_oracle)->Arg(1)->Arg(2)->Arg(3);

static void BM_star(benchmark::State& state) {
  SeriesGen gen(4);
  auto f = gen.q_series(3, 12, 8, 4);
  auto g = gen.q_series(3, 12, 8, 4);
  int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(star(f, g, order));
}
BENCHMARK(BM_star)->Arg(2)->Arg(6)->Arg(10);

static void BM_fock_opnorm(benchmark::State& state) {
  SeriesGen gen(5);
  int depth = static_cast<int>(state.range(0));
  MatrixTuple T = fock_tuple(2, 0.7, depth);
  auto f = gen.free_series(2, depth - 1, 5);
  SparseMatrix m = evaluate_free(f, T);
  for (auto _ : state) benchmark::DoNotOptimize(operator_norm_estimate(m));
}
BENCHMARK(BM_fock_opnorm)->Arg(4)->Arg(6)->Arg(8);

static void BM_fiber_profile(benchmark::State& state) {
  SeriesGen gen(6);
  auto a = gen.defo_series(2, 6, 30, 8, 5, 8);
  std::vector<FloatComplex> grid;
  int steps = static_cast<int>(state.range(0));
  for (int i = 0; i <= steps; ++i) grid.emplace_back(0.5 + 1.5 * i / double(steps), 0.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(fiber_norm_profile(a, 0.8, Geometry::polydisk, grid));
}
BENCHMARK(BM_fiber_profile)->Arg(16)->Arg(64);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "quadff/classify.hpp"
#include "quadff/parse.hpp"
#include "quadff/search.hpp"
#include "quadff/zeta.hpp"

using namespace quadff;

static void BM_FieldMul(benchmark::State& state) {
  auto f = Field::make(2, 1, static_cast<int>(state.range(0)));
  const Code n = f->order();
  Code a = 3, b = 5;
  for (auto _ : state) {
    a = f->mul(a, b);
    b = (b + 7) % n;
    if (a == 0) a = 1;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul)->Arg(4)->Arg(8)->Arg(10);

static void BM_CountPlaces(benchmark::State& state) {
  const Curve c = parse_curve("y^2 + (x^3+x^2+1)*y + (x^3+x^2+1)*(x^4+x^3+1) = 0", Field::of_order(2));
  const int s = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_np(c, s));
}
BENCHMARK(BM_CountPlaces)->DenseRange(1, 3);

static void BM_LPolynomial(benchmark::State& state) {
  const Curve c = parse_curve("y^2 = x*(x+1)*(x+2)*(x^2+1)", Field::of_order(3));
  for (auto _ : state) benchmark::DoNotOptimize(l_polynomial(c));
}
BENCHMARK(BM_LPolynomial);

static void BM_Canonicalize(benchmark::State& state) {
  const Curve odd = parse_curve("y^2 = 2*x*(x+1)*(x^3+x^2+x+2)", Field::of_order(3));
  const Curve even = parse_curve("y^2 + x*(x^2+x+1)*y + x*(x^2+x+1)*(x^4+x+1) = 0", Field::of_order(2));
  const Curve& c = state.range(0) ? even : odd;
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(c));
}
BENCHMARK(BM_Canonicalize)->Arg(0)->Arg(1);

static void BM_Search(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search(3, 2, 4));
}
BENCHMARK(BM_Search)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

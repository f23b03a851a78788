#include <benchmark/benchmark.h>

#include <random>

#include "g2cert/arith/smith.hpp"
#include "g2cert/g2/chevalley.hpp"
#include "g2cert/geom/models.hpp"
#include "g2cert/mpoly/ideal.hpp"

using namespace g2cert;

namespace {

void BM_RationalHarmonicSum(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    Rational s(Integer(0));
    for (long k = 1; k <= n; ++k) s = s + Rational(Integer(1), Integer(k));
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_RationalHarmonicSum)->Arg(50)->Arg(200);

// Groebner bases of the model ideals, rebuilt from the generators each time.
void BM_BuchbergerLambda(benchmark::State& state) {
  const VarietyDescriptor models[] = {models::lambda1(), models::lambda2(), models::lambda3(), models::lambda4()};
  const VarietyDescriptor& v = models[state.range(0) - 1];
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(v.ideal().generators()));
  state.SetLabel("Lambda" + std::to_string(state.range(0)));
}
BENCHMARK(BM_BuchbergerLambda)->DenseRange(1, 4);

void BM_QuadricChartGroebner(benchmark::State& state) {
  const VarietyDescriptor chart = models::quadric_chart();
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(chart.ideal().generators()));
}
BENCHMARK(BM_QuadricChartGroebner);

void BM_NormalFormLambda1(benchmark::State& state) {
  const VarietyDescriptor l1 = models::lambda1();
  const PolyRing& ring = l1.ring();
  MultiPoly f = ring.parse("y1 + 2*y2 - y3 + z1*z2 + 1");
  MultiPoly g = ring.one();
  for (int i = 0; i < state.range(0); ++i) g = g * f;
  l1.ideal().groebner();
  for (auto _ : state) benchmark::DoNotOptimize(l1.ideal().normal_form(g));
}
BENCHMARK(BM_NormalFormLambda1)->Arg(3)->Arg(5);

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-20, 20);
  std::vector<std::vector<long>> rows(n, std::vector<long>(n));
  for (auto& r : rows)
    for (auto& x : r) x = d(rng);
  const IntMatrix m = int_matrix(rows);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(12);

// ad(x) for the generic Cartan element over Q(a, b), rank included.
void BM_SymbolicAdjointCheck(benchmark::State& state) {
  const ChevalleyAlgebra g = build_chevalley_algebra();
  for (auto _ : state) benchmark::DoNotOptimize(prop1_generic_check(g, Field::rationals()));
}
BENCHMARK(BM_SymbolicAdjointCheck)->Unit(benchmark::kMillisecond);

void BM_ConcreteAdjointCheck(benchmark::State& state) {
  const ChevalleyAlgebra g = build_chevalley_algebra();
  const Field k = Field::prime(11);
  const CartanElement x{k.from_int(1), k.from_int(1)};
  for (auto _ : state) benchmark::DoNotOptimize(prop1_differential_check(g, x));
}
BENCHMARK(BM_ConcreteAdjointCheck);

}  // namespace
BENCHMARK_MAIN();

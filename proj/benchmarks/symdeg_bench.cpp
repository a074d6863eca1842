#include <benchmark/benchmark.h>

#include "symdeg/degreelp.hpp"
#include "symdeg/oracle.hpp"
#include "symdeg/symmetrize.hpp"

namespace {

using namespace symdeg;

void BM_EvalMsym(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::vector<int> z(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) z[static_cast<std::size_t>(k)] = 1 + k % 3;
  const FrequencyVector v(m, z);
  const Partition lambda{2, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(eval_msym(lambda, v));
}
BENCHMARK(BM_EvalMsym)->Arg(4)->Arg(8)->Arg(12);

void BM_ApproxDegree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(approx_degree(PropertySpec::element_distinctness(), n, n, Rational(1, 3)).degree);
  }
}
BENCHMARK(BM_ApproxDegree)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_Symmetrize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  YPolynomial p({n, n});
  for (const auto& mono : normal_monomials({n, n}, 2)) p.add_term(mono, Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(symmetrize(p));
}
BENCHMARK(BM_Symmetrize)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Desymmetrize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SymPolynomial q = approx_degree(PropertySpec::element_distinctness(), n, n, Rational(1, 3)).optimal().optimum;
  for (auto _ : state) benchmark::DoNotOptimize(desymmetrize(q, {n, n}));
}
BENCHMARK(BM_Desymmetrize)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

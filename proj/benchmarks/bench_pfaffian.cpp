#include <benchmark/benchmark.h>

#include <random>

#include "otc/antiskew.hpp"
#include "otc/field.hpp"

using namespace otc;

static void BM_PfaffianNumeric(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RatField f;
  std::mt19937_64 rng(17);
  auto a = AntiSkewMatrix<RatField>::from_upper(f, n, [&](int, int) {
    return BigRat(static_cast<long long>(rng() % 41) - 20);
  });
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian(f, a));
}
BENCHMARK(BM_PfaffianNumeric)->DenseRange(2, 6);

static void BM_PfaffianSymbolic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RatField f;
  const int tn = 2 * n;
  std::vector<std::pair<int, int>> upper;
  for (int i = 1; i <= tn; ++i)
    for (int j = 1; j <= tn; ++j)
      if (i + j < tn + 1) upper.emplace_back(i, j);
  PolyRing<RatField> ring{f, upper.size()};
  auto gen = [&](int i, int j) {
    auto it = std::find(upper.begin(), upper.end(), std::make_pair(i, j));
    Monomial m(upper.size());
    m.bump(static_cast<std::size_t>(it - upper.begin()));
    return Poly<RatField>::monomial(f, std::move(m), f.one());
  };
  auto a = AntiSkewMatrix<PolyRing<RatField>>::from_upper(ring, n, gen);
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian(ring, a));
}
BENCHMARK(BM_PfaffianSymbolic)->DenseRange(2, 5);

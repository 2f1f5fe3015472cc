#include <benchmark/benchmark.h>

#include "otc/field.hpp"
#include "otc/groebner.hpp"
#include "otc/patch.hpp"

using namespace otc;

namespace {

std::vector<Poly<RatField>> example_generators(const RatField& f,
                                               const RootSet& rs) {
  std::vector<Poly<RatField>> out;
  for (auto& [tau, p] :
       generators(f, rs, IsotropicIndex(Dim(5), {3, 4, 5, 9, 10})))
    out.push_back(p);
  return out;
}

}  // namespace

static void BM_GroebnerWorkedExample(benchmark::State& state) {
  RatField f;
  RootSet rs(bottom_isotropic(Dim(5)));
  auto polys = example_generators(f, rs);
  std::vector<TermOrder> orders = {make_hlex(rs), make_rlex(rs),
                                   make_diagproj(rs)};
  const TermOrder& ord = orders[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state)
    benchmark::DoNotOptimize(buchberger(f, polys, ord));
}
BENCHMARK(BM_GroebnerWorkedExample)->DenseRange(0, 2);

static void BM_InitialIdealAllPairsD3(benchmark::State& state) {
  RatField f;
  for (auto _ : state) {
    auto all = enumerate_isotropic(Dim(3));
    for (const auto& v : all)
      for (const auto& w : all) {
        if (!bruhat_leq(v, w)) continue;
        RootSet rs(v);
        std::vector<Poly<RatField>> polys;
        for (auto& [tau, p] : generators(f, rs, w)) polys.push_back(p);
        TermOrder ord = make_hlex(rs);
        benchmark::DoNotOptimize(initial_ideal(buchberger(f, polys, ord), ord));
      }
  }
}
BENCHMARK(BM_InitialIdealAllPairsD3);

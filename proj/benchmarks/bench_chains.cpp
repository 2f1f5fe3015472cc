#include <benchmark/benchmark.h>

#include "otc/chains.hpp"
#include "otc/index.hpp"

using namespace otc;

static void BM_NewFormsExhaustive(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long count = 0;
    for (const IsotropicIndex& v : enumerate_isotropic(Dim(d))) {
      RootSet rs(v);
      const auto& on = rs.on_roots();
      std::vector<Root> cur;
      auto rec = [&](auto&& self) -> void {
        for (const Root& a : on) {
          if (!cur.empty() && !chain_greater(cur.back(), a)) continue;
          cur.push_back(a);
          VChain e = VChain::make(rs, cur);
          for (int cut = 1; cut <= e.size(); ++cut)
            count += static_cast<long>(all_new_forms(rs, e, cut).size());
          if (cur.size() < 4) self(self);
          cur.pop_back();
        }
      };
      rec(rec);
    }
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_NewFormsExhaustive)->DenseRange(3, 5);

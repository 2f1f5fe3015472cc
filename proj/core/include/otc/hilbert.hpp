#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "otc/poly.hpp"

namespace otc {

// Dimension over F of the degree-k graded piece of the ideal generated by
// the (homogeneous) gens, by sparse exact row reduction of the span
// { m * g : deg(m g) = k }.  Independent of any Groebner machinery; used to
// cross-check Hilbert functions.
template <class F>
long ideal_degree_dim(const F& f, const std::vector<Poly<F>>& gens, int k,
                      std::size_t nvars) {
  using K = typename F::Elem;
  using Row = std::vector<std::pair<int, K>>;  // sorted by column

  const std::vector<Monomial> cols = monomials_of_degree(nvars, k);
  const auto col_of = [&](const Monomial& m) {
    auto it = std::lower_bound(cols.begin(), cols.end(), m);
    return static_cast<int>(it - cols.begin());
  };

  std::map<int, Row> pivots;  // leading column -> reduced row
  long rank = 0;

  const auto axpy_row = [&](Row& a, const K& c, const Row& b) {
    // a -= c * b
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, f.neg(f.mul(c, b[j].second)));
        ++j;
      } else {
        K v = f.sub(a[i].second, f.mul(c, b[j].second));
        if (!f.is_zero(v)) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    a = std::move(out);
  };

  const auto insert_row = [&](Row row) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        // Normalize to leading coefficient 1.
        K inv = f.inv(row.front().second);
        for (auto& e : row) e.second = f.mul(e.second, inv);
        pivots.emplace(row.front().first, std::move(row));
        ++rank;
        return;
      }
      axpy_row(row, row.front().second, it->second);
    }
  };

  for (const Poly<F>& g : gens) {
    if (g.is_zero()) continue;
    const int dg = g.degree();
    if (dg > k) continue;
    for (const Monomial& m : monomials_of_degree(nvars, k - dg)) {
      Row row;
      for (const auto& t : g.terms())
        row.emplace_back(col_of(t.mono.times(m)), t.coef);
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      insert_row(std::move(row));
    }
  }
  return rank;
}

// dim over F of the degree-k piece of P/I for homogeneous gens of I.
template <class F>
long quotient_degree_dim(const F& f, const std::vector<Poly<F>>& gens, int k,
                         std::size_t nvars) {
  const long total =
      static_cast<long>(monomials_of_degree(nvars, k).size());
  return total - ideal_degree_dim(f, gens, k, nvars);
}

}  // namespace otc

#pragma once

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

#include "otc/limits.hpp"
#include "otc/order.hpp"
#include "otc/poly.hpp"

namespace otc {

// Leading term of a nonzero polynomial under the given order.
template <class F>
const typename Poly<F>::Term& lead_term(const Poly<F>& p,
                                        const TermOrder& ord) {
  if (p.is_zero()) throw std::invalid_argument("lead_term: zero polynomial");
  const auto& ts = p.terms();
  std::size_t best = 0;
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (ord.greater(ts[i].mono, ts[best].mono)) best = i;
  return ts[best];
}

template <class F>
Monomial lead_monomial(const Poly<F>& p, const TermOrder& ord) {
  return lead_term<F>(p, ord).mono;
}

namespace gb_detail {

template <class F>
using Terms = std::vector<typename Poly<F>::Term>;

template <class F>
Terms<F> to_sorted(const Poly<F>& p, const TermOrder& ord) {
  Terms<F> t = p.terms();
  std::sort(t.begin(), t.end(), [&](const auto& a, const auto& b) {
    return ord.greater(a.mono, b.mono);
  });
  return t;
}

template <class F>
Poly<F> to_poly(const F& f, std::size_t nvars, Terms<F> t) {
  return Poly<F>::from_terms(f, nvars, std::move(t));
}

// a - c * x^m * b, both inputs sorted descending under ord.
template <class F>
Terms<F> axpy(const F& f, const Terms<F>& a, const typename F::Elem& c,
              const Monomial& m, const Terms<F>& b, const TermOrder& ord) {
  Terms<F> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial bm = b[j].mono.times(m);
    if (i == a.size()) {
      out.push_back({std::move(bm), f.neg(f.mul(c, b[j].coef))});
      ++j;
      continue;
    }
    auto cmp = ord.compare(a[i].mono, bm);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back({std::move(bm), f.neg(f.mul(c, b[j].coef))});
      ++j;
    } else {
      auto coef = f.sub(a[i].coef, f.mul(c, b[j].coef));
      if (!f.is_zero(coef)) out.push_back({a[i].mono, std::move(coef)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Full normal form of h against basis (all sorted under ord).
template <class F>
Terms<F> normal_form(const F& f, Terms<F> h,
                     const std::vector<Terms<F>>& basis, const TermOrder& ord,
                     const GBLimits& lim) {
  Terms<F> rem;
  while (!h.empty()) {
    if (h.size() + rem.size() > lim.max_terms)
      throw ResourceLimitError("normal_form: term count cap exceeded");
    bool reduced = false;
    for (const Terms<F>& g : basis) {
      if (g.empty() || !g.front().mono.divides(h.front().mono)) continue;
      auto c = f.div(h.front().coef, g.front().coef);
      Monomial m = h.front().mono.divided_by(g.front().mono);
      h = axpy<F>(f, h, c, m, g, ord);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(h.front());
      h.erase(h.begin());
    }
  }
  return rem;
}

}  // namespace gb_detail

// Normal form of f against a (Groebner) basis; f is in the ideal iff the
// result is zero.
template <class F>
Poly<F> reduce(const F& f, const Poly<F>& p, const std::vector<Poly<F>>& gb,
               const TermOrder& ord, const GBLimits& lim = {}) {
  using namespace gb_detail;
  std::vector<Terms<F>> basis;
  for (const Poly<F>& g : gb)
    if (!g.is_zero()) basis.push_back(to_sorted<F>(g, ord));
  Terms<F> h = to_sorted<F>(p, ord);
  return to_poly<F>(f, p.nvars(), normal_form<F>(f, std::move(h), basis, ord, lim));
}

// Buchberger's algorithm with the coprimality and chain criteria, normal
// selection on S-pair lcm, full inter-reduction, and monic normalization.
// Returns the reduced Groebner basis, sorted by ascending leading monomial.
template <class F>
std::vector<Poly<F>> buchberger(const F& f, const std::vector<Poly<F>>& gens,
                                const TermOrder& ord,
                                const GBLimits& lim = {}) {
  using namespace gb_detail;
  std::size_t nvars = 0;
  for (const Poly<F>& g : gens) nvars = g.nvars();

  std::vector<Terms<F>> basis;
  for (const Poly<F>& g : gens)
    if (!g.is_zero()) basis.push_back(to_sorted<F>(g, ord));
  if (basis.empty()) return {};

  struct PairKey {
    Monomial lcm;
    std::size_t i, j;
  };
  auto pair_less = [&](const PairKey& a, const PairKey& b) {
    auto c = ord.compare(a.lcm, b.lcm);
    if (c != std::strong_ordering::equal)
      return c == std::strong_ordering::less;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::set<PairKey, decltype(pair_less)> pending(pair_less);
  auto add_pairs = [&](std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i)
      pending.insert({Monomial::lcm(basis[i].front().mono,
                                    basis[upto].front().mono),
                      i, upto});
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs(j);

  auto is_pending = [&](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    PairKey k{Monomial::lcm(basis[i].front().mono, basis[j].front().mono), i,
              j};
    return pending.count(k) > 0;
  };

  while (!pending.empty()) {
    PairKey pk = *pending.begin();
    pending.erase(pending.begin());
    const Monomial& lmi = basis[pk.i].front().mono;
    const Monomial& lmj = basis[pk.j].front().mono;
    if (Monomial::coprime(lmi, lmj)) continue;
    // Chain criterion.
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (basis[k].front().mono.divides(pk.lcm) && !is_pending(pk.i, k) &&
          !is_pending(pk.j, k))
        skip = true;
    }
    if (skip) continue;

    // S-polynomial, then its normal form.
    Monomial mi = pk.lcm.divided_by(lmi);
    Monomial mj = pk.lcm.divided_by(lmj);
    Terms<F> s = axpy<F>(
        f,
        /* (1/lc_i) x^mi * f_i sorted */
        [&] {
          Terms<F> t = basis[pk.i];
          auto inv = f.inv(t.front().coef);
          for (auto& term : t) {
            term.mono = term.mono.times(mi);
            term.coef = f.mul(term.coef, inv);
          }
          return t;
        }(),
        f.inv(basis[pk.j].front().coef), mj, basis[pk.j], ord);
    if (lim.max_degree > 0) {
      for (const auto& t : s)
        if (t.mono.degree() > lim.max_degree)
          throw ResourceLimitError("buchberger: degree cap exceeded");
    }
    Terms<F> nf = normal_form<F>(f, std::move(s), basis, ord, lim);
    if (nf.empty()) continue;
    basis.push_back(std::move(nf));
    if (basis.size() > lim.max_basis)
      throw ResourceLimitError("buchberger: basis size cap exceeded");
    add_pairs(basis.size() - 1);
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<std::size_t> order_idx(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) order_idx[i] = i;
  std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
    auto c = ord.compare(basis[a].front().mono, basis[b].front().mono);
    if (c != std::strong_ordering::equal)
      return c == std::strong_ordering::less;
    return a < b;
  });
  std::vector<Terms<F>> minimal;
  for (std::size_t idx : order_idx) {
    bool dominated = false;
    for (const Terms<F>& g : minimal)
      if (g.front().mono.divides(basis[idx].front().mono)) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(basis[idx]);
  }

  // Inter-reduce tails and normalize to monic.
  std::vector<Poly<F>> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Terms<F>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Terms<F> r =
        normal_form<F>(f, minimal[i], others, ord, lim);
    auto inv = f.inv(r.front().coef);
    for (auto& t : r) t.coef = f.mul(t.coef, inv);
    out.push_back(gb_detail::to_poly<F>(f, nvars, std::move(r)));
  }
  return out;
}

// Minimal monomial generators of the initial ideal of a Groebner basis.
template <class F>
std::vector<Monomial> initial_ideal(const std::vector<Poly<F>>& gb,
                                    const TermOrder& ord) {
  std::vector<Monomial> leads;
  for (const Poly<F>& g : gb)
    if (!g.is_zero()) leads.push_back(lead_monomial<F>(g, ord));
  std::sort(leads.begin(), leads.end());
  leads.erase(std::unique(leads.begin(), leads.end()), leads.end());
  std::vector<Monomial> minimal;
  for (const Monomial& m : leads) {
    bool dominated = false;
    for (const Monomial& g : minimal)
      if (g.divides(m) && !(g == m)) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(m);
  }
  return minimal;
}

// Membership in a monomial ideal given by generators.
bool monomial_ideal_member(const std::vector<Monomial>& gens,
                           const Monomial& m);

// Monomials of the given degree outside the monomial ideal.
std::vector<Monomial> standard_monomials(const std::vector<Monomial>& gens,
                                         int degree, std::size_t nvars);

// Hilbert function of P/I at the given degree, computed as the number of
// standard monomials of the initial ideal.
long hilbert_function(const std::vector<Monomial>& initial_gens, int degree,
                      std::size_t nvars);

}  // namespace otc

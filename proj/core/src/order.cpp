#include "otc/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace otc {

namespace {

VariableOrder make_variable_order(const RootSet& rs,
                                  VariableOrder::Kind kind) {
  const std::vector<Root>& vars = rs.or_roots();
  VariableOrder out;
  out.kind = kind;
  out.by_rank.resize(vars.size());
  for (size_t i = 0; i < vars.size(); ++i) out.by_rank[i] = static_cast<int>(i);
  std::sort(out.by_rank.begin(), out.by_rank.end(), [&](int x, int y) {
    const Root& a = vars[static_cast<size_t>(x)];
    const Root& b = vars[static_cast<size_t>(y)];
    if (a.row != b.row)
      return kind == VariableOrder::Kind::order1 ? a.row < b.row
                                                 : a.row > b.row;
    const bool aon = rs.in_on(a), bon = rs.in_on(b);
    if (aon != bon) return aon;  // ON before OR\ON within a row
    return a.col > b.col;        // larger column first
  });
  out.rank_of.resize(vars.size());
  for (size_t r = 0; r < out.by_rank.size(); ++r)
    out.rank_of[static_cast<size_t>(out.by_rank[r])] = static_cast<int>(r);
  return out;
}

}  // namespace

VariableOrder make_order1(const RootSet& rs) {
  return make_variable_order(rs, VariableOrder::Kind::order1);
}

VariableOrder make_order2(const RootSet& rs) {
  return make_variable_order(rs, VariableOrder::Kind::order2);
}

std::string TermOrder::name() const {
  switch (kind_) {
    case Kind::hlex: return "hlex";
    case Kind::rlex: return "rlex";
    case Kind::diagproj: return "diagproj";
    case Kind::deglex: return "deglex";
  }
  return "?";
}

std::strong_ordering TermOrder::cmp_lex(const Monomial& a,
                                        const Monomial& b) const {
  for (int v : by_rank_) {
    const auto ea = a.exp(static_cast<size_t>(v));
    const auto eb = b.exp(static_cast<size_t>(v));
    if (ea != eb) return ea <=> eb;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering TermOrder::cmp_revlex(const Monomial& a,
                                           const Monomial& b) const {
  // Scan from the smallest variable upward; more of a small variable makes a
  // monomial smaller.
  for (auto it = by_rank_.rbegin(); it != by_rank_.rend(); ++it) {
    const auto ea = a.exp(static_cast<size_t>(*it));
    const auto eb = b.exp(static_cast<size_t>(*it));
    if (ea != eb) return eb <=> ea;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering TermOrder::cmp_diagproj(const Monomial& a,
                                             const Monomial& b) const {
  // Step 2: multisets of projection row numbers, larger rows first.
  std::vector<int> ra, rb;
  ra.reserve(2 * static_cast<size_t>(a.degree()));
  rb.reserve(2 * static_cast<size_t>(b.degree()));
  for (size_t i = 0; i < a.nvars(); ++i) {
    for (int k = 0; k < a.exp(i); ++k) {
      ra.push_back(row_[i]);
      ra.push_back(pv_row_[i]);
    }
    for (int k = 0; k < b.exp(i); ++k) {
      rb.push_back(row_[i]);
      rb.push_back(pv_row_[i]);
    }
  }
  std::sort(ra.rbegin(), ra.rend());
  std::sort(rb.rbegin(), rb.rend());
  for (size_t j = 0; j < ra.size(); ++j)
    if (ra[j] != rb[j]) return ra[j] <=> rb[j];

  // Equal projection multisets.  Work on exponent copies, repeatedly
  // comparing and then deleting the sub-monomials at the least projection
  // row.  Every element of OR(v) has its horizontal projection strictly
  // above its vertical one, so the least row is attained exactly by the
  // rows of the elements themselves.
  Monomial ma = a, mb = b;
  while (ma.degree() > 0) {
    int least = 0;
    bool have = false;
    for (size_t i = 0; i < ma.nvars(); ++i)
      if (ma.exp(i) > 0 && (!have || row_[i] < least)) {
        least = row_[i];
        have = true;
      }
    std::vector<int> ca, cb;
    for (size_t i = 0; i < ma.nvars(); ++i) {
      if (row_[i] == least) {
        for (int k = 0; k < ma.exp(i); ++k) ca.push_back(col_[i]);
        for (int k = 0; k < mb.exp(i); ++k) cb.push_back(col_[i]);
      }
    }
    std::sort(ca.rbegin(), ca.rend());
    std::sort(cb.rbegin(), cb.rend());
    if (ca.size() != cb.size())
      return ca.size() <=> cb.size();  // cannot happen with equal multisets
    for (size_t j = 0; j < ca.size(); ++j) {
      if (ca[j] == cb[j]) continue;
      const bool a_on = on_point(least, ca[j]);
      const bool b_on = on_point(least, cb[j]);
      if (a_on && b_on) return ca[j] <=> cb[j];    // case (c)
      if (a_on != b_on) return a_on <=> b_on;      // case (b)
      return cb[j] <=> ca[j];                      // case (a)
    }
    // Tie: delete the row-`least` sub-monomial from both and recurse.
    for (size_t i = 0; i < ma.nvars(); ++i)
      if (row_[i] == least) {
        if (ma.exp(i) != mb.exp(i))
          return ma.exp(i) <=> mb.exp(i);  // unreachable with equal columns
        if (ma.exp(i) > 0) {
          mb.bump(i, -ma.exp(i));
          ma.bump(i, -ma.exp(i));
        }
      }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering TermOrder::compare(const Monomial& a,
                                        const Monomial& b) const {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("TermOrder: mismatched variable sets");
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  switch (kind_) {
    case Kind::hlex:
    case Kind::deglex: return cmp_lex(a, b);
    case Kind::rlex: return cmp_revlex(a, b);
    case Kind::diagproj: return cmp_diagproj(a, b);
  }
  return std::strong_ordering::equal;
}

TermOrder make_hlex(const RootSet& rs) {
  TermOrder t;
  t.kind_ = TermOrder::Kind::hlex;
  t.by_rank_ = make_order1(rs).by_rank;
  return t;
}

TermOrder make_rlex(const RootSet& rs) {
  TermOrder t;
  t.kind_ = TermOrder::Kind::rlex;
  t.by_rank_ = make_order2(rs).by_rank;
  return t;
}

TermOrder make_diagproj(const RootSet& rs) {
  TermOrder t;
  t.kind_ = TermOrder::Kind::diagproj;
  t.star_base_ = rs.dim().two_d() + 1;
  const std::vector<Root>& vars = rs.or_roots();
  t.row_.resize(vars.size());
  t.col_.resize(vars.size());
  t.pv_row_.resize(vars.size());
  for (size_t i = 0; i < vars.size(); ++i) {
    t.row_[i] = vars[i].row;
    t.col_[i] = vars[i].col;
    t.pv_row_[i] = rs.star(vars[i].col);
  }
  return t;
}

TermOrder make_deglex(const RootSet& rs, const std::vector<int>& ranking) {
  if (ranking.size() != rs.or_roots().size())
    throw std::invalid_argument("make_deglex: ranking must list every variable");
  std::vector<char> seen(ranking.size(), 0);
  for (int v : ranking) {
    if (v < 0 || static_cast<size_t>(v) >= ranking.size() ||
        seen[static_cast<size_t>(v)])
      throw std::invalid_argument("make_deglex: ranking is not a permutation");
    seen[static_cast<size_t>(v)] = 1;
  }
  TermOrder t;
  t.kind_ = TermOrder::Kind::deglex;
  t.by_rank_ = ranking;
  return t;
}

}  // namespace otc

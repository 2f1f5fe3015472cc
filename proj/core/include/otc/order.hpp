#pragma once

#include <compare>
#include <string>
#include <vector>

#include "otc/monomial.hpp"
#include "otc/roots.hpp"

namespace otc {

// A total order on the variables OR(v), as a rank array (rank 0 = greatest).
// Both kinds satisfy, within every row, "ON before OR\ON" and "larger column
// first" among ON roots.  Across rows, order1 puts smaller rows first and
// order2 larger rows first; this completion is total and transitive and
// satisfies the defining constraints of >_1 / >_2.
struct VariableOrder {
  enum class Kind { order1, order2 };
  Kind kind;
  std::vector<int> by_rank;  // rank -> variable index
  std::vector<int> rank_of;  // variable index -> rank
};

VariableOrder make_order1(const RootSet& rs);
VariableOrder make_order2(const RootSet& rs);

// Term orders on monomials in OR(v).  All three refine total degree, so each
// is a well-order with 1 minimal.
class TermOrder {
 public:
  enum class Kind { hlex, rlex, diagproj, deglex };

  Kind kind() const { return kind_; }
  std::string name() const;

  // greater = larger monomial under the order.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  friend TermOrder make_hlex(const RootSet& rs);
  friend TermOrder make_rlex(const RootSet& rs);
  friend TermOrder make_diagproj(const RootSet& rs);
  friend TermOrder make_deglex(const RootSet& rs,
                               const std::vector<int>& ranking);

 private:
  TermOrder() = default;

  std::strong_ordering cmp_lex(const Monomial& a, const Monomial& b) const;
  std::strong_ordering cmp_revlex(const Monomial& a, const Monomial& b) const;
  std::strong_ordering cmp_diagproj(const Monomial& a,
                                    const Monomial& b) const;

  bool on_point(int row, int col) const {  // (row, col) in ON(v)
    return row > col && row < star_base_ - col;
  }

  Kind kind_ = Kind::hlex;
  std::vector<int> by_rank_;  // hlex/rlex/deglex
  // diagproj per-variable data:
  int star_base_ = 0;  // 2d+1
  std::vector<int> row_, col_, pv_row_;
};

// Homogeneous lexicographic order with respect to >_1.
TermOrder make_hlex(const RootSet& rs);
// Reverse lexicographic order with respect to >_2.
TermOrder make_rlex(const RootSet& rs);
// The projection-multiset order: degree first, then the multiset of
// projection row numbers compared position-wise in decreasing order, then
// the column sequences at the least projection row with the three
// inside/outside-ON cases, then recursion after deleting the tied
// sub-monomial.
TermOrder make_diagproj(const RootSet& rs);
// Degree-lexicographic order from an arbitrary variable ranking
// (ranking[k] = variable index of rank k, rank 0 greatest).
TermOrder make_deglex(const RootSet& rs, const std::vector<int>& ranking);

}  // namespace otc

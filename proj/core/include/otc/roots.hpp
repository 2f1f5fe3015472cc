#pragma once

#include <compare>
#include <iosfwd>
#include <vector>

#include "otc/index.hpp"

namespace otc {

// An ordered pair (r, c) with r a row index (not in v) and c a column index
// (in v).  Plain data; classification against a fixed v lives in RootSet.
struct Root {
  int row = 0;
  int col = 0;

  auto operator<=>(const Root&) const = default;
};

std::ostream& operator<<(std::ostream&, const Root&);

struct RootFlags {
  bool in_or = false;     // r < star(c)
  bool in_n = false;      // r > c
  bool in_on = false;     // both
  bool diagonal = false;  // r = star(c)
};

// (R,C) dominates (r,c) iff R >= r and C <= c.
inline bool dominates(const Root& a, const Root& b) {
  return a.row >= b.row && a.col <= b.col;
}

// The strict order used for v-chains: alpha > beta iff alpha is strictly
// South-West of beta.
inline bool chain_greater(const Root& a, const Root& b) {
  return a.row > b.row && a.col < b.col;
}

// Strict comparison of diagonal points: greater = more to the South-West,
// i.e. larger row index.
inline bool diag_greater(const Root& a, const Root& b) { return a.row > b.row; }

// The root regions R(v), OR(v), N(v), ON(v) and the diagonal, for a fixed
// v in I(d).  Immutable after construction.
class RootSet {
 public:
  explicit RootSet(IsotropicIndex v);

  const IsotropicIndex& v() const { return v_; }
  const Dim& dim() const { return v_.dim(); }
  int star(int k) const { return dim().star(k); }

  bool is_row(int r) const;  // r in [1,2d] and not an entry of v
  bool is_col(int c) const;  // c an entry of v
  bool contains(const Root& a) const;

  // Region queries; all require a in R(v).
  RootFlags flags(const Root& a) const;
  bool in_or(const Root& a) const;
  bool in_n(const Root& a) const;
  bool in_on(const Root& a) const;
  bool diagonal(const Root& a) const;

  // Projections on the diagonal.  The horizontal projection is (r, star(r));
  // the vertical projection is (star(c), c), the unique diagonal point of
  // R(v) in column c.
  Root ph(const Root& a) const;
  Root pv(const Root& a) const;

  // R(v) sorted by (row, col); |R(v)| = d*d.
  const std::vector<Root>& all() const { return all_; }
  // OR(v) sorted by (row, col); this fixed listing indexes the polynomial
  // variables X_beta.
  const std::vector<Root>& or_roots() const { return or_roots_; }
  const std::vector<Root>& on_roots() const { return on_roots_; }
  const std::vector<Root>& n_roots() const { return n_roots_; }
  const std::vector<Root>& diagonal_roots() const { return diag_; }

  // Position of a in or_roots(); throws if a is not in OR(v).
  int var_index(const Root& a) const;

 private:
  void require_member(const Root& a) const;

  IsotropicIndex v_;
  std::vector<char> in_v_;  // 1..2d membership, index 0 unused
  std::vector<Root> all_, or_roots_, on_roots_, n_roots_, diag_;
  std::vector<int> var_index_;  // (row-1)*2d + (col-1) -> index or -1
};

}  // namespace otc

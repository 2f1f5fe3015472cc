#include "otc/roots.hpp"

#include <ostream>
#include <stdexcept>

namespace otc {

std::ostream& operator<<(std::ostream& os, const Root& a) {
  return os << "(" << a.row << "," << a.col << ")";
}

RootSet::RootSet(IsotropicIndex v) : v_(std::move(v)) {
  const int n = dim().two_d();
  in_v_.assign(static_cast<size_t>(n) + 1, 0);
  for (int e : v_.entries()) in_v_[static_cast<size_t>(e)] = 1;

  var_index_.assign(static_cast<size_t>(n) * n, -1);
  for (int r = 1; r <= n; ++r) {
    if (in_v_[static_cast<size_t>(r)]) continue;
    for (int c : v_.entries()) {
      Root a{r, c};
      all_.push_back(a);
      const int sc = star(c);
      if (r == sc) {
        diag_.push_back(a);
        if (r > c) n_roots_.push_back(a);
      } else if (r < sc) {
        or_roots_.push_back(a);
        if (r > c) {
          on_roots_.push_back(a);
          n_roots_.push_back(a);
        }
      } else if (r > c) {
        n_roots_.push_back(a);
      }
    }
  }
  for (size_t i = 0; i < or_roots_.size(); ++i) {
    const Root& a = or_roots_[i];
    var_index_[static_cast<size_t>(a.row - 1) * n + (a.col - 1)] =
        static_cast<int>(i);
  }
}

bool RootSet::is_row(int r) const {
  return dim().in_range(r) && !in_v_[static_cast<size_t>(r)];
}

bool RootSet::is_col(int c) const {
  return dim().in_range(c) && in_v_[static_cast<size_t>(c)];
}

bool RootSet::contains(const Root& a) const {
  return is_row(a.row) && is_col(a.col);
}

void RootSet::require_member(const Root& a) const {
  if (!contains(a))
    throw std::invalid_argument("RootSet: root not in R(v)");
}

RootFlags RootSet::flags(const Root& a) const {
  require_member(a);
  RootFlags f;
  const int sc = star(a.col);
  f.in_or = a.row < sc;
  f.in_n = a.row > a.col;
  f.in_on = f.in_or && f.in_n;
  f.diagonal = a.row == sc;
  return f;
}

bool RootSet::in_or(const Root& a) const {
  require_member(a);
  return a.row < star(a.col);
}

bool RootSet::in_n(const Root& a) const {
  require_member(a);
  return a.row > a.col;
}

bool RootSet::in_on(const Root& a) const {
  require_member(a);
  return a.row < star(a.col) && a.row > a.col;
}

bool RootSet::diagonal(const Root& a) const {
  require_member(a);
  return a.row == star(a.col);
}

Root RootSet::ph(const Root& a) const {
  require_member(a);
  return Root{a.row, star(a.row)};
}

Root RootSet::pv(const Root& a) const {
  require_member(a);
  return Root{star(a.col), a.col};
}

int RootSet::var_index(const Root& a) const {
  const int n = dim().two_d();
  if (a.row < 1 || a.row > n || a.col < 1 || a.col > n)
    throw std::invalid_argument("RootSet: root out of range");
  int idx = var_index_[static_cast<size_t>(a.row - 1) * n + (a.col - 1)];
  if (idx < 0) throw std::invalid_argument("RootSet: root not in OR(v)");
  return idx;
}

}  // namespace otc

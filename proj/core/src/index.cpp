#include "otc/index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace otc {

IndexTuple::IndexTuple(Dim dim, std::vector<int> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != dim_.d)
    throw std::invalid_argument("IndexTuple: expected exactly d entries");
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (!dim_.in_range(entries_[i]))
      throw std::invalid_argument("IndexTuple: entry out of [1, 2d]");
    if (i > 0 && entries_[i - 1] >= entries_[i])
      throw std::invalid_argument("IndexTuple: entries must strictly increase");
  }
}

bool IndexTuple::contains(int k) const {
  return std::binary_search(entries_.begin(), entries_.end(), k);
}

std::strong_ordering IndexTuple::operator<=>(const IndexTuple& o) const {
  if (dim_.d != o.dim_.d) return dim_.d <=> o.dim_.d;
  return std::lexicographical_compare_three_way(
      entries_.begin(), entries_.end(), o.entries_.begin(), o.entries_.end());
}

namespace {

void check_isotropic(const IndexTuple& t) {
  const Dim& dim = t.dim();
  int above_d = 0;
  for (int e : t.entries()) {
    if (t.contains(dim.star(e)))
      throw std::invalid_argument(
          "IsotropicIndex: contains both k and star(k)");
    if (e > dim.d) ++above_d;
  }
  if (above_d % 2 != 0)
    throw std::invalid_argument(
        "IsotropicIndex: odd number of entries exceeding d");
}

}  // namespace

IsotropicIndex::IsotropicIndex(Dim dim, std::vector<int> entries)
    : base_(dim, std::move(entries)) {
  check_isotropic(base_);
}

IsotropicIndex::IsotropicIndex(IndexTuple base) : base_(std::move(base)) {
  check_isotropic(base_);
}

std::vector<IsotropicIndex> enumerate_isotropic(Dim dim) {
  // One choice from each pair {k, star(k)}, k = 1..d, keeping even parity of
  // entries above d.  Generated in lexicographic order directly.
  std::vector<IsotropicIndex> out;
  std::vector<int> picked;
  picked.reserve(static_cast<size_t>(dim.d));
  auto rec = [&](auto&& self, int k, int parity) -> void {
    if (k > dim.d) {
      if (parity % 2 == 0) {
        std::vector<int> sorted = picked;
        std::sort(sorted.begin(), sorted.end());
        out.emplace_back(dim, std::move(sorted));
      }
      return;
    }
    picked.push_back(k);
    self(self, k + 1, parity);
    picked.pop_back();
    picked.push_back(dim.star(k));
    self(self, k + 1, parity + 1);
    picked.pop_back();
  };
  rec(rec, 1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool bruhat_leq(const IndexTuple& v, const IndexTuple& w) {
  if (v.dim().d != w.dim().d)
    throw std::invalid_argument("bruhat_leq: mismatched dimensions");
  for (int i = 1; i <= v.size(); ++i)
    if (v.entry(i) > w.entry(i)) return false;
  return true;
}

bool bruhat_leq(const IsotropicIndex& v, const IsotropicIndex& w) {
  return bruhat_leq(v.tuple(), w.tuple());
}

IsotropicIndex bottom_isotropic(Dim dim) {
  std::vector<int> e(static_cast<size_t>(dim.d));
  std::iota(e.begin(), e.end(), 1);
  return IsotropicIndex(dim, std::move(e));
}

IsotropicIndex top_isotropic(Dim dim) {
  std::vector<int> e;
  if (dim.d % 2 == 0) {
    for (int k = dim.d + 1; k <= 2 * dim.d; ++k) e.push_back(k);
  } else {
    e.push_back(dim.d);
    for (int k = dim.d + 2; k <= 2 * dim.d; ++k) e.push_back(k);
  }
  return IsotropicIndex(dim, std::move(e));
}

}  // namespace otc

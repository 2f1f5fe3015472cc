#pragma once

#include <compare>
#include <vector>

#include "otc/dimension.hpp"

namespace otc {

// A strictly increasing d-tuple with entries in [1, 2d]; an element of
// I(d, 2d).
class IndexTuple {
 public:
  IndexTuple(Dim dim, std::vector<int> entries);

  const Dim& dim() const { return dim_; }
  int size() const { return static_cast<int>(entries_.size()); }
  // 1-based accessor, matching the v_1 < ... < v_d convention.
  int entry(int i) const { return entries_.at(static_cast<size_t>(i - 1)); }
  const std::vector<int>& entries() const { return entries_; }
  bool contains(int k) const;

  std::strong_ordering operator<=>(const IndexTuple& o) const;
  bool operator==(const IndexTuple& o) const = default;

 private:
  Dim dim_;
  std::vector<int> entries_;
};

// An element of I(d): for every l exactly one of {l, star(l)} appears, and
// evenly many entries exceed d.
class IsotropicIndex {
 public:
  IsotropicIndex(Dim dim, std::vector<int> entries);
  explicit IsotropicIndex(IndexTuple base);

  const IndexTuple& tuple() const { return base_; }
  const Dim& dim() const { return base_.dim(); }
  int size() const { return base_.size(); }
  int entry(int i) const { return base_.entry(i); }
  const std::vector<int>& entries() const { return base_.entries(); }
  bool contains(int k) const { return base_.contains(k); }

  std::strong_ordering operator<=>(const IsotropicIndex& o) const {
    return base_ <=> o.base_;
  }
  bool operator==(const IsotropicIndex& o) const = default;

 private:
  IndexTuple base_;
};

// All of I(d), sorted lexicographically; |I(d)| = 2^(d-1).
std::vector<IsotropicIndex> enumerate_isotropic(Dim dim);

// Componentwise Bruhat comparison; throws on mismatched dimensions.
bool bruhat_leq(const IndexTuple& v, const IndexTuple& w);
bool bruhat_leq(const IsotropicIndex& v, const IsotropicIndex& w);

// The minimum (1, ..., d) and maximum of I(d) in Bruhat order.
IsotropicIndex bottom_isotropic(Dim dim);
IsotropicIndex top_isotropic(Dim dim);

}  // namespace otc

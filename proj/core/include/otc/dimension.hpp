#pragma once

#include <stdexcept>

namespace otc {

// Ambient dimension data for the even orthogonal Grassmannian: the vector
// space has dimension 2d and indices live in [1, 2d].  All public indices in
// this library are 1-based.
struct Dim {
  int d;

  explicit Dim(int d_) : d(d_) {
    if (d < 1) throw std::invalid_argument("Dim: d must be >= 1");
  }

  int two_d() const { return 2 * d; }

  // star(k) = 2d+1-k, an involution on [1, 2d].
  int star(int k) const { return 2 * d + 1 - k; }

  bool in_range(int k) const { return 1 <= k && k <= 2 * d; }

  friend bool operator==(const Dim&, const Dim&) = default;
};

}  // namespace otc

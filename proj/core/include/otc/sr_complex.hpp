#pragma once

#include <stdexcept>
#include <vector>

#include "otc/monomial.hpp"

namespace otc {

// A non-square-free generator handed to the Stanley-Reisner construction
// falsifies the square-freeness claim for the input; it is reported as its
// own error type so callers can surface it loudly.
struct NonSquarefreeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The simplicial complex whose faces are the square-free monomials outside a
// square-free monomial ideal.  Vertices are variable indices 0..nvars-1.
class SimplicialComplex {
 public:
  static SimplicialComplex from_initial_ideal(std::size_t nvars,
                                              std::vector<Monomial> min_gens);

  std::size_t vertex_count() const { return nvars_; }
  const std::vector<Monomial>& minimal_nonfaces() const { return nonfaces_; }

  bool is_face(const std::vector<std::size_t>& vertices) const;

  // All facets, each a sorted vertex list; the facet list is sorted
  // lexicographically.  The backtracking walks vertices in the given order
  // (e.g. order-1 ranks); pass an empty order for 0..n-1.
  std::vector<std::vector<std::size_t>> maximal_faces(
      const std::vector<int>& vertex_order = {}) const;

  // f[k] = number of faces with k vertices (f[0] = 1 for the empty face).
  std::vector<long> f_vector() const;

 private:
  SimplicialComplex(std::size_t nvars, std::vector<Monomial> nonfaces)
      : nvars_(nvars), nonfaces_(std::move(nonfaces)) {}

  std::size_t nvars_;
  std::vector<Monomial> nonfaces_;
};

}  // namespace otc

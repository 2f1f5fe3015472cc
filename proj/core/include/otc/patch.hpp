#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "otc/antiskew.hpp"
#include "otc/poly.hpp"
#include "otc/roots.hpp"

namespace otc {

// Entry of the generic patch matrix: 0, 1, +X_{(r,c)} or -X_{(r,c)}.
enum class PatchEntryKind : std::uint8_t { zero, one, plus_var, minus_var };

struct PatchEntry {
  PatchEntryKind kind = PatchEntryKind::zero;
  Root var{};  // meaningful for plus_var / minus_var
};

// The 2d x d matrix whose column span describes a general element of the
// affine patch around the fixed point indexed by v.  Row v_i is the i-th
// unit row; for a row r not in v the entry in column c is X_{(r,c)} above
// the anti-diagonal, 0 on it, and -X_{(star(c), star(r))} below.
class PatchMatrix {
 public:
  explicit PatchMatrix(RootSet rs) : rs_(std::move(rs)) {}

  const RootSet& roots() const { return rs_; }
  int row_count() const { return rs_.dim().two_d(); }
  int col_count() const { return rs_.dim().d; }

  // row in [1, 2d]; col must be an entry of v.
  PatchEntry at(int row, int col) const;

 private:
  RootSet rs_;
};

PatchEntry patch_entry(const RootSet& rs, int row, int col);

// Pfaffian of the anti-skew submatrix of the patch matrix with the given
// rows (each not in v) and columns their stars (each in v).  The rows need
// not be sorted.  Validates the anti-skew invariant of the selection.
template <class F>
Poly<F> patch_pfaffian(const F& f, const RootSet& rs, std::vector<int> rows) {
  const std::size_t nvars = rs.or_roots().size();
  PolyRing<F> ring{f, nvars};
  std::sort(rows.begin(), rows.end());
  if (rows.size() % 2 != 0)
    throw std::invalid_argument("patch_pfaffian: odd number of rows");
  for (int r : rows) {
    if (!rs.is_row(r))
      throw std::invalid_argument("patch_pfaffian: row index lies in v");
    if (!rs.is_col(rs.star(r)))
      throw std::logic_error("patch_pfaffian: star of row not a column");
  }
  const auto entry = [&](int r, int c) -> Poly<F> {
    PatchEntry e = patch_entry(rs, r, c);
    switch (e.kind) {
      case PatchEntryKind::zero: return Poly<F>::zero(nvars);
      case PatchEntryKind::one:
        throw std::logic_error("patch_pfaffian: unit row selected");
      case PatchEntryKind::plus_var: {
        Monomial m(nvars);
        m.bump(static_cast<std::size_t>(rs.var_index(e.var)));
        return Poly<F>::monomial(f, std::move(m), f.one());
      }
      case PatchEntryKind::minus_var: {
        Monomial m(nvars);
        m.bump(static_cast<std::size_t>(rs.var_index(e.var)));
        return Poly<F>::monomial(f, std::move(m), f.neg(f.one()));
      }
    }
    return Poly<F>::zero(nvars);
  };
  // The selection must be skew-symmetric along its anti-diagonal.
  for (int r : rows)
    for (int r2 : rows) {
      const int c = rs.star(r2);
      Poly<F> lhs = entry(r, c);
      Poly<F> rhs = entry(rs.star(c), rs.star(r)).negated(f);
      if (!lhs.equals(f, rhs))
        throw std::logic_error(
            "patch_pfaffian: submatrix violates the anti-skew invariant");
    }
  return pfaffian_expand(ring, std::move(rows), rs.dim().two_d() + 1, entry);
}

// The Pfaffian generator f_tau: the Pfaffian of the submatrix with rows
// tau \ v and columns v \ tau, homogeneous of degree |v \ tau| / 2.
template <class F>
Poly<F> f_tau(const F& f, const RootSet& rs, const IsotropicIndex& tau) {
  if (tau.dim().d != rs.dim().d)
    throw std::invalid_argument("f_tau: mismatched dimensions");
  std::vector<int> rows;
  for (int e : tau.entries())
    if (!rs.v().contains(e)) rows.push_back(e);
  return patch_pfaffian(f, rs, std::move(rows));
}

// Generators of the tangent-cone ideal: f_tau for tau in I(d) with
// v <= tau and tau not <= w, in lexicographic order of tau.
template <class F>
std::vector<std::pair<IsotropicIndex, Poly<F>>> generators(
    const F& f, const RootSet& rs, const IsotropicIndex& w) {
  if (!bruhat_leq(rs.v(), w))
    throw std::invalid_argument("generators: requires v <= w");
  std::vector<std::pair<IsotropicIndex, Poly<F>>> out;
  for (const IsotropicIndex& tau : enumerate_isotropic(rs.dim())) {
    if (!bruhat_leq(rs.v(), tau)) continue;
    if (bruhat_leq(tau, w)) continue;
    out.emplace_back(tau, f_tau(f, rs, tau));
  }
  return out;
}

// All f_tau with tau not <= w, dropping the v <= tau restriction; generates
// the same ideal (checked by the verification suites).
template <class F>
std::vector<std::pair<IsotropicIndex, Poly<F>>> generators_unrestricted(
    const F& f, const RootSet& rs, const IsotropicIndex& w) {
  std::vector<std::pair<IsotropicIndex, Poly<F>>> out;
  for (const IsotropicIndex& tau : enumerate_isotropic(rs.dim())) {
    if (bruhat_leq(tau, w)) continue;
    out.emplace_back(tau, f_tau(f, rs, tau));
  }
  return out;
}

// w = (2r-1, ..., d, 2d-2r+3, ..., 2d), the two-block element whose ideal
// is generated by all degree-r Pfaffians of the generic bottom block.
IsotropicIndex special_case_w(Dim dim, int r);

}  // namespace otc

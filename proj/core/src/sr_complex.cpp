#include "otc/sr_complex.hpp"

#include <algorithm>

#include "otc/groebner.hpp"
#include "otc/limits.hpp"

namespace otc {

namespace {

constexpr std::size_t kMaxVertices = 24;

}  // namespace

SimplicialComplex SimplicialComplex::from_initial_ideal(
    std::size_t nvars, std::vector<Monomial> min_gens) {
  for (const Monomial& g : min_gens) {
    if (g.nvars() != nvars)
      throw std::invalid_argument(
          "SimplicialComplex: generator over wrong variable set");
    if (!g.squarefree())
      throw NonSquarefreeError(
          "SimplicialComplex: non-square-free minimal generator");
    if (g.is_one())
      throw std::invalid_argument(
          "SimplicialComplex: the unit ideal has no complex");
  }
  std::sort(min_gens.begin(), min_gens.end());
  min_gens.erase(std::unique(min_gens.begin(), min_gens.end()),
                 min_gens.end());
  std::vector<Monomial> minimal;
  for (const Monomial& m : min_gens) {
    bool dominated = false;
    for (const Monomial& g : minimal)
      if (g.divides(m) && !(g == m)) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(m);
  }
  return SimplicialComplex(nvars, std::move(minimal));
}

bool SimplicialComplex::is_face(
    const std::vector<std::size_t>& vertices) const {
  Monomial m(nvars_);
  for (std::size_t v : vertices) {
    if (v >= nvars_)
      throw std::invalid_argument("SimplicialComplex: vertex out of range");
    if (m.exp(v) == 0) m.bump(v);
  }
  return !monomial_ideal_member(nonfaces_, m);
}

std::vector<std::vector<std::size_t>> SimplicialComplex::maximal_faces(
    const std::vector<int>& vertex_order) const {
  if (nvars_ > kMaxVertices)
    throw ResourceLimitError("maximal_faces: too many vertices");
  std::vector<int> order = vertex_order;
  if (order.empty())
    for (std::size_t i = 0; i < nvars_; ++i)
      order.push_back(static_cast<int>(i));
  if (order.size() != nvars_)
    throw std::invalid_argument("maximal_faces: bad vertex order");

  // Nonfaces as vertex bitmasks for fast subset tests.
  std::vector<std::uint32_t> nf_masks;
  for (const Monomial& g : nonfaces_) {
    std::uint32_t m = 0;
    for (std::size_t v : g.support()) m |= (1u << v);
    nf_masks.push_back(m);
  }
  const auto face_ok = [&](std::uint32_t face) {
    for (std::uint32_t nf : nf_masks)
      if ((nf & face) == nf) return false;
    return true;
  };

  std::vector<std::vector<std::size_t>> out;
  std::uint32_t chosen = 0;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == nvars_) {
      for (std::size_t v = 0; v < nvars_; ++v) {
        if (chosen & (1u << v)) continue;
        if (face_ok(chosen | (1u << v))) return;  // extendable: not maximal
      }
      std::vector<std::size_t> verts;
      for (std::size_t v = 0; v < nvars_; ++v)
        if (chosen & (1u << v)) verts.push_back(v);
      out.push_back(std::move(verts));
      return;
    }
    const std::uint32_t bit = 1u << static_cast<unsigned>(
                                  order[idx]);
    if (face_ok(chosen | bit)) {
      chosen |= bit;
      self(self, idx + 1);
      chosen &= ~bit;
    }
    self(self, idx + 1);
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<long> SimplicialComplex::f_vector() const {
  if (nvars_ > kMaxVertices)
    throw ResourceLimitError("f_vector: too many vertices");
  std::vector<std::uint32_t> nf_masks;
  for (const Monomial& g : nonfaces_) {
    std::uint32_t m = 0;
    for (std::size_t v : g.support()) m |= (1u << v);
    nf_masks.push_back(m);
  }
  const auto face_ok = [&](std::uint32_t face) {
    for (std::uint32_t nf : nf_masks)
      if ((nf & face) == nf) return false;
    return true;
  };
  std::vector<long> f{1};  // the empty face
  // Depth-first over faces only: children extend by larger vertex indices,
  // so each face is visited exactly once.
  auto rec = [&](auto&& self, std::uint32_t face, std::size_t next,
                 std::size_t size) -> void {
    for (std::size_t v = next; v < nvars_; ++v) {
      const std::uint32_t ext = face | (1u << v);
      if (!face_ok(ext)) continue;
      if (f.size() <= size + 1) f.push_back(0);
      ++f[size + 1];
      self(self, ext, v + 1, size + 1);
    }
  };
  rec(rec, 0, 0, 0);
  return f;
}

}  // namespace otc

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "otc/field.hpp"
#include "otc/groebner.hpp"
#include "otc/patch.hpp"
#include "otc/sr_complex.hpp"

using namespace otc;

namespace {

const RatField QQ;

Monomial sqfree(std::size_t n, std::initializer_list<std::size_t> vars) {
  Monomial m(n);
  for (std::size_t v : vars) m.bump(v);
  return m;
}

}  // namespace

TEST_CASE("full simplex and empty-face complex") {
  auto full = SimplicialComplex::from_initial_ideal(4, {});
  auto facets = full.maximal_faces();
  REQUIRE(facets.size() == 1);
  CHECK(facets[0] == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(full.f_vector() == std::vector<long>{1, 4, 6, 4, 1});

  std::vector<Monomial> all_vars;
  for (std::size_t i = 0; i < 3; ++i) all_vars.push_back(sqfree(3, {i}));
  auto empty = SimplicialComplex::from_initial_ideal(3, all_vars);
  auto ef = empty.maximal_faces();
  REQUIRE(ef.size() == 1);
  CHECK(ef[0].empty());
  CHECK(empty.f_vector() == std::vector<long>{1});
}

TEST_CASE("gens = {xy} on three vertices") {
  auto sc = SimplicialComplex::from_initial_ideal(3, {sqfree(3, {0, 1})});
  auto facets = sc.maximal_faces();
  REQUIRE(facets.size() == 2);
  CHECK(facets[0] == std::vector<std::size_t>{0, 2});
  CHECK(facets[1] == std::vector<std::size_t>{1, 2});
  CHECK(sc.is_face({0, 2}));
  CHECK_FALSE(sc.is_face({0, 1}));
  CHECK(sc.f_vector() == std::vector<long>{1, 3, 2});
}

TEST_CASE("non-square-free input is rejected loudly") {
  Monomial sq(2);
  sq.bump(0, 2);
  CHECK_THROWS_AS(SimplicialComplex::from_initial_ideal(2, {sq}),
                  NonSquarefreeError);
  Monomial unit(2);
  CHECK_THROWS_AS(SimplicialComplex::from_initial_ideal(2, {unit}),
                  std::invalid_argument);
}

TEST_CASE("worked example: faces avoid the initial ideal") {
  RootSet rs(bottom_isotropic(Dim(5)));
  TermOrder ord = make_hlex(rs);
  auto gens = generators(QQ, rs, IsotropicIndex(Dim(5), {3, 4, 5, 9, 10}));
  std::vector<Poly<RatField>> polys;
  for (auto& [t, p] : gens) polys.push_back(p);
  auto ingens = initial_ideal(buchberger(QQ, polys, ord), ord);
  auto sc = SimplicialComplex::from_initial_ideal(10, ingens);
  auto facets = sc.maximal_faces(make_order1(rs).by_rank);
  CHECK_FALSE(facets.empty());
  for (const auto& facet : facets) {
    Monomial m(10);
    for (std::size_t v : facet) m.bump(v);
    CHECK_FALSE(monomial_ideal_member(ingens, m));
    // Maximality: adding any vertex creates a nonface.
    for (std::size_t v = 0; v < 10; ++v) {
      if (m.exp(v) > 0) continue;
      Monomial ext = m;
      ext.bump(v);
      CHECK(monomial_ideal_member(ingens, ext));
    }
  }
  // f-vector entries count square-free standard monomials per degree.
  auto fv = sc.f_vector();
  long total = std::accumulate(fv.begin(), fv.end(), 0L);
  long expect = 0;
  for (int k = 0; k <= static_cast<int>(fv.size()); ++k) {
    long cnt = 0;
    for (const Monomial& m : standard_monomials(ingens, k, 10))
      if (m.squarefree()) ++cnt;
    if (k < static_cast<int>(fv.size())) CHECK(fv[k] == cnt);
    expect += cnt;
  }
  CHECK(total == expect);
}

TEST_CASE("face oracle agrees with divisibility") {
  auto sc = SimplicialComplex::from_initial_ideal(
      4, {sqfree(4, {0, 1}), sqfree(4, {2, 3})});
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<std::size_t> verts;
    Monomial m(4);
    for (std::size_t v = 0; v < 4; ++v)
      if (mask & (1u << v)) {
        verts.push_back(v);
        m.bump(v);
      }
    CHECK(sc.is_face(verts) ==
          !monomial_ideal_member(sc.minimal_nonfaces(), m));
  }
}

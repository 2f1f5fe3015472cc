#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "otc/antiskew.hpp"
#include "otc/field.hpp"
#include "otc/io.hpp"
#include "otc/patch.hpp"

using namespace otc;

namespace {

const RatField QQ;
using QP = Poly<RatField>;

AntiSkewMatrix<RatField> random_antiskew(int n, std::mt19937_64& rng) {
  return AntiSkewMatrix<RatField>::from_upper(QQ, n, [&](int, int) {
    long long num = static_cast<long long>(rng() % 21) - 10;
    long long den = static_cast<long long>(rng() % 6) + 1;
    return BigRat(num) / den;
  });
}

int var_of(const RootSet& rs, int r, int c) {
  return rs.var_index(Root{r, c});
}

QP letters(const RootSet& rs,
           const std::vector<std::pair<int, std::vector<Root>>>& terms) {
  std::vector<QP::Term> ts;
  for (const auto& [coef, roots] : terms) {
    Monomial m(rs.or_roots().size());
    for (const Root& a : roots)
      m.bump(static_cast<std::size_t>(rs.var_index(a)));
    ts.push_back({std::move(m), QQ.from_int(coef)});
  }
  return QP::from_terms(QQ, rs.or_roots().size(), std::move(ts));
}

}  // namespace

TEST_CASE("pfaffian term count") {
  CHECK(pfaffian_term_count(0) == 1);
  CHECK(pfaffian_term_count(1) == 1);
  CHECK(pfaffian_term_count(2) == 3);
  CHECK(pfaffian_term_count(3) == 15);
  CHECK(pfaffian_term_count(4) == 105);
}

TEST_CASE("pfaffian base cases") {
  // Empty matrix.
  auto empty = AntiSkewMatrix<RatField>::from_rows(QQ, {});
  CHECK(pfaffian(QQ, empty) == BigRat(1));
  // n = 1: Pf = a11.
  auto one = AntiSkewMatrix<RatField>::from_rows(
      QQ, {{BigRat(7), BigRat(0)}, {BigRat(0), BigRat(-7)}});
  CHECK(pfaffian(QQ, one) == BigRat(7));
  CHECK(verify_det_identity(QQ, one));  // det = -a11^2 = (-1)^1 Pf^2
}

TEST_CASE("matrix validation") {
  CHECK_THROWS_AS(AntiSkewMatrix<RatField>::from_rows(
                      QQ, {{BigRat(1), BigRat(0)}, {BigRat(0), BigRat(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(AntiSkewMatrix<RatField>::from_rows(
                      QQ, {{BigRat(0), BigRat(2)}, {BigRat(3), BigRat(0)}}),
                  std::invalid_argument);
}

TEST_CASE("the paper's 4x4 block Pfaffian") {
  // Rows (b c d 0 / f g 0 -d / i 0 -g -c / 0 -i -f -b) with numeric stand-ins.
  const BigRat b = 2, c = 3, d = 5, f = 7, g = 11, i = 13;
  auto m = AntiSkewMatrix<RatField>::from_rows(
      QQ, {{b, c, d, BigRat(0)},
           {f, g, BigRat(0), -d},
           {i, BigRat(0), -g, -c},
           {BigRat(0), -i, -f, -b}});
  CHECK(pfaffian(QQ, m) == d * i - c * f + b * g);
  for (int row = 1; row <= 4; ++row)
    CHECK(pfaffian(QQ, m, row) == d * i - c * f + b * g);
}

TEST_CASE("patch matrix reproduces the d=5 chart") {
  RootSet rs{IsotropicIndex(Dim(5), {1, 3, 4, 6, 9})};
  PatchMatrix pm(rs);
  const auto cell = [&](int r, int c) { return patch_entry_text(pm.at(r, c)); };
  // Unit rows at the entries of v.
  CHECK(cell(1, 1) == "1");
  CHECK(cell(3, 3) == "1");
  CHECK(cell(3, 1) == "0");
  CHECK(cell(9, 9) == "1");
  // Quoted entries of the displayed matrix.
  CHECK(cell(2, 1) == "X[2,1]");
  CHECK(cell(2, 9) == "0");       // anti-diagonal: 2 = star(9)
  CHECK(cell(5, 9) == "-X[2,6]");
  CHECK(cell(5, 6) == "0");
  CHECK(cell(7, 6) == "-X[5,4]");
  CHECK(cell(8, 4) == "-X[7,3]");
  CHECK(cell(10, 3) == "-X[8,1]");
  CHECK(cell(10, 1) == "0");
  CHECK(cell(7, 4) == "0");
  // Full 10x5 shape against the displayed matrix.
  const std::vector<std::vector<std::string>> want = {
      {"1", "0", "0", "0", "0"},
      {"X[2,1]", "X[2,3]", "X[2,4]", "X[2,6]", "0"},
      {"0", "1", "0", "0", "0"},
      {"0", "0", "1", "0", "0"},
      {"X[5,1]", "X[5,3]", "X[5,4]", "0", "-X[2,6]"},
      {"0", "0", "0", "1", "0"},
      {"X[7,1]", "X[7,3]", "0", "-X[5,4]", "-X[2,4]"},
      {"X[8,1]", "0", "-X[7,3]", "-X[5,3]", "-X[2,3]"},
      {"0", "0", "0", "0", "1"},
      {"0", "-X[8,1]", "-X[7,1]", "-X[5,1]", "-X[2,1]"}};
  for (int r = 1; r <= 10; ++r)
    for (int ci = 1; ci <= 5; ++ci)
      CHECK(cell(r, rs.v().entry(ci)) ==
            want[static_cast<std::size_t>(r - 1)]
                [static_cast<std::size_t>(ci - 1)]);
}

TEST_CASE("f_tau on the worked example") {
  RootSet rs(bottom_isotropic(Dim(5)));
  const Root a{6, 1}, b{6, 2}, c{6, 3}, d{6, 4}, e{7, 1}, f{7, 2}, g{7, 3},
      h{8, 1}, i{8, 2}, j{9, 1};
  CHECK(f_tau(QQ, rs, IsotropicIndex(Dim(5), {1, 6, 7, 8, 9}))
            .equals(QQ, letters(rs, {{1, {d, i}}, {-1, {c, f}}, {1, {b, g}}})));
  CHECK(f_tau(QQ, rs, IsotropicIndex(Dim(5), {5, 7, 8, 9, 10}))
            .equals(QQ, letters(rs, {{1, {g, j}}, {-1, {f, h}}, {1, {e, i}}})));
  // tau = v gives the empty submatrix.
  QP one = f_tau(QQ, rs, rs.v());
  CHECK(one.equals(QQ, QP::constant(QQ, rs.or_roots().size(), QQ.one())));
  (void)var_of;
}

TEST_CASE("generators of the worked example") {
  RootSet rs(bottom_isotropic(Dim(5)));
  IsotropicIndex w(Dim(5), {3, 4, 5, 9, 10});
  auto gens = generators(QQ, rs, w);
  REQUIRE(gens.size() == 5);
  CHECK(gens[0].first.entries() == std::vector<int>{1, 6, 7, 8, 9});
  CHECK(gens[4].first.entries() == std::vector<int>{5, 7, 8, 9, 10});
  // Every generator is a homogeneous quadric here.
  for (const auto& [tau, p] : gens) {
    CHECK(p.homogeneous());
    CHECK(p.degree() == 2);
    CHECK(p.term_count() == 3);
  }
  // w = top element: no generators at all.
  CHECK(generators(QQ, rs, top_isotropic(Dim(5))).empty());
  CHECK_THROWS_AS(generators(QQ, RootSet{w}, rs.v()), std::invalid_argument);
}

TEST_CASE("f_tau submatrix selections satisfy the anti-skew claim") {
  // Exhaustive for d <= 4: the selected rows are exactly the stars of the
  // selected columns, and the Pfaffian is homogeneous of the v-degree.
  for (int d = 1; d <= 4; ++d) {
    for (const auto& v : enumerate_isotropic(Dim(d))) {
      RootSet rs(v);
      for (const auto& tau : enumerate_isotropic(Dim(d))) {
        QP p = f_tau(QQ, rs, tau);
        int diff = 0;
        for (int x : v.entries())
          if (!tau.contains(x)) ++diff;
        CHECK(diff % 2 == 0);
        CHECK(p.homogeneous());
        CHECK(p.degree() == diff / 2);
        CHECK_FALSE(p.is_zero());
      }
    }
  }
}

TEST_CASE("expansion-row independence and both identities, randomized") {
  std::mt19937_64 rng(99);
  PrimeField fp(101);
  for (int n = 1; n <= 4; ++n) {
    for (int rep = 0; rep < 25; ++rep) {
      auto a = random_antiskew(n, rng);
      auto q = pfaffian(QQ, a);
      for (int m = 1; m <= 2 * n; ++m) CHECK(pfaffian(QQ, a, m) == q);
      CHECK(verify_det_identity(QQ, a));
      int aa = static_cast<int>(rng() % (2 * n)) + 1;
      int j = static_cast<int>(rng() % (2 * n)) + 1;
      while (j == aa) j = static_cast<int>(rng() % (2 * n)) + 1;
      CHECK(verify_minor_identity(QQ, a, aa, j, j));  // j = k case
      int k = static_cast<int>(rng() % (2 * n)) + 1;
      while (k == aa) k = static_cast<int>(rng() % (2 * n)) + 1;
      CHECK(verify_minor_identity(QQ, a, aa, j, k));

      auto ap = AntiSkewMatrix<PrimeField>::from_upper(
          fp, n, [&](int, int) { return rng() % fp.p; });
      CHECK(verify_det_identity(fp, ap));
      CHECK(verify_minor_identity(fp, ap, aa, j, k));
    }
  }
  // Index validation.
  auto a = random_antiskew(2, rng);
  CHECK_THROWS_AS(verify_minor_identity(QQ, a, 1, 1, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(pfaffian(QQ, a, 5), std::invalid_argument);
}

TEST_CASE("symbolic generic Pfaffian has (2n-1)!! monomials") {
  for (int n = 0; n <= 3; ++n) {
    const int tn = 2 * n;
    std::vector<std::pair<int, int>> upper;
    for (int i = 1; i <= tn; ++i)
      for (int j = 1; j <= tn; ++j)
        if (i + j < tn + 1) upper.emplace_back(i, j);
    PolyRing<RatField> ring{QQ, upper.size()};
    auto gen = [&](int i, int j) {
      auto it = std::find(upper.begin(), upper.end(), std::make_pair(i, j));
      Monomial m(upper.size());
      m.bump(static_cast<std::size_t>(it - upper.begin()));
      return Poly<RatField>::monomial(QQ, std::move(m), QQ.one());
    };
    auto a = AntiSkewMatrix<PolyRing<RatField>>::from_upper(ring, n, gen);
    CHECK(pfaffian(ring, a).term_count() == pfaffian_term_count(n));
  }
}

TEST_CASE("special-case w") {
  CHECK(special_case_w(Dim(5), 2).entries() ==
        std::vector<int>{3, 4, 5, 9, 10});
  CHECK(special_case_w(Dim(4), 2).entries() == std::vector<int>{3, 4, 7, 8});
  // 2r-1 = d gives the top element (an empty Pfaffian ideal).
  CHECK(special_case_w(Dim(3), 2).entries() == std::vector<int>{3, 5, 6});
  CHECK_THROWS_AS(special_case_w(Dim(2), 2), std::invalid_argument);
}

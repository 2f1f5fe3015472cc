#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "otc/field.hpp"
#include "otc/groebner.hpp"
#include "otc/hilbert.hpp"
#include "otc/io.hpp"
#include "otc/patch.hpp"

using namespace otc;

namespace {

const RatField QQ;
using QP = Poly<RatField>;

Root letter(char ch) {
  switch (ch) {
    case 'a': return {6, 1};
    case 'b': return {6, 2};
    case 'c': return {6, 3};
    case 'd': return {6, 4};
    case 'e': return {7, 1};
    case 'f': return {7, 2};
    case 'g': return {7, 3};
    case 'h': return {8, 1};
    case 'i': return {8, 2};
    case 'j': return {9, 1};
  }
  throw std::logic_error("bad letter");
}

Monomial word(const RootSet& rs, const std::string& w) {
  Monomial m(rs.or_roots().size());
  for (char ch : w) m.bump(static_cast<std::size_t>(rs.var_index(letter(ch))));
  return m;
}

QP wpoly(const RootSet& rs,
         const std::vector<std::pair<int, std::string>>& terms) {
  std::vector<QP::Term> ts;
  for (const auto& [c, w] : terms) ts.push_back({word(rs, w), QQ.from_int(c)});
  return QP::from_terms(QQ, rs.or_roots().size(), std::move(ts));
}

// Independent S-pair oracle: a basis is a Groebner basis iff every S-pair
// reduces to zero against it.
bool spair_oracle(const std::vector<QP>& gb, const TermOrder& ord) {
  for (std::size_t i = 0; i < gb.size(); ++i)
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      Monomial li = lead_monomial(gb[i], ord);
      Monomial lj = lead_monomial(gb[j], ord);
      Monomial l = Monomial::lcm(li, lj);
      auto ci = lead_term(gb[i], ord).coef;
      auto cj = lead_term(gb[j], ord).coef;
      QP s = gb[i]
                 .times_term(QQ, l.divided_by(li), QQ.inv(ci))
                 .minus(QQ, gb[j].times_term(QQ, l.divided_by(lj),
                                             QQ.inv(cj)));
      if (!reduce(QQ, s, gb, ord).is_zero()) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("field basics") {
  PrimeField fp(32003);
  CHECK(fp.mul(fp.inv(12345), 12345) == 1);
  CHECK(fp.from_int(-1) == 32002);
  CHECK_THROWS_AS(PrimeField(2), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(15), std::invalid_argument);
  CHECK(is_odd_prime(32003));
  CHECK_FALSE(is_odd_prime(32001));
}

TEST_CASE("variable orders satisfy the defining constraints") {
  for (int d = 2; d <= 5; ++d) {
    for (const auto& v : enumerate_isotropic(Dim(d))) {
      RootSet rs(v);
      const auto& vars = rs.or_roots();
      for (auto kind : {VariableOrder::Kind::order1, VariableOrder::Kind::order2}) {
        VariableOrder vo = kind == VariableOrder::Kind::order1
                               ? make_order1(rs)
                               : make_order2(rs);
        auto higher = [&](std::size_t x, std::size_t y) {
          return vo.rank_of[x] < vo.rank_of[y];
        };
        for (std::size_t x = 0; x < vars.size(); ++x)
          for (std::size_t y = 0; y < vars.size(); ++y) {
            if (x == y) continue;
            const Root &a = vars[x], &b = vars[y];
            if (a.row == b.row && rs.in_on(a) && !rs.in_on(b))
              CHECK(higher(x, y));
            if (a.row == b.row && rs.in_on(a) && rs.in_on(b) && a.col > b.col)
              CHECK(higher(x, y));
            if (rs.in_on(a) && a.row < b.row) {
              if (kind == VariableOrder::Kind::order1)
                CHECK(higher(x, y));
              else
                CHECK(higher(y, x));
            }
          }
      }
    }
  }
}

TEST_CASE("initial terms of the worked-example Pfaffians") {
  RootSet rs(bottom_isotropic(Dim(5)));
  auto gens = generators(QQ, rs, IsotropicIndex(Dim(5), {3, 4, 5, 9, 10}));
  REQUIRE(gens.size() == 5);
  const std::vector<std::string> assoc = {"di", "dh", "dj", "cj", "gj"};
  for (const TermOrder& ord :
       {make_hlex(rs), make_rlex(rs), make_diagproj(rs)}) {
    for (std::size_t k = 0; k < 5; ++k)
      CHECK(lead_monomial(gens[k].second, ord) == word(rs, assoc[k]));
  }
  // Comparator examples: di > cf > bg under hlex and rlex.
  for (const TermOrder& ord : {make_hlex(rs), make_rlex(rs)}) {
    CHECK(ord.greater(word(rs, "di"), word(rs, "cf")));
    CHECK(ord.greater(word(rs, "cf"), word(rs, "bg")));
    CHECK(ord.compare(word(rs, "di"), word(rs, "di")) ==
          std::strong_ordering::equal);
  }
}

TEST_CASE("natural-order agreement on every f_tau, d <= 4") {
  for (int d = 2; d <= 4; ++d) {
    for (const auto& v : enumerate_isotropic(Dim(d))) {
      RootSet rs(v);
      if (rs.or_roots().empty()) continue;
      TermOrder h = make_hlex(rs), r = make_rlex(rs), g = make_diagproj(rs);
      for (const auto& tau : enumerate_isotropic(Dim(d))) {
        if (!bruhat_leq(v, tau)) continue;
        QP p = f_tau(QQ, rs, tau);
        if (p.is_zero() || p.degree() == 0) continue;
        Monomial mh = lead_monomial(p, h);
        CHECK(mh == lead_monomial(p, r));
        CHECK(mh == lead_monomial(p, g));
      }
    }
  }
}

TEST_CASE("deglex counterexample order") {
  RootSet rs(bottom_isotropic(Dim(5)));
  std::vector<int> ranking{rs.var_index(letter('d')),
                           rs.var_index(letter('j')),
                           rs.var_index(letter('a'))};
  for (int i = 0; i < 10; ++i)
    if (std::find(ranking.begin(), ranking.end(), i) == ranking.end())
      ranking.push_back(i);
  TermOrder ord = make_deglex(rs, ranking);
  QP e = wpoly(rs, {{1, "cfh"}, {-1, "bgh"}, {-1, "cei"}, {1, "agi"}});
  CHECK(lead_monomial(e, ord) == word(rs, "agi"));
  // 1 is minimal.
  CHECK(ord.greater(word(rs, "a"), Monomial(10)));
  CHECK_THROWS_AS(make_deglex(rs, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(make_deglex(rs, std::vector<int>(10, 0)),
                  std::invalid_argument);
}

TEST_CASE("buchberger basics") {
  RootSet rs(bottom_isotropic(Dim(5)));
  TermOrder ord = make_hlex(rs);
  // Single polynomial: its monic normalization.
  QP p = wpoly(rs, {{2, "di"}, {-4, "cf"}});
  auto gb = buchberger(QQ, {p}, ord);
  REQUIRE(gb.size() == 1);
  CHECK(gb[0].equals(QQ, wpoly(rs, {{1, "di"}, {-2, "cf"}})));
  CHECK(buchberger(QQ, std::vector<QP>{}, ord).empty());
}

TEST_CASE("buchberger coprime-leads case") {
  RootSet rs(bottom_isotropic(Dim(5)));
  TermOrder ord = make_hlex(rs);
  QP p1 = wpoly(rs, {{1, "dd"}, {1, "e"}});
  QP p2 = wpoly(rs, {{1, "ci"}, {1, "j"}});
  auto gb = buchberger(QQ, {p1, p2}, ord);
  CHECK(gb.size() == 2);
  CHECK(spair_oracle(gb, ord));
  for (const auto& g : gb) {
    bool m1 = g.equals(QQ, p1), m2 = g.equals(QQ, p2);
    CHECK((m1 || m2));
  }
}

TEST_CASE("worked-example Groebner basis exceeds the generators") {
  RootSet rs(bottom_isotropic(Dim(5)));
  TermOrder ord = make_hlex(rs);
  auto gens = generators(QQ, rs, IsotropicIndex(Dim(5), {3, 4, 5, 9, 10}));
  std::vector<QP> polys;
  for (auto& [t, p] : gens) polys.push_back(p);
  auto gb = buchberger(QQ, polys, ord);
  CHECK(gb.size() > 5);
  CHECK(spair_oracle(gb, ord));
  // The ideal element -h f1 + i f2 reduces to zero.
  QP e = wpoly(rs, {{1, "cfh"}, {-1, "bgh"}, {-1, "cei"}, {1, "agi"}});
  CHECK(reduce(QQ, e, gb, ord).is_zero());
  // reduce is idempotent and detects non-membership.
  QP one = QP::constant(QQ, 10, QQ.one());
  CHECK(reduce(QQ, one, gb, ord).equals(QQ, one));
  QP r = reduce(QQ, wpoly(rs, {{3, "adi"}, {1, "h"}}), gb, ord);
  CHECK(reduce(QQ, r, gb, ord).equals(QQ, r));
  // Initial ideal contains the five associated monomials.
  auto ingens = initial_ideal(gb, ord);
  for (const std::string& w : {"di", "dh", "dj", "cj", "gj"})
    CHECK(monomial_ideal_member(ingens, word(rs, w)));
  // Permuting the generators does not change the initial ideal.
  std::vector<QP> shuffled = {polys[3], polys[0], polys[4], polys[2],
                              polys[1]};
  CHECK(initial_ideal(buchberger(QQ, shuffled, ord), ord) == ingens);
  // The generators alone are not a Groebner basis.
  CHECK_FALSE(spair_oracle(polys, ord));
}

TEST_CASE("groebner over a prime field") {
  PrimeField fp(32003);
  RootSet rs(bottom_isotropic(Dim(5)));
  TermOrder ord = make_hlex(rs);
  auto gens = generators(fp, rs, IsotropicIndex(Dim(5), {3, 4, 5, 9, 10}));
  std::vector<Poly<PrimeField>> polys;
  for (auto& [t, p] : gens) polys.push_back(p);
  auto gb = buchberger(fp, polys, ord);
  CHECK(gb.size() > 5);
  // Same initial ideal as over the rationals.
  auto gens_q = generators(QQ, rs, IsotropicIndex(Dim(5), {3, 4, 5, 9, 10}));
  std::vector<QP> polys_q;
  for (auto& [t, p] : gens_q) polys_q.push_back(p);
  CHECK(initial_ideal(gb, ord) ==
        initial_ideal(buchberger(QQ, polys_q, ord), ord));
}

TEST_CASE("resource guards") {
  RootSet rs(bottom_isotropic(Dim(5)));
  TermOrder ord = make_hlex(rs);
  auto gens = generators(QQ, rs, IsotropicIndex(Dim(5), {3, 4, 5, 9, 10}));
  std::vector<QP> polys;
  for (auto& [t, p] : gens) polys.push_back(p);
  GBLimits tiny;
  tiny.max_basis = 2;
  CHECK_THROWS_AS(buchberger(QQ, polys, ord, tiny), ResourceLimitError);
}

TEST_CASE("standard monomials and hilbert function") {
  RootSet rs(bottom_isotropic(Dim(5)));
  TermOrder ord = make_hlex(rs);
  auto gens = generators(QQ, rs, IsotropicIndex(Dim(5), {3, 4, 5, 9, 10}));
  std::vector<QP> polys;
  for (auto& [t, p] : gens) polys.push_back(p);
  auto ingens = initial_ideal(buchberger(QQ, polys, ord), ord);
  CHECK(hilbert_function(ingens, 0, 10) == 1);
  CHECK(hilbert_function(ingens, 1, 10) == 10);
  // Linear-algebra cross-check in low degrees.
  for (int k = 0; k <= 4; ++k)
    CHECK(quotient_degree_dim(QQ, polys, k, 10) ==
          hilbert_function(ingens, k, 10));
  // Degree-2 sanity: 55 monomials, 5 independent quadrics.
  CHECK(ideal_degree_dim(QQ, polys, 2, 10) == 5);
  CHECK(monomials_of_degree(10, 2).size() == 55);
}

TEST_CASE("monomial utilities") {
  Monomial a(3), b(3);
  a.bump(0).bump(1);
  b.bump(1).bump(2);
  CHECK(Monomial::lcm(a, b).degree() == 3);
  CHECK_FALSE(Monomial::coprime(a, b));
  CHECK(Monomial::coprime(Monomial(3).bump(0), Monomial(3).bump(2)));
  CHECK(a.squarefree());
  CHECK_FALSE(Monomial(2).bump(0, 2).squarefree());
  CHECK(a.times(b).degree() == 4);
  CHECK(a.divides(a.times(b)));
  CHECK_FALSE(a.divides(b));
  CHECK(a.times(b).divided_by(a) == b);
  CHECK(monomials_of_degree(0, 0).size() == 1);
  CHECK(monomials_of_degree(0, 3).empty());
}

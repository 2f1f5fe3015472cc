#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "otc/chains.hpp"
#include "otc/index.hpp"

using namespace otc;

namespace {

VChain mk(const RootSet& rs, std::initializer_list<Root> elems) {
  return VChain::make(rs, std::vector<Root>(elems));
}

std::vector<Root> random_on_chain(const RootSet& rs, std::mt19937_64& rng,
                                  int max_len) {
  std::vector<Root> pool = rs.on_roots();
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<Root> out;
  for (const Root& a : pool) {
    if (static_cast<int>(out.size()) >= max_len) break;
    if (out.empty() || chain_greater(out.back(), a)) out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_CASE("chain validation") {
  RootSet rs(bottom_isotropic(Dim(4)));
  CHECK_NOTHROW(mk(rs, {Root{7, 1}, Root{5, 2}}));
  CHECK_THROWS_AS(mk(rs, {Root{5, 2}, Root{7, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(mk(rs, {Root{7, 1}, Root{6, 1}}), std::invalid_argument);
  CHECK(VChain().empty());
  // Diagonal South-West points are legal chain members (they lie in N).
  CHECK_NOTHROW(mk(rs, {Root{8, 1}}));
}

TEST_CASE("intertwined pairs") {
  RootSet rs(bottom_isotropic(Dim(4)));
  CHECK(is_intertwined(rs, Root{7, 1}, Root{5, 2}));
  CHECK_FALSE(is_intertwined(rs, Root{8, 1}, Root{5, 4}));
  CHECK_THROWS_AS(is_intertwined(rs, Root{5, 2}, Root{7, 1}),
                  std::invalid_argument);
  // Domination includes equality: p_v(beta) = p_h(alpha).
  CHECK(rs.pv(Root{5, 2}) == rs.ph(Root{7, 1}));
}

TEST_CASE("decompose") {
  RootSet rs(bottom_isotropic(Dim(4)));
  CHECK(decompose(rs, mk(rs, {Root{7, 1}})).size() == 1);
  CHECK(decompose(rs, mk(rs, {Root{7, 1}, Root{5, 2}})).size() == 1);
  auto two = decompose(rs, mk(rs, {Root{8, 1}, Root{5, 4}}));
  REQUIRE(two.size() == 2);
  CHECK(two[0].size() == 1);
  CHECK(two[1].size() == 1);

  // Concatenating components reproduces the chain; inner pairs intertwined.
  std::mt19937_64 rng(11);
  for (int d = 3; d <= 6; ++d) {
    auto all = enumerate_isotropic(Dim(d));
    for (int rep = 0; rep < 60; ++rep) {
      RootSet rsv(all[rng() % all.size()]);
      auto elems = random_on_chain(rsv, rng, 5);
      if (elems.empty()) continue;
      VChain c = VChain::make(rsv, elems);
      auto comps = decompose(rsv, c);
      std::vector<Root> cat;
      for (const auto& comp : comps)
        cat.insert(cat.end(), comp.elements().begin(), comp.elements().end());
      CHECK(cat == elems);
      for (const auto& comp : comps)
        for (int i = 1; i + 1 <= comp.size(); ++i)
          CHECK(is_intertwined(rsv, comp.at(i), comp.at(i + 1)));
      for (std::size_t k = 0; k + 1 < comps.size(); ++k)
        CHECK_FALSE(
            is_intertwined(rsv, comps[k].last(), comps[k + 1].first()));
    }
  }
}

TEST_CASE("proj and projeven") {
  RootSet rs(bottom_isotropic(Dim(4)));
  VChain f = mk(rs, {Root{7, 1}, Root{5, 2}});
  CHECK(proj_set(rs, f) ==
        std::vector<Root>{Root{8, 1}, Root{7, 2}, Root{5, 4}});
  CHECK(projeven_set(rs, f) == std::vector<Root>{Root{8, 1}, Root{7, 2}});
  // Singleton diagonal element: proj has one point, projeven none.
  VChain diag = mk(rs, {Root{8, 1}});
  CHECK(proj_set(rs, diag) == std::vector<Root>{Root{8, 1}});
  CHECK(projeven_set(rs, diag).empty());
  CHECK_THROWS_AS(proj_set(rs, VChain()), std::invalid_argument);
  // projeven is a subset of proj with even size, for many random chains.
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 100; ++rep) {
    auto all = enumerate_isotropic(Dim(5));
    RootSet rsv(all[rng() % all.size()]);
    auto elems = random_on_chain(rsv, rng, 4);
    if (elems.empty()) continue;
    VChain c = VChain::make(rsv, elems);
    auto comps = decompose(rsv, c);
    const VChain& last = comps.front();
    auto p = proj_set(rsv, last);
    auto pe = projeven_set(rsv, last);
    CHECK(pe.size() % 2 == 0);
    CHECK(std::includes(p.begin(), p.end(), pe.begin(), pe.end(),
                        [](const Root& a, const Root& b) {
                          return a.row > b.row;
                        }));
  }
}

TEST_CASE("chain-level proj formulas") {
  RootSet rs(bottom_isotropic(Dim(4)));
  VChain f = mk(rs, {Root{7, 1}, Root{5, 2}});
  CHECK(proj_chain(rs, f) == proj_set(rs, f));
  CHECK(projeven_chain(rs, f) == projeven_set(rs, f));
  // Two singleton non-intertwined components: projeven of first union proj
  // of last.
  VChain c = mk(rs, {Root{8, 1}, Root{5, 4}});
  auto comps = decompose(rs, c);
  REQUIRE(comps.size() == 2);
  std::vector<Root> expect = projeven_set(rs, comps[0]);
  for (const Root& p : proj_set(rs, comps[1])) expect.push_back(p);
  std::sort(expect.begin(), expect.end(),
            [](const Root& a, const Root& b) { return a.row > b.row; });
  CHECK(proj_chain(rs, c) == expect);
}

TEST_CASE("chain domination") {
  RootSet rs(bottom_isotropic(Dim(5)));
  VChain c = mk(rs, {Root{8, 1}});
  CHECK(chain_dominates(c, c));
  VChain longer = mk(rs, {Root{8, 1}, Root{6, 2}});
  CHECK(chain_dominates(longer, c));
  CHECK_FALSE(chain_dominates(c, longer));
  VChain dom = mk(rs, {Root{9, 1}, Root{6, 2}});
  CHECK(chain_dominates(dom, longer));
  // Transitivity over random triples.
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 200; ++rep) {
    auto a = VChain::make(rs, random_on_chain(rs, rng, 4));
    auto b = VChain::make(rs, random_on_chain(rs, rng, 4));
    auto e = VChain::make(rs, random_on_chain(rs, rng, 4));
    if (chain_dominates(a, b) && chain_dominates(b, e))
      CHECK(chain_dominates(a, e));
  }
}

TEST_CASE("spnew") {
  RootSet rs(bottom_isotropic(Dim(4)));
  // Singleton with both projections in N: spnew is the identity.
  VChain single = mk(rs, {Root{6, 1}});
  REQUIRE(rs.in_n(rs.ph(Root{6, 1})));
  CHECK(spnew(rs, single) == single);
  // |projeven| = 2 gives the single element (r_2, r_1^*).
  auto pe = projeven_set(rs, single);
  REQUIRE(pe.size() == 2);
  CHECK(spnew(rs, single).elements() ==
        std::vector<Root>{Root{pe[1].row, rs.star(pe[0].row)}});
  // Output length is half of |projeven(F)| and the elements pair
  // consecutive projection rows, staying inside N(v).
  std::mt19937_64 rng(31);
  for (int d = 4; d <= 8; ++d) {
    auto all = enumerate_isotropic(Dim(d));
    for (int rep = 0; rep < 120; ++rep) {
      RootSet rsv(all[rng() % all.size()]);
      auto elems = random_on_chain(rsv, rng, 4);
      if (elems.empty()) continue;
      VChain c = VChain::make(rsv, elems);
      VChain f = decompose(rsv, c).front();
      bool proj_in_n = true;
      for (const Root& a : f.elements())
        proj_in_n = proj_in_n && rsv.in_n(rsv.ph(a)) && rsv.in_n(rsv.pv(a));
      if (!proj_in_n) continue;
      auto lst = projeven_set(rsv, f);
      VChain sp = spnew(rsv, f);
      CHECK(sp.size() == static_cast<int>(lst.size()) / 2);
      for (int i = 1; i <= sp.size(); ++i) {
        CHECK(sp.at(i) ==
              Root{lst[2 * i - 1].row, rsv.star(lst[2 * i - 2].row)});
        CHECK(rsv.in_n(sp.at(i)));
      }
    }
  }
  CHECK_THROWS_AS(spnew(rs, VChain()), std::invalid_argument);
}

TEST_CASE("new form: worked d=4 example") {
  RootSet rs(bottom_isotropic(Dim(4)));
  VChain e = mk(rs, {Root{7, 1}, Root{5, 2}});
  NewForm nf = new_form(rs, e, 2);
  REQUIRE(nf.defined);
  CHECK(nf.chain.elements() == std::vector<Root>{Root{7, 1}});
}

TEST_CASE("new form: undefined cases") {
  RootSet rs(bottom_isotropic(Dim(4)));
  // Last intertwined component a singleton.
  VChain e = mk(rs, {Root{7, 1}});
  CHECK_FALSE(new_form(rs, e, 1).defined);
  CHECK_THROWS_AS(new_form(rs, e, 1, Root{7, 2}), std::invalid_argument);
  CHECK_THROWS_AS(new_form(rs, e, 0), std::invalid_argument);
  CHECK_THROWS_AS(new_form(rs, e, 2), std::invalid_argument);
  // Odd case refuses a supplied choice.
  VChain e2 = mk(rs, {Root{7, 1}, Root{5, 2}});
  REQUIRE(proj_set(rs, e2).size() % 2 == 1);
  CHECK_THROWS_AS(new_form(rs, e2, 2, Root{8, 1}), std::invalid_argument);
}

TEST_CASE("new form: defined outputs are shorter ON-chains") {
  std::mt19937_64 rng(47);
  for (int d = 4; d <= 8; ++d) {
    auto all = enumerate_isotropic(Dim(d));
    for (int rep = 0; rep < 150; ++rep) {
      RootSet rsv(all[rng() % all.size()]);
      auto elems = random_on_chain(rsv, rng, 5);
      if (elems.size() < 2) continue;
      VChain e = VChain::make(rsv, elems);
      for (int cutoff = 1; cutoff <= e.size(); ++cutoff) {
        for (const NewForm& nf : all_new_forms(rsv, e, cutoff)) {
          REQUIRE(nf.defined);
          CHECK(nf.chain.size() < e.size());
          CHECK(nf.chain.all_in_on(rsv));
        }
      }
    }
  }
}

TEST_CASE("auxiliary split: lemma properties on random d<=8 chains") {
  std::mt19937_64 rng(53);
  int tested = 0;
  for (int d = 4; d <= 8; ++d) {
    auto all = enumerate_isotropic(Dim(d));
    for (int rep = 0; rep < 400; ++rep) {
      RootSet rsv(all[rng() % all.size()]);
      auto elems = random_on_chain(rsv, rng, 4);
      if (elems.size() < 2) continue;
      VChain g = VChain::make(rsv, elems);
      if (decompose(rsv, g).size() != 1) continue;
      for (int fs = 2; fs <= g.size(); ++fs) {
        VChain f = VChain::make(
            rsv, std::vector<Root>(elems.begin(), elems.begin() + fs));
        VChain dd = VChain::make(
            rsv, std::vector<Root>(elems.begin() + fs, elems.end()));
        std::vector<std::optional<Root>> choices;
        if (proj_set(rsv, f).size() % 2 == 1) {
          choices.emplace_back(std::nullopt);
        } else {
          for (const Root& ch : eligible_choices(rsv, f, fs))
            choices.emplace_back(ch);
        }
        for (const auto& ch : choices) {
          AuxSplit ax = aux_split(rsv, f, dd, ch);
          ++tested;
          // F1 and F2 \ D partition F; D is the tail of F2 and of nf2.
          CHECK(ax.f1.size() + ax.f2.size() == f.size() + dd.size());
          CHECK(ax.f2.size() == ax.nf2.size());
          for (int i = 1; i <= ax.f2.size(); ++i) {
            CHECK(rsv.pv(ax.f2.at(i)) == rsv.pv(ax.nf2.at(i)));
            CHECK(ax.nf2.at(i).row >= ax.f2.at(i).row);
          }
          // nf1 then nf2 is a sub-chain of new(F) > D.
          NewForm nf = new_form(rsv, f, f.size(), ch);
          REQUIRE(nf.defined);
          std::vector<Root> target = nf.chain.elements();
          target.insert(target.end(), dd.elements().begin(),
                        dd.elements().end());
          std::vector<Root> sub = ax.nf1.elements();
          sub.insert(sub.end(), ax.nf2.elements().begin(),
                     ax.nf2.elements().end());
          std::size_t pos = 0;
          bool is_sub = true;
          for (const Root& a : sub) {
            while (pos < target.size() && !(target[pos] == a)) ++pos;
            if (pos == target.size()) {
              is_sub = false;
              break;
            }
            ++pos;
          }
          CHECK(is_sub);
          // Projections of nf1: even count, inside N, pairwise distinct.
          std::set<std::pair<int, int>> prj;
          bool distinct = true;
          for (const Root& a : ax.nf1.elements())
            for (const Root& p : {rsv.ph(a), rsv.pv(a)}) {
              if (!prj.insert({p.row, p.col}).second) distinct = false;
              CHECK(rsv.in_n(p));
            }
          CHECK(distinct);
          CHECK(prj.size() % 2 == 0);
        }
      }
    }
  }
  CHECK(tested > 50);
}

TEST_CASE("eligible choices sit strictly between the last projections") {
  std::mt19937_64 rng(61);
  auto all = enumerate_isotropic(Dim(6));
  for (int rep = 0; rep < 300; ++rep) {
    RootSet rsv(all[rng() % all.size()]);
    auto elems = random_on_chain(rsv, rng, 4);
    if (elems.size() < 2) continue;
    VChain e = VChain::make(rsv, elems);
    for (int cutoff = 2; cutoff <= e.size(); ++cutoff) {
      auto comps = decompose(
          rsv, VChain::make(rsv, std::vector<Root>(elems.begin(),
                                                   elems.begin() + cutoff)));
      const VChain& last = comps.back();
      if (last.size() < 2 || proj_set(rsv, last).size() % 2 == 1) continue;
      Root lo = rsv.ph(last.last());
      Root hi = rsv.pv(last.last());
      for (const Root& ch : eligible_choices(rsv, e, cutoff)) {
        CHECK(diag_greater(ch, lo));
        CHECK(diag_greater(hi, ch));
      }
    }
  }
}

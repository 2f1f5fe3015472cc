#include "otc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "otc/antiskew.hpp"
#include "otc/chains.hpp"
#include "otc/field.hpp"
#include "otc/groebner.hpp"
#include "otc/hilbert.hpp"
#include "otc/io.hpp"
#include "otc/patch.hpp"
#include "otc/sr_complex.hpp"

namespace otc {

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

namespace {

using Clock = std::chrono::steady_clock;

const RatField QQ;
using QP = Poly<RatField>;

template <class Fn>
CheckResult run_check(std::string id, std::string name, double budget_s,
                      Fn fn) {
  CheckResult r;
  r.id = std::move(id);
  r.name = std::move(name);
  const auto t0 = Clock::now();
  try {
    std::string detail;
    r.pass = fn(detail);
    r.detail = detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (budget_s > 0 && r.seconds > budget_s) {
    r.pass = false;
    r.detail += " [exceeded time budget]";
  }
  return r;
}

int worker_count(const VerifyOptions& opts) {
  if (opts.workers > 0) return opts.workers;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Run jobs over a small thread pool; results keep input order.
template <class Job>
std::vector<std::string> run_parallel(const std::vector<Job>& jobs,
                                      int workers) {
  std::vector<std::string> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) break;
      try {
        results[i] = jobs[i]();
      } catch (const std::exception& e) {
        results[i] = std::string("FAIL exception: ") + e.what();
      }
    }
  };
  const int n = std::max(1, std::min<int>(workers, static_cast<int>(jobs.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
  return results;
}

// ----- d=5 paper chart helpers -------------------------------------------

RootSet paper_chart() { return RootSet(bottom_isotropic(Dim(5))); }

IsotropicIndex paper_w() {
  return IsotropicIndex(Dim(5), {3, 4, 5, 9, 10});
}

Root letter_root(char ch) {
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
  throw std::logic_error("letter_root: bad letter");
}

Monomial letters_mono(const RootSet& rs, const std::string& word) {
  Monomial m(rs.or_roots().size());
  for (char ch : word)
    m.bump(static_cast<std::size_t>(rs.var_index(letter_root(ch))));
  return m;
}

QP letters_poly(const RootSet& rs,
                const std::vector<std::pair<int, std::string>>& terms) {
  std::vector<QP::Term> ts;
  for (const auto& [coef, word] : terms)
    ts.push_back({letters_mono(rs, word), QQ.from_int(coef)});
  return QP::from_terms(QQ, rs.or_roots().size(), std::move(ts));
}

std::vector<QP> gen_polys(
    const std::vector<std::pair<IsotropicIndex, QP>>& gens) {
  std::vector<QP> out;
  for (const auto& [tau, p] : gens) out.push_back(p);
  return out;
}

std::string tuple_str(const IndexTuple& t) {
  std::string s = "(";
  for (int i = 1; i <= t.size(); ++i)
    s += (i > 1 ? "," : "") + std::to_string(t.entry(i));
  return s + ")";
}

// ----- criterion 1-3, 8: the d=5 worked example ---------------------------

bool crit_paper_generators(std::string& detail) {
  RootSet rs = paper_chart();
  auto gens = generators(QQ, rs, paper_w());
  const std::vector<std::vector<int>> want_taus = {{1, 6, 7, 8, 9},
                                                   {2, 6, 7, 8, 10},
                                                   {3, 6, 7, 9, 10},
                                                   {4, 6, 8, 9, 10},
                                                   {5, 7, 8, 9, 10}};
  const std::vector<std::vector<std::pair<int, std::string>>> want_polys = {
      {{1, "di"}, {-1, "cf"}, {1, "bg"}},
      {{1, "dh"}, {-1, "ce"}, {1, "ag"}},
      {{1, "dj"}, {-1, "be"}, {1, "af"}},
      {{1, "cj"}, {-1, "bh"}, {1, "ai"}},
      {{1, "gj"}, {-1, "fh"}, {1, "ei"}}};
  if (gens.size() != 5) {
    detail = "expected 5 generators, got " + std::to_string(gens.size());
    return false;
  }
  for (std::size_t k = 0; k < 5; ++k) {
    if (gens[k].first.entries() != want_taus[k]) {
      detail = "tau mismatch at position " + std::to_string(k);
      return false;
    }
    if (!gens[k].second.equals(QQ, letters_poly(rs, want_polys[k]))) {
      detail = "generator mismatch for tau " + tuple_str(gens[k].first.tuple());
      return false;
    }
  }
  detail = "5 generators match the worked example exactly";
  return true;
}

bool crit_non_groebner(std::string& detail) {
  RootSet rs = paper_chart();
  auto gens = generators(QQ, rs, paper_w());
  const QP& f1 = gens[0].second;
  const QP& f2 = gens[1].second;
  QP e = f1.times_term(QQ, letters_mono(rs, "h"), QQ.from_int(-1))
             .plus(QQ, f2.times_term(QQ, letters_mono(rs, "i"),
                                     QQ.from_int(1)));
  QP want = letters_poly(
      rs, {{1, "cfh"}, {-1, "bgh"}, {-1, "cei"}, {1, "agi"}});
  if (!e.equals(QQ, want)) {
    detail = "-h f1 + i f2 does not match cfh-bgh-cei+agi";
    return false;
  }
  std::vector<Monomial> assoc = {
      letters_mono(rs, "di"), letters_mono(rs, "dh"), letters_mono(rs, "dj"),
      letters_mono(rs, "cj"), letters_mono(rs, "gj")};
  for (const auto& t : e.terms())
    for (const Monomial& m : assoc)
      if (m.divides(t.mono)) {
        detail = "a term of the element is divisible by an associated monomial";
        return false;
      }
  TermOrder hlex = make_hlex(rs);
  auto gb = buchberger(QQ, gen_polys(gens), hlex);
  if (gb.size() <= 5) {
    detail = "reduced basis has only " + std::to_string(gb.size()) +
             " elements";
    return false;
  }
  if (!reduce(QQ, e, gb, hlex).is_zero()) {
    detail = "element of the ideal does not reduce to zero";
    return false;
  }
  detail = "element reproduced; reduced basis has " +
           std::to_string(gb.size()) + " > 5 elements";
  return true;
}

bool crit_deglex_counterexample(std::string& detail) {
  RootSet rs = paper_chart();
  const std::size_t nv = rs.or_roots().size();
  std::vector<int> ranking;
  ranking.push_back(rs.var_index(letter_root('d')));
  ranking.push_back(rs.var_index(letter_root('j')));
  ranking.push_back(rs.var_index(letter_root('a')));
  for (std::size_t i = 0; i < nv; ++i) {
    int v = static_cast<int>(i);
    if (std::find(ranking.begin(), ranking.end(), v) == ranking.end())
      ranking.push_back(v);
  }
  TermOrder ord = make_deglex(rs, ranking);
  QP e = letters_poly(rs,
                      {{1, "cfh"}, {-1, "bgh"}, {-1, "cei"}, {1, "agi"}});
  Monomial lead = lead_monomial(e, ord);
  if (!(lead == letters_mono(rs, "agi"))) {
    detail = "initial term is not agi";
    return false;
  }
  detail = "deglex with d > j > a > rest picks agi";
  return true;
}

bool crit_special_case(std::string& detail) {
  RootSet rs = paper_chart();
  IsotropicIndex w = special_case_w(Dim(5), 2);
  if (w.entries() != std::vector<int>{3, 4, 5, 9, 10}) {
    detail = "special-case w is not (3,4,5,9,10)";
    return false;
  }
  auto gens = generators(QQ, rs, w);
  std::vector<QP> a = gen_polys(gens);
  // All degree-2 Pfaffians of the generic bottom block: every 4-subset of
  // the non-v rows.
  std::vector<QP> b;
  const std::vector<int> rows = {6, 7, 8, 9, 10};
  for (std::size_t skip = 0; skip < rows.size(); ++skip) {
    std::vector<int> sel;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != skip) sel.push_back(rows[i]);
    b.push_back(patch_pfaffian(QQ, rs, sel));
  }
  TermOrder hlex = make_hlex(rs);
  auto gb_a = buchberger(QQ, a, hlex);
  auto gb_b = buchberger(QQ, b, hlex);
  for (const QP& p : b)
    if (!reduce(QQ, p, gb_a, hlex).is_zero()) {
      detail = "a block Pfaffian is not in the generator ideal";
      return false;
    }
  for (const QP& p : a)
    if (!reduce(QQ, p, gb_b, hlex).is_zero()) {
      detail = "a generator is not in the block-Pfaffian ideal";
      return false;
    }
  detail = "ideals coincide by mutual normal-form reduction";
  return true;
}

// ----- criterion 5, 7: Pfaffian identities and homogeneity ----------------

template <class F>
bool pfaffian_identity_round(const F& f, std::mt19937_64& rng, int n,
                             std::function<typename F::Elem()> pick,
                             std::string& detail) {
  auto a = AntiSkewMatrix<F>::from_upper(f, n,
                                         [&](int, int) { return pick(); });
  if (!verify_det_identity(f, a)) {
    detail = "det = (-1)^n Pf^2 failed at n=" + std::to_string(n);
    return false;
  }
  const int tn = 2 * n;
  auto rnd = [&](int mod) { return static_cast<int>(rng() % mod) + 1; };
  int aa = rnd(tn);
  int j = rnd(tn), k = rnd(tn);
  while (j == aa) j = rnd(tn);
  while (k == aa) k = rnd(tn);
  if (!verify_minor_identity(f, a, aa, j, k)) {
    detail = "minor identity failed at n=" + std::to_string(n);
    return false;
  }
  auto q1 = pfaffian(f, a, 1);
  for (int m = 2; m <= tn; ++m)
    if (!f.eq(q1, pfaffian(f, a, m))) {
      detail = "expansion-row dependence at n=" + std::to_string(n) +
               ", m=" + std::to_string(m);
      return false;
    }
  return true;
}

bool crit_pfaffian_identities(std::uint64_t seed, std::string& detail) {
  std::mt19937_64 rng(seed);
  const int reps = 200;
  PrimeField fp(32003);
  for (int n = 1; n <= 5; ++n) {
    for (int r = 0; r < reps; ++r) {
      auto pick_q = [&]() -> BigRat {
        long long num = static_cast<long long>(rng() % 41) - 20;
        long long den = static_cast<long long>(rng() % 9) + 1;
        return BigRat(num) / den;
      };
      if (!pfaffian_identity_round<RatField>(QQ, rng, n, pick_q, detail))
        return false;
      auto pick_p = [&]() -> PrimeField::Elem { return rng() % fp.p; };
      if (!pfaffian_identity_round<PrimeField>(fp, rng, n, pick_p, detail))
        return false;
    }
  }
  // Symbolic term counts: a fully generic matrix has (2n-1)!! Pfaffian terms.
  for (int n = 0; n <= 4; ++n) {
    const int tn = 2 * n;
    std::vector<std::pair<int, int>> upper;
    for (int i = 1; i <= tn; ++i)
      for (int j = 1; j <= tn; ++j)
        if (i + j < tn + 1) upper.emplace_back(i, j);
    PolyRing<RatField> ring{QQ, upper.size()};
    auto gen = [&](int i, int j) {
      std::size_t idx = static_cast<std::size_t>(
          std::find(upper.begin(), upper.end(), std::make_pair(i, j)) -
          upper.begin());
      Monomial m(upper.size());
      m.bump(idx);
      return Poly<RatField>::monomial(QQ, std::move(m), QQ.one());
    };
    auto a = AntiSkewMatrix<PolyRing<RatField>>::from_upper(ring, n, gen);
    auto pf = pfaffian(ring, a);
    if (pf.term_count() != pfaffian_term_count(n)) {
      detail = "generic Pfaffian term count mismatch at n=" +
               std::to_string(n);
      return false;
    }
  }
  detail = "det/minor identities, expansion-row independence, and term "
           "counts hold (200 matrices per n per field)";
  return true;
}

bool crit_homogeneity(std::string& detail) {
  for (int d = 1; d <= 5; ++d) {
    for (const IsotropicIndex& v : enumerate_isotropic(Dim(d))) {
      RootSet rs(v);
      for (const IsotropicIndex& tau : enumerate_isotropic(Dim(d))) {
        int diff = 0;
        for (int e : v.entries())
          if (!tau.contains(e)) ++diff;
        if (diff % 2 != 0) {
          detail = "between-index difference has odd size";
          return false;
        }
        QP p = f_tau(QQ, rs, tau);
        if (p.is_zero() || !p.homogeneous() || p.degree() != diff / 2) {
          detail = "f_tau not homogeneous of the v-degree at d=" +
                   std::to_string(d) + " v=" + tuple_str(v.tuple()) +
                   " tau=" + tuple_str(tau.tuple());
          return false;
        }
      }
    }
  }
  detail = "every f_tau is homogeneous of degree |v\\tau|/2 for d <= 5";
  return true;
}

// ----- criterion 4, 9: theorem-level Groebner checks -----------------------

std::string theorem_case(int d, const IsotropicIndex& v,
                         const IsotropicIndex& w) {
  RootSet rs(v);
  const std::size_t nv = rs.or_roots().size();
  auto gens = generators(QQ, rs, w);
  std::vector<QP> polys = gen_polys(gens);

  TermOrder hlex = make_hlex(rs), rlex = make_rlex(rs),
            diag = make_diagproj(rs);
  auto in_h = initial_ideal(buchberger(QQ, polys, hlex), hlex);
  auto in_r = initial_ideal(buchberger(QQ, polys, rlex), rlex);
  auto in_d = initial_ideal(buchberger(QQ, polys, diag), diag);
  for (const Monomial& m : in_h)
    if (!m.squarefree()) return "FAIL non-squarefree initial ideal (hlex)";
  for (const Monomial& m : in_r)
    if (!m.squarefree()) return "FAIL non-squarefree initial ideal (rlex)";
  for (const Monomial& m : in_d)
    if (!m.squarefree()) return "FAIL non-squarefree initial ideal (diagproj)";
  if (!(in_h == in_r) || !(in_h == in_d))
    return "FAIL initial ideals differ across the natural orders";

  // I' = I: dropping the v <= tau restriction does not change the ideal.
  auto full = generators_unrestricted(QQ, rs, w);
  auto in_full = initial_ideal(buchberger(QQ, gen_polys(full), hlex), hlex);
  if (!(in_full == in_h))
    return "FAIL restricted and unrestricted generator sets disagree";

  // The initial ideal is square-free, so the Stanley-Reisner complex exists;
  // sanity-check its facets against divisibility.
  SimplicialComplex sc = SimplicialComplex::from_initial_ideal(nv, in_h);
  for (const auto& facet : sc.maximal_faces(make_order1(rs).by_rank)) {
    if (!sc.is_face(facet)) return "FAIL facet is not a face";
  }
  std::size_t cnt = in_h.size();
  return "OK |ingens|=" + std::to_string(cnt);
}

bool crit_theorem_smalld(int workers, std::string& detail) {
  std::vector<std::function<std::string()>> jobs;
  std::vector<std::string> keys;
  for (int d = 2; d <= 4; ++d) {
    auto all = enumerate_isotropic(Dim(d));
    for (const auto& v : all)
      for (const auto& w : all) {
        if (!bruhat_leq(v, w)) continue;
        keys.push_back("d=" + std::to_string(d) + " v=" + tuple_str(v.tuple()) +
                       " w=" + tuple_str(w.tuple()));
        jobs.push_back([d, v, w] { return theorem_case(d, v, w); });
      }
  }
  auto results = run_parallel(jobs, workers);
  int ok = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].rfind("OK", 0) == 0) {
      ++ok;
    } else {
      detail = keys[i] + ": " + results[i];
      return false;
    }
  }
  detail = std::to_string(ok) + " (v,w) cases agree across hlex/rlex/diagproj";
  return true;
}

std::string hilbert_case(const IsotropicIndex& v, const IsotropicIndex& w,
                         int maxk) {
  RootSet rs(v);
  const std::size_t nv = rs.or_roots().size();
  auto polys = gen_polys(generators(QQ, rs, w));
  TermOrder hlex = make_hlex(rs);
  auto ingens = initial_ideal(buchberger(QQ, polys, hlex), hlex);
  for (int k = 0; k <= maxk; ++k) {
    long lhs = quotient_degree_dim(QQ, polys, k, nv);
    long rhs = hilbert_function(ingens, k, nv);
    if (lhs != rhs)
      return "FAIL degree " + std::to_string(k) + ": " + std::to_string(lhs) +
             " vs " + std::to_string(rhs);
  }
  return "OK";
}

bool crit_hilbert(int workers, std::string& detail) {
  std::vector<std::function<std::string()>> jobs;
  std::vector<std::string> keys;
  for (int d = 1; d <= 3; ++d) {
    auto all = enumerate_isotropic(Dim(d));
    for (const auto& v : all)
      for (const auto& w : all) {
        if (!bruhat_leq(v, w)) continue;
        keys.push_back("d=" + std::to_string(d) + " v=" + tuple_str(v.tuple()) +
                       " w=" + tuple_str(w.tuple()));
        jobs.push_back([v, w] { return hilbert_case(v, w, 6); });
      }
  }
  keys.push_back("d=5 worked example");
  jobs.push_back(
      [] { return hilbert_case(bottom_isotropic(Dim(5)), paper_w(), 6); });
  auto results = run_parallel(jobs, workers);
  for (std::size_t i = 0; i < results.size(); ++i)
    if (results[i] != "OK") {
      detail = keys[i] + ": " + results[i];
      return false;
    }
  detail = std::to_string(results.size()) +
           " cases: linear-algebra dims equal standard-monomial counts "
           "(degrees 0..6)";
  return true;
}

// ----- criterion 6: new forms ----------------------------------------------

void enumerate_chains(const RootSet& rs, int max_len,
                      const std::function<void(const VChain&)>& visit) {
  const std::vector<Root>& on = rs.on_roots();
  std::vector<Root> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    for (std::size_t i = start; i < on.size(); ++i) {
      if (!cur.empty() && !chain_greater(cur.back(), on[i])) continue;
      cur.push_back(on[i]);
      visit(VChain::make(rs, cur));
      if (static_cast<int>(cur.size()) < max_len) self(self, 0);
      cur.pop_back();
    }
  };
  // Chains go strictly South-West to North-East, so sort candidates by
  // descending row to make the DFS natural (any order works; we restart the
  // scan at each level and filter by chain_greater).
  rec(rec, 0);
}

std::string projs_of_chain_elements(const RootSet& rs, const VChain& c,
                                    std::vector<Root>* out) {
  // All projections of all elements, with sharing detection.
  std::set<std::pair<int, int>> seen;
  for (const Root& a : c.elements()) {
    for (const Root& p : {rs.ph(a), rs.pv(a)}) {
      if (!seen.insert({p.row, p.col}).second)
        return "shared projection";
      out->push_back(p);
    }
  }
  return "";
}

std::string check_pfewer(const RootSet& rs, const VChain& f,
                         const NewForm& nf, bool proj_odd) {
  if (!nf.defined) return "";
  const VChain& nc = nf.chain;
  // (1) no two elements of new(C) share a projection.
  std::vector<Root> prj;
  if (!projs_of_chain_elements(rs, nc, &prj).empty())
    return "p:fewer(1) violated: shared projection";
  // (2) proj(new C) has even cardinality; equals projeven(C) when |proj C|
  // is odd, and drops two points when even.
  std::vector<Root> proj_nc = proj_chain(rs, nc);
  if (proj_nc.size() % 2 != 0) return "p:fewer(2) violated: odd projections";
  if (proj_odd) {
    if (proj_nc != projeven_set(rs, f))
      return "p:fewer(2) violated: proj(newC) != projeven(C)";
  } else {
    if (proj_nc.size() != proj_set(rs, f).size() - 2)
      return "p:fewer(2) violated: wrong projection count";
  }
  // (3) strictly fewer elements.
  if (nc.size() >= f.size()) return "p:fewer(3) violated";
  return "";
}

std::string check_aux(const RootSet& rs, const VChain& f, const VChain& d,
                      std::optional<Root> choice) {
  AuxSplit ax = aux_split(rs, f, d, choice);
  NewForm nf = new_form(rs, f, f.size(), choice);
  if (!nf.defined) return "aux: new(F) unexpectedly undefined";
  std::vector<Root> target = nf.chain.elements();
  target.insert(target.end(), d.elements().begin(), d.elements().end());

  // (1) nf1 > nf2 is a sub-v-chain of new(F) > D.
  std::vector<Root> sub = ax.nf1.elements();
  sub.insert(sub.end(), ax.nf2.elements().begin(), ax.nf2.elements().end());
  std::size_t pos = 0;
  for (const Root& a : sub) {
    while (pos < target.size() && !(target[pos] == a)) ++pos;
    if (pos == target.size()) return "aux(1): not a sub-chain";
    ++pos;
  }
  VChain::make(rs, sub);  // must be a valid chain

  // (2) projections of nf1 even in number and all in N(v).
  std::vector<Root> prj;
  if (!projs_of_chain_elements(rs, ax.nf1, &prj).empty())
    return "aux(2): shared projection inside nf1";
  if (prj.size() % 2 != 0) return "aux(2): odd projection count";
  for (const Root& p : prj)
    if (!rs.in_n(p)) return "aux(2): projection outside N(v)";

  // (3) legs of nf1 do not intertwine pairwise; nor the junction to nf2.
  for (int i = 1; i <= ax.nf1.size(); ++i)
    for (int j = i + 1; j <= ax.nf1.size(); ++j)
      if (is_intertwined(rs, ax.nf1.at(i), ax.nf1.at(j)))
        return "aux(3): nf1 legs intertwine";
  if (!ax.nf1.empty() && !ax.nf2.empty() &&
      is_intertwined(rs, ax.nf1.last(), ax.nf2.first()))
    return "aux(3): nf1/nf2 junction intertwines";

  // (4) vertical projections of F1 appear among the projections of nf1.
  std::set<std::pair<int, int>> nf1proj;
  for (const Root& p : prj) nf1proj.insert({p.row, p.col});
  for (const Root& a : ax.f1.elements()) {
    Root p = rs.pv(a);
    if (!nf1proj.count({p.row, p.col}))
      return "aux(4): vertical projection of F1 missing";
  }

  // (5)+(6) bijection with equal verticals; rows no smaller, strictly bigger
  // off D.
  if (ax.f2.size() != ax.nf2.size()) return "aux(5): sizes differ";
  const int ds = d.size();
  for (int i = 1; i <= ax.f2.size(); ++i) {
    if (!(rs.pv(ax.f2.at(i)) == rs.pv(ax.nf2.at(i))))
      return "aux(5): vertical projections differ";
    if (ax.nf2.at(i).row < ax.f2.at(i).row) return "aux(6): row decreased";
    const bool in_d_part = i > ax.f2.size() - ds;
    if (in_d_part) {
      if (!(ax.nf2.at(i) == ax.f2.at(i)))
        return "aux(5): correspondence not identity on D";
    } else if (ax.nf2.at(i).row <= ax.f2.at(i).row) {
      return "aux(6): row not strictly bigger off D";
    }
  }
  return "";
}

bool crit_newforms(std::string& detail) {
  long defined_count = 0, undefined_count = 0, aux_count = 0;
  for (int d = 3; d <= 5; ++d) {
    for (const IsotropicIndex& v : enumerate_isotropic(Dim(d))) {
      RootSet rs(v);
      std::string err;
      enumerate_chains(rs, 4, [&](const VChain& e) {
        if (!err.empty()) return;
        const bool intertwined = decompose(rs, e).size() == 1;
        for (int cutoff = 1; cutoff <= e.size() && err.empty(); ++cutoff) {
          std::vector<VChain> comps =
              decompose(rs, VChain::make(rs, std::vector<Root>(
                                                 e.elements().begin(),
                                                 e.elements().begin() + cutoff)));
          const VChain& last = comps.back();
          if (last.size() < 2) {
            if (new_form(rs, e, cutoff).defined)
              err = "expected undefined new form (singleton component)";
            ++undefined_count;
            continue;
          }
          const bool odd = proj_set(rs, last).size() % 2 != 0;
          std::vector<std::optional<Root>> choices;
          if (odd) {
            choices.push_back(std::nullopt);
          } else {
            for (const Root& ch : eligible_choices(rs, e, cutoff))
              choices.emplace_back(ch);
            if (choices.empty()) {
              if (new_form(rs, e, cutoff).defined)
                err = "expected undefined new form (no eligible choice)";
              ++undefined_count;
              continue;
            }
          }
          for (const auto& ch : choices) {
            NewForm nf = new_form(rs, e, cutoff, ch);
            if (!nf.defined) {
              err = "expected defined new form";
              break;
            }
            ++defined_count;
            if (!nf.chain.all_in_on(rs)) {
              err = "new form leaves ON(v)";
              break;
            }
            if (nf.chain.size() >= e.size()) {
              err = "new form not strictly shorter";
              break;
            }
            // The intertwined-case propositions apply to C_l itself.
            if (cutoff == e.size() && intertwined) {
              err = check_pfewer(rs, e, nf, odd);
              if (!err.empty()) break;
            }
          }
        }
        // Auxiliary construction over every split of an intertwined chain.
        if (err.empty() && intertwined) {
          for (int fs = 2; fs <= e.size() && err.empty(); ++fs) {
            VChain f = VChain::make(
                rs, std::vector<Root>(e.elements().begin(),
                                      e.elements().begin() + fs));
            VChain dd = VChain::make(
                rs, std::vector<Root>(e.elements().begin() + fs,
                                      e.elements().end()));
            const bool odd = proj_set(rs, f).size() % 2 != 0;
            std::vector<std::optional<Root>> choices;
            if (odd) {
              choices.push_back(std::nullopt);
            } else {
              for (const Root& ch : eligible_choices(rs, f, fs))
                choices.emplace_back(ch);
            }
            for (const auto& ch : choices) {
              err = check_aux(rs, f, dd, ch);
              if (!err.empty()) break;
              ++aux_count;
            }
          }
        }
      });
      if (!err.empty()) {
        detail = "d=" + std::to_string(d) + " v=" + tuple_str(v.tuple()) +
                 ": " + err;
        return false;
      }
    }
  }
  detail = std::to_string(defined_count) + " defined new forms, " +
           std::to_string(undefined_count) + " undefined cases, " +
           std::to_string(aux_count) + " auxiliary splits verified";
  return true;
}

// ----- order axioms ---------------------------------------------------------

std::string order_axioms_for(const RootSet& rs, const TermOrder& ord,
                             int max_deg, std::mt19937_64& rng,
                             int random_rounds) {
  const std::size_t nv = rs.or_roots().size();
  std::vector<Monomial> monos;
  for (int k = 0; k <= max_deg; ++k)
    for (const Monomial& m : monomials_of_degree(nv, k)) monos.push_back(m);

  const Monomial one(nv);
  for (const Monomial& m : monos) {
    if (m == one) continue;
    if (!ord.greater(m, one)) return "1 is not minimal";
  }
  for (const Monomial& a : monos)
    for (const Monomial& b : monos) {
      auto c = ord.compare(a, b);
      auto cr = ord.compare(b, a);
      if ((c == std::strong_ordering::equal) != (a == b))
        return "equality mismatch";
      if ((c == std::strong_ordering::less) !=
          (cr == std::strong_ordering::greater))
        return "asymmetry violated";
    }
  // Transitivity and multiplicativity on bounded-degree monomials.
  if (nv <= 3) {
    for (const Monomial& a : monos)
      for (const Monomial& b : monos)
        for (const Monomial& c : monos) {
          if (ord.greater(a, b) && ord.greater(b, c) && !ord.greater(a, c))
            return "transitivity violated";
        }
    for (const Monomial& a : monos)
      for (const Monomial& b : monos)
        for (const Monomial& t : monos) {
          if (ord.compare(a, b) != ord.compare(a.times(t), b.times(t)))
            return "multiplicativity violated";
        }
  } else {
    auto random_mono = [&](int deg) {
      Monomial m(nv);
      for (int i = 0; i < deg; ++i)
        m.bump(static_cast<std::size_t>(rng() % nv));
      return m;
    };
    for (int r = 0; r < random_rounds; ++r) {
      Monomial a = random_mono(static_cast<int>(rng() % 5));
      Monomial b = random_mono(static_cast<int>(rng() % 5));
      Monomial c = random_mono(static_cast<int>(rng() % 5));
      Monomial t = random_mono(static_cast<int>(rng() % 4));
      if (ord.greater(a, b) && ord.greater(b, c) && !ord.greater(a, c))
        return "transitivity violated (random)";
      if (ord.compare(a, b) != ord.compare(a.times(t), b.times(t)))
        return "multiplicativity violated (random)";
    }
  }
  return "";
}

bool crit_order_axioms(std::uint64_t seed, std::string& detail) {
  std::mt19937_64 rng(seed);
  for (int d = 2; d <= 5; ++d) {
    for (const IsotropicIndex& v : enumerate_isotropic(Dim(d))) {
      RootSet rs(v);
      if (rs.or_roots().empty()) continue;
      const int max_deg = d <= 3 ? 3 : 2;
      std::vector<TermOrder> orders = {make_hlex(rs), make_rlex(rs),
                                       make_diagproj(rs)};
      for (const TermOrder& ord : orders) {
        std::string err = order_axioms_for(rs, ord, max_deg, rng, 400);
        if (!err.empty()) {
          detail = "d=" + std::to_string(d) + " v=" + tuple_str(v.tuple()) +
                   " " + ord.name() + ": " + err;
          return false;
        }
      }
    }
  }
  detail = "totality, 1-minimality, transitivity, multiplicativity hold for "
           "hlex/rlex/diagproj (exhaustive small-d, randomized beyond)";
  return true;
}

}  // namespace

SuiteResult verify_paper_example(const VerifyOptions&) {
  SuiteResult sr;
  sr.suite = "paper-example";
  sr.checks.push_back(run_check("C1", "worked-example generators", 1.0,
                                crit_paper_generators));
  sr.checks.push_back(
      run_check("C2", "generators are not a Groebner basis", 10.0,
                crit_non_groebner));
  sr.checks.push_back(run_check("C3", "deglex counterexample initial term",
                                1.0, crit_deglex_counterexample));
  sr.checks.push_back(run_check("C8", "two-block special case ideal", 30.0,
                                crit_special_case));
  return sr;
}

SuiteResult verify_pfaffian_identities(const VerifyOptions& opts) {
  SuiteResult sr;
  sr.suite = "pfaffian-identities";
  sr.checks.push_back(
      run_check("C5", "Pfaffian determinant/minor identities", 120.0,
                [&](std::string& d) {
                  return crit_pfaffian_identities(opts.seed, d);
                }));
  sr.checks.push_back(
      run_check("C7", "f_tau homogeneity (d <= 5)", 60.0, crit_homogeneity));
  return sr;
}

SuiteResult verify_newform_props(const VerifyOptions&) {
  SuiteResult sr;
  sr.suite = "newform-props";
  sr.checks.push_back(run_check("C6", "new-form and auxiliary-split suite",
                                300.0, crit_newforms));
  return sr;
}

SuiteResult verify_theorem_smalld(const VerifyOptions& opts) {
  SuiteResult sr;
  sr.suite = "theorem-smalld";
  const int workers = worker_count(opts);
  sr.checks.push_back(
      run_check("C4", "square-free initial ideals agree across orders", 600.0,
                [&](std::string& d) { return crit_theorem_smalld(workers, d); }));
  sr.checks.push_back(
      run_check("C9", "Hilbert functions by linear algebra", 300.0,
                [&](std::string& d) { return crit_hilbert(workers, d); }));
  return sr;
}

SuiteResult verify_order_axioms(const VerifyOptions& opts) {
  SuiteResult sr;
  sr.suite = "order-axioms";
  sr.checks.push_back(run_check("", "term-order axioms", 120.0,
                                [&](std::string& d) {
                                  return crit_order_axioms(opts.seed, d);
                                }));
  return sr;
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "paper-example", "pfaffian-identities", "newform-props",
      "theorem-smalld", "order-axioms"};
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opts) {
  if (name == "paper-example") return verify_paper_example(opts);
  if (name == "pfaffian-identities") return verify_pfaffian_identities(opts);
  if (name == "newform-props") return verify_newform_props(opts);
  if (name == "theorem-smalld") return verify_theorem_smalld(opts);
  if (name == "order-axioms") return verify_order_axioms(opts);
  throw std::invalid_argument("unknown verification suite: " + name);
}

std::vector<SuiteResult> verify_all(const VerifyOptions& opts) {
  std::vector<SuiteResult> out;
  for (const std::string& name : verify_suite_names())
    out.push_back(run_suite(name, opts));
  return out;
}

}  // namespace otc

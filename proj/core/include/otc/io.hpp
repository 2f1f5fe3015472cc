#pragma once

#include <string>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "otc/chains.hpp"
#include "otc/field.hpp"
#include "otc/order.hpp"
#include "otc/patch.hpp"
#include "otc/poly.hpp"
#include "otc/roots.hpp"

namespace otc {

using json = nlohmann::json;

json index_to_json(const IndexTuple& t);
json root_to_json(const Root& a);
json root_to_json(const Root& a, const RootFlags& f);
json chain_to_json(const VChain& c);
json newform_to_json(const NewForm& nf);
json monomial_to_json(const Monomial& m);
json complex_faces_to_json(const RootSet& rs,
                           const std::vector<std::vector<std::size_t>>& faces);
json patch_to_json(const PatchMatrix& pm);

std::string patch_entry_text(const PatchEntry& e);

// True for the d=5, v=(1,...,5) chart, where the ten variables carry the
// single-letter aliases a..j of the generic bottom block.
bool letters_available(const RootSet& rs);
std::string var_name(const RootSet& rs, std::size_t var_idx,
                     bool letters = false);

std::string monomial_text(const Monomial& m, const RootSet& rs,
                          bool letters = false);

// Parse "r1,r2,..." into integers; used by the CLI for --v/--w/--tau.
std::vector<int> parse_int_list(const std::string& s);
// Parse "r,c;r,c;..." into roots; used for chains.
std::vector<Root> parse_root_list(const std::string& s);

template <class F>
std::string coef_text(const F& f, const typename F::Elem& c) {
  return f.to_string(c);
}

// Terms sorted descending under the active order.
template <class F>
std::string poly_text(const F& f, const Poly<F>& p, const RootSet& rs,
                      const TermOrder& ord, bool letters = false) {
  if (p.is_zero()) return "0";
  auto terms = p.terms();
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    return ord.greater(a.mono, b.mono);
  });
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    bool neg = false;
    std::string cs;
    if constexpr (std::is_same_v<F, RatField>) {
      BigRat c = t.coef;
      if (c < 0) {
        neg = true;
        c = -c;
      }
      if (!(c == 1) || t.mono.is_one()) cs = c.str();
    } else {
      if (!f.eq(t.coef, f.one()) || t.mono.is_one()) cs = f.to_string(t.coef);
    }
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string ms = t.mono.is_one() ? "" : monomial_text(t.mono, rs, letters);
    if (!cs.empty() && !ms.empty())
      out += cs + "*" + ms;
    else
      out += cs + ms;
  }
  return out;
}

template <class F>
json poly_to_json(const F& f, const Poly<F>& p, const RootSet& rs,
                  const TermOrder& ord) {
  json terms = json::array();
  auto ts = p.terms();
  std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
    return ord.greater(a.mono, b.mono);
  });
  for (const auto& t : ts)
    terms.push_back({{"coeff", f.to_string(t.coef)},
                     {"exponents", t.mono.exps()}});
  json vars = json::array();
  for (const Root& a : rs.or_roots()) vars.push_back(root_to_json(a));
  return {{"vars", vars},
          {"terms", terms},
          {"text", poly_text(f, p, rs, ord, letters_available(rs))}};
}

}  // namespace otc

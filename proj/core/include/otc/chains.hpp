#pragma once

#include <optional>
#include <vector>

#include "otc/roots.hpp"

namespace otc {

// A v-chain alpha_1 > alpha_2 > ... > alpha_k of roots in N(v): row indices
// strictly decrease and column indices strictly increase along the chain.
// The empty chain is allowed.  Immutable after construction.
class VChain {
 public:
  VChain() = default;
  static VChain make(const RootSet& rs, std::vector<Root> elems);

  bool empty() const { return elems_.empty(); }
  int size() const { return static_cast<int>(elems_.size()); }
  const Root& at(int i) const {  // 1-based
    return elems_.at(static_cast<size_t>(i - 1));
  }
  const Root& first() const { return elems_.front(); }
  const Root& last() const { return elems_.back(); }
  const std::vector<Root>& elements() const { return elems_; }

  bool all_in_on(const RootSet& rs) const;

  bool operator==(const VChain&) const = default;

 private:
  explicit VChain(std::vector<Root> e) : elems_(std::move(e)) {}
  std::vector<Root> elems_;
};

// alpha > beta are intertwined iff the vertical projection of beta dominates
// the horizontal projection of alpha.  Requires alpha > beta in chain order.
bool is_intertwined(const RootSet& rs, const Root& alpha, const Root& beta);

// Maximal runs of consecutive intertwined pairs.  Concatenating the result
// reproduces the chain.
std::vector<VChain> decompose(const RootSet& rs, const VChain& c);

// proj(F) for an intertwined non-empty F: the set (not multiset) of all
// projections of all elements, sorted decreasing (South-West first).
std::vector<Root> proj_set(const RootSet& rs, const VChain& f);
// projeven(F): proj(F) if of even cardinality, else proj(F) minus its
// smallest member.
std::vector<Root> projeven_set(const RootSet& rs, const VChain& f);

// Chain-level variants: projeven(C_1) u ... u projeven(C_{l-1}) u proj(C_l)
// and projeven over all components, respectively.
std::vector<Root> proj_chain(const RootSet& rs, const VChain& c);
std::vector<Root> projeven_chain(const RootSet& rs, const VChain& c);

// D dominates C iff |D| >= |C| and the i-th element of D dominates the i-th
// element of C for every i <= |C|.
bool chain_dominates(const VChain& d, const VChain& c);

// spnew(F) for an intertwined F all of whose projections lie in N(v): with
// (r_1,r_1*) > ... > (r_t,r_t*) the elements of projeven(F) in decreasing
// order, the chain (r_2,r_1*) > (r_4,r_3*) > ... > (r_t,r_{t-1}*).
VChain spnew(const RootSet& rs, const VChain& f);

// Result of the new-form construction.  "Undefined" is a legitimate outcome
// (last intertwined component a singleton, or the even case with no eligible
// interior diagonal point), not an error.
struct NewForm {
  bool defined = false;
  VChain chain;
};

// The diagonal points usable as the second choice in the even case: members
// of proj(C_l) strictly between the horizontal and vertical projections of
// the cut-off element.  Empty in the odd case and when the new form is
// undefined.
std::vector<Root> eligible_choices(const RootSet& rs, const VChain& e,
                                   int cutoff);

// New form of E at the given cut-off (1-based index into E).  The choice
// must be absent in the odd case and an eligible diagonal point in the even
// case.
NewForm new_form(const RootSet& rs, const VChain& e, int cutoff,
                 std::optional<Root> choice = std::nullopt);

// All defined new forms of E at a cut-off, one per valid choice (a single
// entry in the odd case).
std::vector<NewForm> all_new_forms(const RootSet& rs, const VChain& e,
                                   int cutoff);

// The auxiliary split of an intertwined chain F > D with new(F) defined:
// F1 = elements of F whose vertical projections are among the top 2s-t
// diagonal points of the construction, F2 = the complement in F > D,
// nf1 = the first half of new(F), and nf2 = S > D with S the second-half
// elements whose vertical projections come from F2 \ D.
struct AuxSplit {
  VChain f1, f2, nf1, nf2;
};

AuxSplit aux_split(const RootSet& rs, const VChain& f, const VChain& d,
                   std::optional<Root> choice = std::nullopt);

}  // namespace otc

#include "otc/chains.hpp"

#include <algorithm>
#include <stdexcept>

namespace otc {

VChain VChain::make(const RootSet& rs, std::vector<Root> elems) {
  for (size_t i = 0; i < elems.size(); ++i) {
    if (!rs.contains(elems[i]))
      throw std::invalid_argument("VChain: element not in R(v)");
    if (!rs.in_n(elems[i]))
      throw std::invalid_argument("VChain: element not in N(v)");
    if (i > 0 && !chain_greater(elems[i - 1], elems[i]))
      throw std::invalid_argument("VChain: elements not strictly decreasing");
  }
  return VChain(std::move(elems));
}

bool VChain::all_in_on(const RootSet& rs) const {
  return std::all_of(elems_.begin(), elems_.end(),
                     [&](const Root& a) { return rs.in_on(a); });
}

bool is_intertwined(const RootSet& rs, const Root& alpha, const Root& beta) {
  if (!chain_greater(alpha, beta))
    throw std::invalid_argument("is_intertwined: requires alpha > beta");
  return dominates(rs.pv(beta), rs.ph(alpha));
}

std::vector<VChain> decompose(const RootSet& rs, const VChain& c) {
  std::vector<VChain> comps;
  if (c.empty()) return comps;
  std::vector<Root> cur{c.first()};
  for (int i = 2; i <= c.size(); ++i) {
    const Root& prev = c.at(i - 1);
    const Root& next = c.at(i);
    if (is_intertwined(rs, prev, next)) {
      cur.push_back(next);
    } else {
      comps.push_back(VChain::make(rs, std::move(cur)));
      cur = {next};
    }
  }
  comps.push_back(VChain::make(rs, std::move(cur)));
  return comps;
}

namespace {

void sort_diag_desc(std::vector<Root>& pts) {
  std::sort(pts.begin(), pts.end(),
            [](const Root& a, const Root& b) { return a.row > b.row; });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace

std::vector<Root> proj_set(const RootSet& rs, const VChain& f) {
  if (f.empty()) throw std::invalid_argument("proj_set: empty chain");
  std::vector<Root> pts;
  for (const Root& a : f.elements()) {
    pts.push_back(rs.ph(a));
    pts.push_back(rs.pv(a));
  }
  sort_diag_desc(pts);
  return pts;
}

std::vector<Root> projeven_set(const RootSet& rs, const VChain& f) {
  std::vector<Root> pts = proj_set(rs, f);
  if (pts.size() % 2 != 0) pts.pop_back();  // drop the smallest projection
  return pts;
}

std::vector<Root> proj_chain(const RootSet& rs, const VChain& c) {
  std::vector<Root> pts;
  if (c.empty()) return pts;
  std::vector<VChain> comps = decompose(rs, c);
  for (size_t i = 0; i + 1 < comps.size(); ++i) {
    std::vector<Root> part = projeven_set(rs, comps[i]);
    pts.insert(pts.end(), part.begin(), part.end());
  }
  std::vector<Root> lastp = proj_set(rs, comps.back());
  pts.insert(pts.end(), lastp.begin(), lastp.end());
  sort_diag_desc(pts);
  return pts;
}

std::vector<Root> projeven_chain(const RootSet& rs, const VChain& c) {
  std::vector<Root> pts;
  if (c.empty()) return pts;
  for (const VChain& comp : decompose(rs, c)) {
    std::vector<Root> part = projeven_set(rs, comp);
    pts.insert(pts.end(), part.begin(), part.end());
  }
  sort_diag_desc(pts);
  return pts;
}

bool chain_dominates(const VChain& d, const VChain& c) {
  if (d.size() < c.size()) return false;
  for (int i = 1; i <= c.size(); ++i)
    if (!dominates(d.at(i), c.at(i))) return false;
  return true;
}

namespace {

bool projections_in_n(const RootSet& rs, const VChain& f) {
  for (const Root& a : f.elements()) {
    if (!rs.in_n(rs.ph(a)) || !rs.in_n(rs.pv(a))) return false;
  }
  return true;
}

// Shared data of the new-form construction for an intertwined F with at
// least two elements: the diagonal points (r_1,r_1*) > ... > (r_t,r_t*) and
// the position s of the vertical projection of the last element.
struct ConstructionData {
  bool defined = false;
  std::vector<Root> lst;
  int s = 0;
  int t = 0;
};

ConstructionData construction_data(const RootSet& rs, const VChain& f,
                                   const std::optional<Root>& choice) {
  ConstructionData out;
  std::vector<Root> p = proj_set(rs, f);
  const Root pv_last = rs.pv(f.last());
  if (p.size() % 2 != 0) {
    if (choice)
      throw std::invalid_argument(
          "new form: choice must be absent when |proj| is odd");
    p.pop_back();
    out.lst = std::move(p);
  } else {
    std::vector<Root> eligible;
    for (size_t i = 0; i + 1 < p.size(); ++i)
      if (diag_greater(pv_last, p[i])) eligible.push_back(p[i]);
    if (eligible.empty()) {
      if (choice)
        throw std::invalid_argument(
            "new form: choice supplied but no eligible diagonal point");
      return out;  // undefined
    }
    if (!choice)
      throw std::invalid_argument(
          "new form: the even case requires a choice; see eligible_choices");
    if (std::find(eligible.begin(), eligible.end(), *choice) ==
        eligible.end())
      throw std::invalid_argument("new form: ineligible choice");
    std::vector<Root> kept;
    for (size_t i = 0; i + 1 < p.size(); ++i)
      if (p[i] != *choice) kept.push_back(p[i]);
    out.lst = std::move(kept);
  }
  out.t = static_cast<int>(out.lst.size());
  for (int i = 1; i <= out.t; ++i)
    if (out.lst[static_cast<size_t>(i - 1)] == pv_last) out.s = i;
  if (out.s == 0 || out.t % 2 != 0 || 2 * out.s - out.t < 2 ||
      (2 * out.s - out.t) % 2 != 0)
    throw std::logic_error("new form: construction invariants violated");
  out.defined = true;
  return out;
}

// (r_2,r_1*) > (r_4,r_3*) > ... > (r_{2s-t},r_{2s-t-1}*) followed by
// (r_{s+1},r_{2s-t+1}*) > ... > (r_t,r_s*).
std::vector<Root> build_new_chain(const RootSet& rs,
                                  const ConstructionData& cd) {
  std::vector<Root> out;
  const auto row = [&](int pos) {  // 1-based position in lst
    return cd.lst[static_cast<size_t>(pos - 1)].row;
  };
  const int half = (2 * cd.s - cd.t) / 2;
  for (int i = 1; i <= half; ++i)
    out.push_back(Root{row(2 * i), rs.star(row(2 * i - 1))});
  for (int i = 1; i <= cd.t - cd.s; ++i)
    out.push_back(
        Root{row(cd.s + i), rs.star(row(2 * cd.s - cd.t + i))});
  return out;
}

}  // namespace

VChain spnew(const RootSet& rs, const VChain& f) {
  if (f.empty()) throw std::invalid_argument("spnew: empty chain");
  if (decompose(rs, f).size() != 1)
    throw std::invalid_argument("spnew: chain not intertwined");
  if (!projections_in_n(rs, f))
    throw std::invalid_argument("spnew: projections must lie in N(v)");
  std::vector<Root> lst = projeven_set(rs, f);
  std::vector<Root> out;
  for (size_t i = 1; i < lst.size(); i += 2)
    out.push_back(Root{lst[i].row, rs.star(lst[i - 1].row)});
  return VChain::make(rs, std::move(out));
}

namespace {

struct CutParts {
  std::vector<VChain> head;  // C_1 ... C_{l-1}
  VChain last;               // C_l
  std::vector<Root> tail;    // D, unchanged by the construction
};

CutParts split_at_cutoff(const RootSet& rs, const VChain& e, int cutoff) {
  if (e.empty()) throw std::invalid_argument("new form: empty chain");
  if (cutoff < 1 || cutoff > e.size())
    throw std::invalid_argument("new form: cut-off out of range");
  if (!e.all_in_on(rs))
    throw std::invalid_argument("new form: chain must lie in ON(v)");
  std::vector<Root> c_elems(e.elements().begin(),
                            e.elements().begin() + cutoff);
  CutParts parts;
  parts.tail.assign(e.elements().begin() + cutoff, e.elements().end());
  std::vector<VChain> comps = decompose(rs, VChain::make(rs, c_elems));
  parts.last = comps.back();
  comps.pop_back();
  parts.head = std::move(comps);
  return parts;
}

}  // namespace

std::vector<Root> eligible_choices(const RootSet& rs, const VChain& e,
                                   int cutoff) {
  CutParts parts = split_at_cutoff(rs, e, cutoff);
  std::vector<Root> out;
  if (parts.last.size() < 2) return out;
  std::vector<Root> p = proj_set(rs, parts.last);
  if (p.size() % 2 != 0) return out;
  const Root pv_last = rs.pv(parts.last.last());
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (diag_greater(pv_last, p[i])) out.push_back(p[i]);
  return out;
}

NewForm new_form(const RootSet& rs, const VChain& e, int cutoff,
                 std::optional<Root> choice) {
  CutParts parts = split_at_cutoff(rs, e, cutoff);
  if (parts.last.size() < 2) {
    if (choice)
      throw std::invalid_argument(
          "new form: choice supplied but no new form exists");
    return NewForm{};
  }
  ConstructionData cd = construction_data(rs, parts.last, choice);
  if (!cd.defined) return NewForm{};
  std::vector<Root> elems;
  for (const VChain& comp : parts.head) {
    const VChain sp = spnew(rs, comp);
    elems.insert(elems.end(), sp.elements().begin(), sp.elements().end());
  }
  std::vector<Root> mid = build_new_chain(rs, cd);
  elems.insert(elems.end(), mid.begin(), mid.end());
  elems.insert(elems.end(), parts.tail.begin(), parts.tail.end());
  return NewForm{true, VChain::make(rs, std::move(elems))};
}

std::vector<NewForm> all_new_forms(const RootSet& rs, const VChain& e,
                                   int cutoff) {
  std::vector<NewForm> out;
  CutParts parts = split_at_cutoff(rs, e, cutoff);
  if (parts.last.size() < 2) return out;
  if (proj_set(rs, parts.last).size() % 2 != 0) {
    NewForm nf = new_form(rs, e, cutoff);
    if (nf.defined) out.push_back(std::move(nf));
    return out;
  }
  for (const Root& ch : eligible_choices(rs, e, cutoff))
    out.push_back(new_form(rs, e, cutoff, ch));
  return out;
}

AuxSplit aux_split(const RootSet& rs, const VChain& f, const VChain& d,
                   std::optional<Root> choice) {
  if (f.empty()) throw std::invalid_argument("aux_split: empty F");
  std::vector<Root> joined = f.elements();
  joined.insert(joined.end(), d.elements().begin(), d.elements().end());
  const VChain fd = VChain::make(rs, joined);
  if (!fd.all_in_on(rs))
    throw std::invalid_argument("aux_split: chain must lie in ON(v)");
  if (decompose(rs, fd).size() != 1)
    throw std::invalid_argument("aux_split: F > D must be intertwined");
  if (f.size() < 2)
    throw std::invalid_argument("aux_split: new(F) is undefined");
  ConstructionData cd = construction_data(rs, f, choice);
  if (!cd.defined)
    throw std::invalid_argument("aux_split: new(F) is undefined");

  const int top = 2 * cd.s - cd.t;
  const auto in_top = [&](const Root& pt) {
    for (int i = 0; i < top; ++i)
      if (cd.lst[static_cast<size_t>(i)] == pt) return true;
    return false;
  };

  AuxSplit out;
  std::vector<Root> f1, f2;
  for (const Root& a : f.elements()) {
    if (in_top(rs.pv(a)))
      f1.push_back(a);
    else
      f2.push_back(a);
  }
  // F1 must be a prefix of F.
  for (size_t i = 0; i < f1.size(); ++i)
    if (f1[i] != f.elements()[i])
      throw std::logic_error("aux_split: F1 is not a prefix of F");
  std::vector<Root> f2_full = f2;
  f2_full.insert(f2_full.end(), d.elements().begin(), d.elements().end());

  const auto row = [&](int pos) {
    return cd.lst[static_cast<size_t>(pos - 1)].row;
  };
  std::vector<Root> nf1;
  for (int i = 1; 2 * i <= top; ++i)
    nf1.push_back(Root{row(2 * i), rs.star(row(2 * i - 1))});

  // Vertical projections of F2 \ D, as diagonal rows.
  std::vector<int> f2_pv_rows;
  for (const Root& a : f2) f2_pv_rows.push_back(rs.pv(a).row);
  std::vector<Root> s_elems;
  for (int j = cd.s + 1; j <= cd.t; ++j) {
    const int src = cd.s - cd.t + j;  // = 2s-t+i for j = s+i
    const int pv_row = row(src);
    if (std::find(f2_pv_rows.begin(), f2_pv_rows.end(), pv_row) !=
        f2_pv_rows.end())
      s_elems.push_back(Root{row(j), rs.star(pv_row)});
  }
  std::vector<Root> nf2 = s_elems;
  nf2.insert(nf2.end(), d.elements().begin(), d.elements().end());

  out.f1 = VChain::make(rs, std::move(f1));
  out.f2 = VChain::make(rs, std::move(f2_full));
  out.nf1 = VChain::make(rs, std::move(nf1));
  out.nf2 = VChain::make(rs, std::move(nf2));
  return out;
}

}  // namespace otc

#include "otc/io.hpp"

#include <sstream>
#include <stdexcept>

namespace otc {

json index_to_json(const IndexTuple& t) { return json(t.entries()); }

json root_to_json(const Root& a) {
  return {{"row", a.row}, {"col", a.col}};
}

json root_to_json(const Root& a, const RootFlags& f) {
  return {{"row", a.row},
          {"col", a.col},
          {"in_or", f.in_or},
          {"in_n", f.in_n},
          {"in_on", f.in_on},
          {"diagonal", f.diagonal}};
}

json chain_to_json(const VChain& c) {
  json out = json::array();
  for (const Root& a : c.elements()) out.push_back(root_to_json(a));
  return out;
}

json newform_to_json(const NewForm& nf) {
  json out;
  out["defined"] = nf.defined;
  if (nf.defined) out["chain"] = chain_to_json(nf.chain);
  return out;
}

json monomial_to_json(const Monomial& m) { return json(m.exps()); }

json complex_faces_to_json(
    const RootSet& rs, const std::vector<std::vector<std::size_t>>& faces) {
  json out = json::array();
  for (const auto& face : faces) {
    json fj = json::array();
    for (std::size_t v : face) fj.push_back(root_to_json(rs.or_roots()[v]));
    out.push_back(fj);
  }
  return out;
}

std::string patch_entry_text(const PatchEntry& e) {
  switch (e.kind) {
    case PatchEntryKind::zero: return "0";
    case PatchEntryKind::one: return "1";
    case PatchEntryKind::plus_var:
      return "X[" + std::to_string(e.var.row) + "," +
             std::to_string(e.var.col) + "]";
    case PatchEntryKind::minus_var:
      return "-X[" + std::to_string(e.var.row) + "," +
             std::to_string(e.var.col) + "]";
  }
  return "?";
}

json patch_to_json(const PatchMatrix& pm) {
  json rows = json::array();
  for (int r = 1; r <= pm.row_count(); ++r) {
    json row = json::array();
    for (int c : pm.roots().v().entries())
      row.push_back(patch_entry_text(pm.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

bool letters_available(const RootSet& rs) {
  if (rs.dim().d != 5) return false;
  return rs.v().entries() == std::vector<int>{1, 2, 3, 4, 5};
}

std::string var_name(const RootSet& rs, std::size_t var_idx, bool letters) {
  const Root& a = rs.or_roots().at(var_idx);
  if (letters && letters_available(rs)) {
    // Bottom-block aliases: rows 6..9 from the top, larger columns later.
    static const char* names[4] = {"abcd", "efg", "hi", "j"};
    const int r = a.row - 6;
    if (r >= 0 && r < 4 && a.col - 1 < static_cast<int>(4 - r))
      return std::string(1, names[r][a.col - 1]);
  }
  return "X[" + std::to_string(a.row) + "," + std::to_string(a.col) + "]";
}

std::string monomial_text(const Monomial& m, const RootSet& rs, bool letters) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    for (int k = 0; k < m.exp(i); ++k) {
      if (!out.empty()) out += "*";
      out += var_name(rs, i, letters);
    }
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw std::invalid_argument("expected a comma-separated list");
  return out;
}

std::vector<Root> parse_root_list(const std::string& s) {
  std::vector<Root> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    auto pair = parse_int_list(item);
    if (pair.size() != 2)
      throw std::invalid_argument("expected r,c pairs separated by ';'");
    out.push_back(Root{pair[0], pair[1]});
  }
  return out;
}

}  // namespace otc

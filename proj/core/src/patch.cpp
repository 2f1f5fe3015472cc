#include "otc/patch.hpp"

#include <stdexcept>

namespace otc {

PatchEntry patch_entry(const RootSet& rs, int row, int col) {
  if (!rs.dim().in_range(row))
    throw std::invalid_argument("patch_entry: row out of range");
  if (!rs.is_col(col))
    throw std::invalid_argument("patch_entry: column not an entry of v");
  PatchEntry e;
  if (rs.is_col(row)) {
    e.kind = row == col ? PatchEntryKind::one : PatchEntryKind::zero;
    return e;
  }
  const int sc = rs.star(col);
  if (row < sc) {
    e.kind = PatchEntryKind::plus_var;
    e.var = Root{row, col};
  } else if (row == sc) {
    e.kind = PatchEntryKind::zero;
  } else {
    e.kind = PatchEntryKind::minus_var;
    e.var = Root{sc, rs.star(row)};
  }
  return e;
}

PatchEntry PatchMatrix::at(int row, int col) const {
  return patch_entry(rs_, row, col);
}

IsotropicIndex special_case_w(Dim dim, int r) {
  if (r < 1 || 2 * r - 1 > dim.d)
    throw std::invalid_argument("special_case_w: need 1 <= r and 2r-1 <= d");
  std::vector<int> e;
  for (int k = 2 * r - 1; k <= dim.d; ++k) e.push_back(k);
  for (int k = 2 * dim.d - 2 * r + 3; k <= 2 * dim.d; ++k) e.push_back(k);
  return IsotropicIndex(dim, std::move(e));
}

}  // namespace otc

#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "otc/poly.hpp"

namespace otc {

// Ring context over polynomials, so the Pfaffian expansion (which is
// division-free) can run with either scalar or symbolic entries.
template <class F>
struct PolyRing {
  const F& coef;
  std::size_t nvars;

  using Elem = Poly<F>;

  Elem zero() const { return Poly<F>::zero(nvars); }
  Elem one() const { return Poly<F>::constant(coef, nvars, coef.one()); }
  Elem from_int(long long v) const {
    return Poly<F>::constant(coef, nvars, coef.from_int(v));
  }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  Elem neg(const Elem& a) const { return a.negated(coef); }
  Elem add(const Elem& a, const Elem& b) const { return a.plus(coef, b); }
  Elem sub(const Elem& a, const Elem& b) const { return a.minus(coef, b); }
  Elem mul(const Elem& a, const Elem& b) const { return a.times(coef, b); }
  bool eq(const Elem& a, const Elem& b) const { return a.equals(coef, b); }
};

// 2n x 2n matrix skew-symmetric along the anti-diagonal:
// a[i][j] = -a[star(j)][star(i)] with star(k) = 2n+1-k.  Entries over any
// ring.  Indices in the public interface are 1-based.
template <class R>
class AntiSkewMatrix {
 public:
  using K = typename R::Elem;

  static AntiSkewMatrix from_rows(const R& ring,
                                  std::vector<std::vector<K>> rows) {
    const std::size_t size = rows.size();
    if (size % 2 != 0)
      throw std::invalid_argument("AntiSkewMatrix: size must be even");
    for (const auto& r : rows)
      if (r.size() != size)
        throw std::invalid_argument("AntiSkewMatrix: matrix must be square");
    AntiSkewMatrix m;
    m.n_ = static_cast<int>(size / 2);
    m.a_.reserve(size * size);
    for (auto& r : rows)
      for (K& e : r) m.a_.push_back(std::move(e));
    const int tn = 2 * m.n_;
    for (int i = 1; i <= tn; ++i)
      for (int j = 1; j <= tn; ++j) {
        const K& lhs = m.at(i, j);
        K rhs = ring.neg(m.at(tn + 1 - j, tn + 1 - i));
        if (!ring.eq(lhs, rhs))
          throw std::invalid_argument(
              "AntiSkewMatrix: a[i][j] = -a[j*][i*] violated");
      }
    return m;
  }

  // Build from independent entries strictly above the anti-diagonal
  // (positions with i + j < 2n+1); the rest is forced.
  template <class Gen>
  static AntiSkewMatrix from_upper(const R& ring, int n, Gen gen) {
    const int tn = 2 * n;
    std::vector<std::vector<K>> rows(
        static_cast<std::size_t>(tn),
        std::vector<K>(static_cast<std::size_t>(tn), ring.zero()));
    for (int i = 1; i <= tn; ++i)
      for (int j = 1; j <= tn; ++j) {
        if (i + j < tn + 1) {
          K v = gen(i, j);
          rows[i - 1][j - 1] = v;
          rows[tn - j][tn - i] = ring.neg(v);
        }
      }
    return from_rows(ring, std::move(rows));
  }

  int half() const { return n_; }
  int size() const { return 2 * n_; }

  const K& at(int i, int j) const {  // 1-based
    return a_[static_cast<std::size_t>(i - 1) * (2 * n_) + (j - 1)];
  }

 private:
  AntiSkewMatrix() = default;
  int n_ = 0;
  std::vector<K> a_;
};

// (2n-1)(2n-3)...3.1, the number of terms in a generic Pfaffian; 1 for n=0.
unsigned long long pfaffian_term_count(int n);

namespace pf_detail {

// Laplace-like expansion over the surviving row set.  `rows` holds the
// global row indices still present (the surviving columns are forced to be
// their stars); `entry(r, c)` yields the matrix entry at global position
// (r, c); star(k) = star_base - k.
template <class R, class EntryFn>
class Expander {
 public:
  using K = typename R::Elem;

  Expander(const R& ring, std::vector<int> rows, int star_base, EntryFn entry)
      : ring_(ring),
        rows_(std::move(rows)),
        star_base_(star_base),
        entry_(entry) {
    if (rows_.size() > 63)
      throw std::invalid_argument("pfaffian: matrix too large");
  }

  // top_pos: position (0-based, within `rows`) of the expansion row for the
  // outermost step; -1 selects the first row.  Inner steps always expand
  // along the first surviving row and are memoized on the surviving set.
  K run(std::uint64_t mask, int top_pos) {
    int count = __builtin_popcountll(mask);
    if (count == 0) return ring_.one();
    if (top_pos < 0) {
      auto it = memo_.find(mask);
      if (it != memo_.end()) return it->second;
    }
    std::vector<int> pos;
    pos.reserve(static_cast<std::size_t>(count));
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (mask & (1ull << i)) pos.push_back(static_cast<int>(i));
    int m_local = 0;  // 0-based position of the expansion row within pos
    if (top_pos >= 0) {
      for (std::size_t i = 0; i < pos.size(); ++i)
        if (pos[i] == top_pos) m_local = static_cast<int>(i);
    }
    K acc = ring_.zero();
    for (int j_local = 0; j_local < count; ++j_local) {
      if (j_local == m_local) continue;
      const int gr = rows_[static_cast<std::size_t>(pos[m_local])];
      const int gc = star_base_ - rows_[static_cast<std::size_t>(pos[j_local])];
      K e = entry_(gr, gc);
      if (ring_.is_zero(e)) continue;
      // (-1)^{m+j*} sign(mj) with local 1-based m, j and j* = 2k+1-j
      // simplifies to (-1)^{m+j+1} sign(j-m).
      const int m1 = m_local + 1, j1 = j_local + 1;
      bool negative = ((m1 + j1 + 1) % 2 != 0) != (j1 < m1);
      std::uint64_t sub = mask & ~(1ull << pos[m_local]) &
                          ~(1ull << pos[j_local]);
      K term = ring_.mul(e, run(sub, -1));
      acc = negative ? ring_.sub(acc, term) : ring_.add(acc, term);
    }
    if (top_pos < 0) memo_.emplace(mask, acc);
    return acc;
  }

 private:
  const R& ring_;
  std::vector<int> rows_;
  int star_base_;
  EntryFn entry_;
  std::unordered_map<std::uint64_t, K> memo_;
};

}  // namespace pf_detail

// Pfaffian of the anti-skew submatrix with the given global rows (columns
// are their stars).  expansion_row, when positive, must be one of the rows
// and selects the row of the outermost expansion; the result does not
// depend on it.
template <class R, class EntryFn>
typename R::Elem pfaffian_expand(const R& ring, std::vector<int> rows,
                                 int star_base, EntryFn entry,
                                 int expansion_row = 0) {
  if (rows.size() % 2 != 0)
    throw std::invalid_argument("pfaffian: odd number of rows");
  int top_pos = -1;
  if (expansion_row > 0) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i] == expansion_row) top_pos = static_cast<int>(i);
    if (top_pos < 0)
      throw std::invalid_argument("pfaffian: expansion row not present");
  }
  pf_detail::Expander<R, EntryFn> ex(ring, rows, star_base, entry);
  std::uint64_t full =
      rows.empty() ? 0 : (~0ull >> (64 - rows.size()));
  return ex.run(full, top_pos);
}

// Pfaffian of a full anti-skew matrix; expansion_row in [1, 2n] or 0 for
// the default (row 1).
template <class R>
typename R::Elem pfaffian(const R& ring, const AntiSkewMatrix<R>& a,
                          int expansion_row = 0) {
  if (expansion_row < 0 || expansion_row > a.size())
    throw std::invalid_argument("pfaffian: expansion row out of range");
  std::vector<int> rows(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) rows[static_cast<std::size_t>(i)] = i + 1;
  return pfaffian_expand(
      ring, std::move(rows), a.size() + 1,
      [&](int r, int c) -> typename R::Elem { return a.at(r, c); },
      expansion_row);
}

// Determinant over a field by fraction-producing Gaussian elimination;
// destructive on the local copy.
template <class F>
typename F::Elem determinant(const F& f,
                             std::vector<std::vector<typename F::Elem>> m) {
  const std::size_t n = m.size();
  for (const auto& r : m)
    if (r.size() != n)
      throw std::invalid_argument("determinant: matrix must be square");
  typename F::Elem det = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && f.is_zero(m[piv][col])) ++piv;
    if (piv == n) return f.zero();
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = f.neg(det);
    }
    det = f.mul(det, m[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (f.is_zero(m[r][col])) continue;
      auto factor = f.div(m[r][col], m[col][col]);
      for (std::size_t c = col; c < n; ++c)
        m[r][c] = f.sub(m[r][c], f.mul(factor, m[col][c]));
    }
  }
  return det;
}

// det(A) = (-1)^n Pf(A)^2.
template <class F>
bool verify_det_identity(const F& f, const AntiSkewMatrix<F>& a) {
  std::vector<std::vector<typename F::Elem>> m(
      static_cast<std::size_t>(a.size()));
  for (int i = 1; i <= a.size(); ++i)
    for (int j = 1; j <= a.size(); ++j)
      m[static_cast<std::size_t>(i - 1)].push_back(a.at(i, j));
  auto det = determinant(f, std::move(m));
  auto pf = pfaffian(f, a);
  auto rhs = f.mul(pf, pf);
  if (a.half() % 2 != 0) rhs = f.neg(rhs);
  return f.eq(det, rhs);
}

// D_{aj,k*a*} = (-1)^{n-1} Q_{aj,j*a*} Q_{ak,k*a*} for a != j, a != k
// (j = k reduces to the determinant identity one size down).
template <class F>
bool verify_minor_identity(const F& f, const AntiSkewMatrix<F>& mat, int a,
                           int j, int k) {
  const int tn = mat.size();
  if (a < 1 || a > tn || j < 1 || j > tn || k < 1 || k > tn)
    throw std::invalid_argument("verify_minor_identity: index out of range");
  if (a == j || a == k)
    throw std::invalid_argument("verify_minor_identity: requires a != j, k");
  const auto st = [&](int x) { return tn + 1 - x; };

  // Left side: determinant of the submatrix without rows {a, j} and
  // columns {k*, a*}.
  std::vector<std::vector<typename F::Elem>> m;
  for (int r = 1; r <= tn; ++r) {
    if (r == a || r == j) continue;
    std::vector<typename F::Elem> row;
    for (int c = 1; c <= tn; ++c) {
      if (c == st(k) || c == st(a)) continue;
      row.push_back(mat.at(r, c));
    }
    m.push_back(std::move(row));
  }
  auto lhs = determinant(f, std::move(m));

  const auto pf_without = [&](int r1, int r2) {
    std::vector<int> rows;
    for (int r = 1; r <= tn; ++r)
      if (r != r1 && r != r2) rows.push_back(r);
    return pfaffian_expand(
        f, std::move(rows), tn + 1,
        [&](int r, int c) -> typename F::Elem { return mat.at(r, c); });
  };
  auto rhs = f.mul(pf_without(a, j), pf_without(a, k));
  if ((mat.half() - 1) % 2 != 0) rhs = f.neg(rhs);
  return f.eq(lhs, rhs);
}

}  // namespace otc

#include "otc/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace otc {

Monomial::Monomial(std::vector<std::uint16_t> exps) : exps_(std::move(exps)) {
  deg_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial& Monomial::bump(std::size_t i, int by) {
  exps_.at(i) = static_cast<std::uint16_t>(exps_.at(i) + by);
  deg_ += by;
  return *this;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    out.exps_[i] = static_cast<std::uint16_t>(out.exps_[i] + o.exps_[i]);
  out.deg_ = deg_ + o.deg_;
  return out;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (o.exps_[i] > exps_[i])
      throw std::invalid_argument("Monomial: not divisible");
    out.exps_[i] = static_cast<std::uint16_t>(exps_[i] - o.exps_[i]);
  }
  out.deg_ = deg_ - o.deg_;
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  out.deg_ = 0;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    out.deg_ += out.exps_[i];
  }
  return out;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps_.size(); ++i)
    if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
  return true;
}

bool Monomial::squarefree() const {
  for (std::uint16_t e : exps_)
    if (e > 1) return false;
  return true;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) out.push_back(i);
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (deg_ != o.deg_) return deg_ <=> o.deg_;
  return std::lexicographical_compare_three_way(
      exps_.begin(), exps_.end(), o.exps_.begin(), o.exps_.end());
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree == 0) {
    out.emplace_back(nvars);
    return out;
  }
  if (nvars == 0) return out;
  Monomial cur(nvars);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      cur.bump(i, left);
      out.push_back(cur);
      cur.bump(i, -left);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur.bump(i, e);
      self(self, i + 1, left - e);
      cur.bump(i, -e);
    }
  };
  rec(rec, 0, degree);
  return out;
}

}  // namespace otc

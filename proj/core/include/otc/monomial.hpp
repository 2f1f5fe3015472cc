#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace otc {

// Exponent vector over a fixed variable listing (for the root-indexed rings
// the listing is RootSet::or_roots()).  Exponents are small non-negative
// integers.
class Monomial {
 public:
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::vector<std::uint16_t> exps);

  std::size_t nvars() const { return exps_.size(); }
  int degree() const { return deg_; }
  std::uint16_t exp(std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint16_t>& exps() const { return exps_; }
  bool is_one() const { return deg_ == 0; }

  Monomial& bump(std::size_t i, int by = 1);

  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const;  // this | o
  Monomial divided_by(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  bool squarefree() const;
  // Indices of variables with positive exponent.
  std::vector<std::size_t> support() const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  // Fixed storage comparison (degree, then lex on exponents); unrelated to
  // the term orders, used only for canonical container ordering.
  std::strong_ordering operator<=>(const Monomial& o) const;

 private:
  std::vector<std::uint16_t> exps_;
  int deg_ = 0;
};

// All monomials in nvars variables of the given degree, in the canonical
// storage order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

}  // namespace otc

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace otc {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Field contexts.  Polynomial code is templated on the context type and
// threads a const reference through every operation, so a prime modulus
// chosen at run time needs no global state.

struct RatField {
  using Elem = BigRat;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long v) const { return Elem(v); }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem neg(const Elem& a) const { return -a; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div(const Elem& a, const Elem& b) const {
    if (b == 0) throw std::domain_error("RatField: division by zero");
    return a / b;
  }
  Elem inv(const Elem& a) const { return div(one(), a); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string to_string(const Elem& a) const { return a.str(); }
  std::string name() const { return "rat"; }
};

bool is_odd_prime(std::uint64_t p);

// F_p for an odd prime p < 2^31, chosen at run time.
struct PrimeField {
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t p_) : p(p_) {
    if (!is_odd_prime(p))
      throw std::invalid_argument(
          "PrimeField: modulus must be an odd prime (characteristic 2 is "
          "rejected)");
    if (p >= (1ull << 31))
      throw std::invalid_argument("PrimeField: modulus must be < 2^31");
  }

  std::uint64_t p;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const {
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<Elem>(m);
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem neg(const Elem& a) const { return a == 0 ? 0 : p - a; }
  Elem add(const Elem& a, const Elem& b) const {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    return a >= b ? a - b : a + p - b;
  }
  Elem mul(const Elem& a, const Elem& b) const { return (a * b) % p; }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string to_string(const Elem& a) const { return std::to_string(a); }
  std::string name() const { return "fp:" + std::to_string(p); }
};

}  // namespace otc

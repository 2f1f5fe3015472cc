#include "otc/field.hpp"

namespace otc {

bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t q = 3; q * q <= p; q += 2)
    if (p % q == 0) return false;
  return true;
}

PrimeField::Elem PrimeField::inv(const Elem& a) const {
  if (a == 0) throw std::domain_error("PrimeField: division by zero");
  // Extended Euclid on (a, p).
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(p), new_r = static_cast<long long>(a);
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<Elem>(t);
}

}  // namespace otc

#include "otc/antiskew.hpp"

namespace otc {

unsigned long long pfaffian_term_count(int n) {
  if (n < 0) throw std::invalid_argument("pfaffian_term_count: n < 0");
  unsigned long long out = 1;
  for (int k = 2 * n - 1; k >= 1; k -= 2) out *= static_cast<unsigned>(k);
  return out;
}

}  // namespace otc

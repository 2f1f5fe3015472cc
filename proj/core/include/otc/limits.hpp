#pragma once

#include <cstddef>
#include <stdexcept>

namespace otc {

// Caps on Groebner-engine growth.  Exceeding a cap aborts the computation
// with ResourceLimitError, which callers report distinctly from mathematical
// failures (the CLI maps it to exit code 3).
struct GBLimits {
  std::size_t max_basis = 5000;
  std::size_t max_terms = 500000;
  int max_degree = 0;  // 0 = no cap
};

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace otc

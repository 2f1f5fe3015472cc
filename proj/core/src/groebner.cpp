#include "otc/groebner.hpp"

namespace otc {

bool monomial_ideal_member(const std::vector<Monomial>& gens,
                           const Monomial& m) {
  for (const Monomial& g : gens)
    if (g.divides(m)) return true;
  return false;
}

std::vector<Monomial> standard_monomials(const std::vector<Monomial>& gens,
                                         int degree, std::size_t nvars) {
  std::vector<Monomial> out;
  for (const Monomial& m : monomials_of_degree(nvars, degree))
    if (!monomial_ideal_member(gens, m)) out.push_back(m);
  return out;
}

long hilbert_function(const std::vector<Monomial>& initial_gens, int degree,
                      std::size_t nvars) {
  return static_cast<long>(
      standard_monomials(initial_gens, degree, nvars).size());
}

}  // namespace otc

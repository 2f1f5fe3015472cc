#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "otc/monomial.hpp"

namespace otc {

// Sparse multivariate polynomial over the field context F, stored with terms
// strictly descending in the canonical monomial order and no zero
// coefficients.  Term orders enter only when leading terms are taken.
template <class F>
class Poly {
 public:
  using K = typename F::Elem;

  struct Term {
    Monomial mono;
    K coef;
  };

  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly zero(std::size_t nvars) { return Poly(nvars); }

  static Poly constant(const F& f, std::size_t nvars, K c) {
    Poly p(nvars);
    if (!f.is_zero(c)) p.terms_.push_back({Monomial(nvars), std::move(c)});
    return p;
  }

  static Poly monomial(const F& f, Monomial m, K c) {
    Poly p(m.nvars());
    if (!f.is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  // Merges duplicate monomials and drops zeros.
  static Poly from_terms(const F& f, std::size_t nvars,
                         std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.mono > b.mono; });
    Poly p(nvars);
    for (Term& t : terms) {
      if (t.mono.nvars() != nvars)
        throw std::invalid_argument("Poly: mismatched variable count");
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coef = f.add(p.terms_.back().coef, t.coef);
        if (f.is_zero(p.terms_.back().coef)) p.terms_.pop_back();
      } else if (!f.is_zero(t.coef)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  int degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  bool homogeneous() const {
    for (const Term& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }

  Poly negated(const F& f) const {
    Poly p = *this;
    for (Term& t : p.terms_) t.coef = f.neg(t.coef);
    return p;
  }

  Poly plus(const F& f, const Poly& o) const {
    std::vector<Term> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return from_terms(f, nvars_, std::move(all));
  }

  Poly minus(const F& f, const Poly& o) const {
    return plus(f, o.negated(f));
  }

  Poly times_term(const F& f, const Monomial& m, const K& c) const {
    Poly p(nvars_);
    if (f.is_zero(c)) return p;
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_)
      p.terms_.push_back({t.mono.times(m), f.mul(t.coef, c)});
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) { return a.mono > b.mono; });
    return p;
  }

  Poly times(const F& f, const Poly& o) const {
    std::vector<Term> all;
    all.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
      for (const Term& b : o.terms_)
        all.push_back({a.mono.times(b.mono), f.mul(a.coef, b.coef)});
    return from_terms(f, nvars_, std::move(all));
  }

  Poly scaled(const F& f, const K& c) const {
    Poly p(nvars_);
    if (f.is_zero(c)) return p;
    p.terms_ = terms_;
    for (Term& t : p.terms_) t.coef = f.mul(t.coef, c);
    return p;
  }

  bool equals(const F& f, const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].mono == o.terms_[i].mono) ||
          !f.eq(terms_[i].coef, o.terms_[i].coef))
        return false;
    return true;
  }

 private:
  std::size_t nvars_;
  std::vector<Term> terms_;
};

}  // namespace otc

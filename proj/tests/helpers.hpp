#pragma once

#include <initializer_list>
#include <random>

#include "ffzeta/ratfun.hpp"

namespace ffzeta::testing {

inline Polynomial poly(const FieldPtr& f, std::initializer_list<unsigned> codes) {
  std::vector<FieldElement> c;
  for (auto x : codes) c.push_back(FieldElement{static_cast<std::uint8_t>(x)});
  return Polynomial(f, std::move(c));
}

inline Polynomial t_poly(const FieldPtr& f) { return Polynomial::monomial(f, Field::one(), 1); }

inline Polynomial random_poly(const FieldPtr& f, std::mt19937_64& rng, std::size_t max_deg) {
  std::uniform_int_distribution<unsigned> coef(0, f->q() - 1);
  std::uniform_int_distribution<std::size_t> len(0, max_deg + 1);
  std::vector<FieldElement> c(len(rng));
  for (auto& x : c) x = FieldElement{static_cast<std::uint8_t>(coef(rng))};
  return Polynomial(f, std::move(c));
}

inline Polynomial random_nonzero_poly(const FieldPtr& f, std::mt19937_64& rng, std::size_t max_deg) {
  for (;;) {
    Polynomial p = random_poly(f, rng, max_deg);
    if (!p.is_zero()) return p;
  }
}

inline RationalFunction random_ratfun(const FieldPtr& f, std::mt19937_64& rng, std::size_t max_deg) {
  return RationalFunction(random_poly(f, rng, max_deg), random_nonzero_poly(f, rng, max_deg));
}

}  // namespace ffzeta::testing

#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "ffzeta/gf.hpp"
#include "ffzeta/powersum.hpp"

namespace ffzeta {

/// Multi-index (s_1,...,s_n) of a power sum S_d(s_1,...,s_n).
using Index = std::vector<std::int64_t>;

struct Term {
  std::uint32_t coef = 0;  // in [1, p)
  Index index;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Formal F_p-linear combination of S_d(index) with the degree d left free.
/// Coefficients live in [1, p); indices are pairwise distinct. Terms keep
/// insertion order, which is how they print.
class TermList {
 public:
  explicit TermList(PrimePower pp) : pp_(pp) {}

  /// Adds coef (any integer, reduced mod p) to the term for `index`, dropping
  /// it if the coefficient becomes zero.
  void add(std::int64_t coef, Index index);

  const PrimePower& prime_power() const noexcept { return pp_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Term order is ignored.
  friend bool operator==(const TermList& a, const TermList& b);

 private:
  PrimePower pp_;
  std::vector<Term> terms_;
};

/// `S_d(2,11) - S_d(3,10) + 2*S_d(...)`, with `0` for the empty list.
/// Coefficient p-1 prints as a minus sign when p > 2.
std::string format(const TermList& tl, const std::string& degree = "d");

/// Right-hand side of Chen's formula for Delta_d(r, s):
///   sum over i + j = r + s, (q-1) | j, i, j >= 1 of
///   {(-1)^{s-1} C(j-1, s-1) + (-1)^{r-1} C(j-1, r-1)} S_d(i, j)
/// with every coefficient reduced mod p. Terms are listed by decreasing j.
TermList chen_terms(const PrimePower& pp, std::int64_t r, std::int64_t s);

/// sum of coef * S_d(index) in F_q(t).
RationalFunction eval_terms(MemoCache& cache, const TermList& tl, std::int64_t d);

struct ChenReport {
  PrimePower pp;
  std::int64_t r = 0, s = 0, d = 0;
  TermList terms;
  RationalFunction lhs, rhs, difference;
  bool holds = false;
  std::chrono::nanoseconds elapsed{};
};

/// Compares Delta_d(r, s) against the evaluated Chen terms.
ChenReport verify_chen(MemoCache& cache, std::int64_t r, std::int64_t s, std::int64_t d);

}  // namespace ffzeta

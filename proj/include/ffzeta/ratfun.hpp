#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "ffzeta/poly.hpp"

namespace ffzeta {

/// Reduced fraction num/den in F_q(t) with den monic. Zero is 0/1, so equal
/// values always have identical representations.
class RationalFunction {
 public:
  explicit RationalFunction(FieldPtr field);
  explicit RationalFunction(Polynomial num);
  /// Reduces the fraction; throws std::domain_error on a zero denominator.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction one(FieldPtr field) { return RationalFunction(Polynomial::one(std::move(field))); }

  const FieldPtr& field() const noexcept { return num_.field(); }
  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  /// Audit hook: den monic and nonzero, gcd(num, den) = 1, zero stored as 0/1.
  bool is_canonical() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  RationalFunction scaled(FieldElement c) const;
  RationalFunction inverse() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Reduced {};
  RationalFunction(Reduced, Polynomial num, Polynomial den)
      : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

/// Negative exponents invert first; 0^e for e < 0 throws std::domain_error.
RationalFunction pow(const RationalFunction& a, std::int64_t e);

/// Exact sum by pairwise merging over a balanced binary tree. The empty sum
/// is zero in `field`.
RationalFunction balanced_sum(const FieldPtr& field, std::span<const RationalFunction> xs);

/// Numerator n with a = n / target_den. Throws std::domain_error unless
/// a.den() divides target_den.
Polynomial rescale_to_denominator(const RationalFunction& a, const Polynomial& target_den);

/// `num / den`; multi-term parts are parenthesized.
std::string format(const RationalFunction& a);

}  // namespace ffzeta

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ffzeta/gf.hpp"

namespace ffzeta {

inline constexpr std::uint64_t kDefaultEnumCap = 1'000'000;

/// Raised when q^d monic polynomials would exceed the enumeration cap.
class EnumerationCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense polynomial in t over F_q, lowest coefficient first, no trailing
/// zeros. The zero polynomial has no coefficients and no numeric degree.
class Polynomial {
 public:
  explicit Polynomial(FieldPtr field) : field_(std::move(field)) {}
  Polynomial(FieldPtr field, std::vector<FieldElement> coeffs);

  static Polynomial constant(FieldPtr field, FieldElement c);
  static Polynomial one(FieldPtr field) { return constant(std::move(field), Field::one()); }
  /// c * t^k
  static Polynomial monomial(FieldPtr field, FieldElement c, std::size_t k);
  /// t + c
  static Polynomial linear(FieldPtr field, FieldElement c);

  const FieldPtr& field() const noexcept { return field_; }
  std::span<const FieldElement> coeffs() const noexcept { return coeffs_; }

  std::optional<std::size_t> degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == Field::one(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == Field::one(); }
  /// Zero for the zero polynomial.
  FieldElement leading() const noexcept {
    return coeffs_.empty() ? Field::zero() : coeffs_.back();
  }
  FieldElement coeff(std::size_t k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : Field::zero();
  }
  FieldElement eval(FieldElement x) const noexcept;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& b);
  Polynomial& operator-=(const Polynomial& b);
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(FieldElement c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize() noexcept;

  FieldPtr field_;
  std::vector<FieldElement> coeffs_;
};

/// a = quotient * b + remainder with deg(remainder) < deg(b).
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);

/// Quotient of a division known to be exact; throws std::domain_error otherwise.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

/// Monic gcd. gcd(0, 0) throws.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

Polynomial pow(const Polynomial& a, std::uint64_t e);
Polynomial make_monic(const Polynomial& a);

/// The q^d monic polynomials of degree d. Lower coefficients count in
/// all_elements() order with the constant term varying fastest.
std::vector<Polynomial> monic_polys(const FieldPtr& field, std::size_t d,
                                    std::uint64_t cap = kDefaultEnumCap);

/// `c_k*t^k + ... + c_0`; unit coefficients and exponents are elided.
std::string format(const Polynomial& a);

}  // namespace ffzeta

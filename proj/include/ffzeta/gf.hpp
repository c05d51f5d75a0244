#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffzeta {

/// Raised for invalid field parameters and for inverting zero.
class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint32_t kMaxFieldSize = 256;

bool is_prime(std::uint64_t n);

/// q = p^l with p prime; q is capped at kMaxFieldSize.
struct PrimePower {
  std::uint32_t p = 2;
  std::uint32_t l = 1;
  std::uint32_t q = 2;

  static PrimePower make(std::uint64_t p, std::uint64_t l);

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// An element of F_q. `code` is the digit tuple read as a base-p integer,
/// lowest digit first, so codes 0..q-1 enumerate the field in counting order.
struct FieldElement {
  std::uint8_t code = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// Monic irreducibility test over the prime field F_p. `f` is lowest-first.
bool is_irreducible_mod_p(std::span<const std::uint32_t> f, std::uint32_t p);

/// All monic irreducible polynomials of degree l over F_p, in the order used
/// to pick the default modulus (coefficient tuple (c_0,...,c_{l-1}) compared
/// lexicographically).
std::vector<std::vector<std::uint32_t>> monic_irreducibles(std::uint32_t p, std::uint32_t l);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// F_q = F_p[x]/(modulus) in the power basis. Immutable once built; all
/// arithmetic goes through precomputed q*q tables.
class Field {
 public:
  /// Without a modulus the lexicographically smallest monic irreducible of
  /// degree l is used.
  static FieldPtr make(std::uint64_t p, std::uint64_t l,
                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  const PrimePower& prime_power() const noexcept { return pp_; }
  std::uint32_t p() const noexcept { return pp_.p; }
  std::uint32_t l() const noexcept { return pp_.l; }
  std::uint32_t q() const noexcept { return pp_.q; }
  bool is_prime_field() const noexcept { return pp_.l == 1; }

  /// l+1 digits, lowest first, leading digit 1.
  std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }

  static constexpr FieldElement zero() noexcept { return {0}; }
  static constexpr FieldElement one() noexcept { return {1}; }

  FieldElement add(FieldElement a, FieldElement b) const noexcept {
    return {add_[idx(a, b)]};
  }
  FieldElement sub(FieldElement a, FieldElement b) const noexcept {
    return {add_[idx(a, FieldElement{neg_[b.code]})]};
  }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    return {mul_[idx(a, b)]};
  }
  FieldElement neg(FieldElement a) const noexcept { return {neg_[a.code]}; }
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const noexcept;

  /// (c mod p) * 1.
  FieldElement embed_int(std::int64_t c) const noexcept;

  FieldElement from_digits(std::span<const std::uint32_t> digits) const;
  std::vector<std::uint32_t> digits(FieldElement a) const;

  std::vector<FieldElement> all_elements() const;

  /// Single digit for prime fields, `[d0,d1,...]` otherwise.
  std::string format(FieldElement a) const;
  std::string format_modulus() const;

  // Raw table access for the polynomial kernels.
  const std::uint8_t* add_table() const noexcept { return add_.data(); }
  const std::uint8_t* mul_table() const noexcept { return mul_.data(); }
  const std::uint8_t* neg_table() const noexcept { return neg_.data(); }

 private:
  Field(PrimePower pp, std::vector<std::uint32_t> modulus);

  std::size_t idx(FieldElement a, FieldElement b) const noexcept {
    return static_cast<std::size_t>(a.code) * pp_.q + b.code;
  }

  PrimePower pp_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> inv_;
};

}  // namespace ffzeta

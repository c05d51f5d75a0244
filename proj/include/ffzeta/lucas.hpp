#pragma once

#include <cstdint>
#include <vector>

namespace ffzeta {

/// Base-p digits, lowest first, no trailing zeros (0 has no digits).
struct DigitExpansion {
  std::uint64_t base = 2;
  std::vector<std::uint64_t> digits;

  friend bool operator==(const DigitExpansion&, const DigitExpansion&) = default;
};

DigitExpansion p_adic_digits(std::uint64_t m, std::uint64_t p);

/// C(m, n) mod p by Lucas's theorem. C(m, n) = 0 whenever n > m.
std::uint64_t binom_mod_p(std::uint64_t m, std::uint64_t n, std::uint64_t p);

inline constexpr std::uint64_t kBinomOracleMax = 400;

/// Pascal's triangle carried out mod p; m <= kBinomOracleMax.
std::uint64_t binom_oracle(std::uint64_t m, std::uint64_t n, std::uint64_t p);

}  // namespace ffzeta

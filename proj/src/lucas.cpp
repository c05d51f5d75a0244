#include "ffzeta/lucas.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace ffzeta {

namespace {

void require_base(std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("base must be at least 2");
}

// C(m, n) mod p for digits m, n < p. Every k < p is a unit, so the
// multiplicative formula can be divided out term by term.
std::uint64_t small_binom(std::uint64_t m, std::uint64_t n, std::uint64_t p) {
  if (n > m) return 0;
  if (n > m - n) n = m - n;
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    num = num * ((m + 1 - i) % p) % p;
    den = den * (i % p) % p;
  }
  std::uint64_t inv = 1, base = den;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
  }
  return num * inv % p;
}

}  // namespace

DigitExpansion p_adic_digits(std::uint64_t m, std::uint64_t p) {
  require_base(p);
  DigitExpansion out{p, {}};
  for (; m > 0; m /= p) out.digits.push_back(m % p);
  return out;
}

std::uint64_t binom_mod_p(std::uint64_t m, std::uint64_t n, std::uint64_t p) {
  require_base(p);
  if (n > m) return 0;
  std::uint64_t result = 1 % p;
  while (n > 0 || m > 0) {
    const std::uint64_t mi = m % p, ni = n % p;
    if (ni > mi) return 0;
    result = result * small_binom(mi, ni, p) % p;
    m /= p;
    n /= p;
  }
  return result;
}

std::uint64_t binom_oracle(std::uint64_t m, std::uint64_t n, std::uint64_t p) {
  require_base(p);
  if (m > kBinomOracleMax) {
    throw std::out_of_range("binom_oracle supports m <= " + std::to_string(kBinomOracleMax));
  }
  if (n > m) return 0;
  // Full triangle up to kBinomOracleMax, built once per p.
  using Triangle = std::vector<std::vector<std::uint64_t>>;
  static std::mutex mutex;
  static std::map<std::uint64_t, std::shared_ptr<const Triangle>> tables;
  std::shared_ptr<const Triangle> table;
  {
    std::lock_guard lock(mutex);
    auto& slot = tables[p];
    if (!slot) {
      auto rows = std::make_shared<Triangle>();
      rows->push_back({1 % p});
      for (std::uint64_t i = 1; i <= kBinomOracleMax; ++i) {
        const auto& row = rows->back();
        std::vector<std::uint64_t> next(i + 1);
        next[0] = next[i] = 1 % p;
        for (std::uint64_t k = 1; k < i; ++k) next[k] = (row[k - 1] + row[k]) % p;
        rows->push_back(std::move(next));
      }
      slot = std::move(rows);
    }
    table = slot;
  }
  return (*table)[m][n];
}

}  // namespace ffzeta

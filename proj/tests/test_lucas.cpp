#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ffzeta/lucas.hpp"

using namespace ffzeta;

TEST_CASE("p_adic_digits") {
  CHECK(p_adic_digits(0, 3).digits.empty());
  CHECK(p_adic_digits(17, 3).digits == std::vector<std::uint64_t>{2, 2, 1});
  for (unsigned n = 1; n <= 12; ++n) {
    CHECK(p_adic_digits((1u << n) - 1, 2).digits == std::vector<std::uint64_t>(n, 1));
  }
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::uint64_t m = 0; m < 500; ++m) {
      const auto e = p_adic_digits(m, p);
      CHECK(e.base == p);
      std::uint64_t value = 0, scale = 1;
      for (auto digit : e.digits) {
        CHECK(digit < p);
        value += digit * scale;
        scale *= p;
      }
      CHECK(value == m);
      if (!e.digits.empty()) CHECK(e.digits.back() != 0);
    }
  }
}

TEST_CASE("binom_mod_p examples") {
  for (std::uint64_t m : {0, 1, 7, 100}) CHECK(binom_mod_p(m, 0, 5) == 1);
  CHECK(binom_mod_p(17, 8, 3) == 1);
  CHECK(binom_mod_p(15, 7, 2) == 1);
  CHECK(binom_mod_p(4, 5, 2) == 0);
  CHECK(binom_mod_p(4, 2, 2) == 0);
}

TEST_CASE("binom_oracle examples") {
  CHECK(binom_oracle(5, 2, 3) == 1);
  for (std::uint64_t n = 0; n <= 30; ++n) {
    CHECK(binom_oracle(n, n, 7) == 1);
    CHECK(binom_oracle(n, n + 1, 7) == 0);
  }
  CHECK_THROWS_AS(binom_oracle(401, 3, 2), std::out_of_range);
}

TEST_CASE("Lucas agrees with Pascal's triangle for m <= 400") {
  for (std::uint64_t p : {2, 3, 5}) {
    for (std::uint64_t m = 0; m <= kBinomOracleMax; ++m) {
      for (std::uint64_t n = 0; n <= m + 1; ++n) {
        if (binom_mod_p(m, n, p) != binom_oracle(m, n, p)) FAIL("mismatch at m=" << m << " n=" << n << " p=" << p);
      }
    }
  }
}

TEST_CASE("symmetry and Vandermonde") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::uint64_t m = 0; m <= 200; ++m) {
      for (std::uint64_t n = 0; n <= m; ++n) CHECK(binom_mod_p(m, n, p) == binom_mod_p(m, m - n, p));
    }
  }
  // C(a+b, k) = sum_i C(a, i) C(b, k-i)
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::uint64_t> small(0, 190);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t a = small(rng), b = small(rng), k = small(rng);
    for (std::uint64_t p : {2, 3, 5}) {
      std::uint64_t sum = 0;
      for (std::uint64_t i = 0; i <= k; ++i) sum = (sum + binom_oracle(a, i, p) * binom_oracle(b, k - i, p)) % p;
      CHECK(binom_mod_p(a + b, k, p) == sum);
    }
  }
}

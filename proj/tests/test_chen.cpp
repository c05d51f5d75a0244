#include <doctest.h>

#include <algorithm>

#include "ffzeta/chen.hpp"
#include "ffzeta/lucas.hpp"

using namespace ffzeta;

namespace {

TermList list(PrimePower pp, std::initializer_list<std::pair<std::int64_t, Index>> terms) {
  TermList tl(pp);
  for (const auto& [c, idx] : terms) tl.add(c, idx);
  return tl;
}

std::int64_t sign(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

TEST_CASE("TermList merges and drops zeros") {
  const auto pp = PrimePower::make(3, 1);
  TermList tl(pp);
  tl.add(1, {2, 4});
  tl.add(1, {2, 4});
  CHECK(tl.terms() == std::vector<Term>{{2, {2, 4}}});
  tl.add(1, {2, 4});
  CHECK(tl.empty());
  tl.add(-4, {1, 5});
  CHECK(tl.terms() == std::vector<Term>{{2, {1, 5}}});
  CHECK(list(pp, {{1, {1, 2}}, {2, {3, 4}}}) == list(pp, {{2, {3, 4}}, {1, {1, 2}}}));
  CHECK_FALSE(list(pp, {{1, {1, 2}}}) == list(pp, {{2, {1, 2}}}));
}

TEST_CASE("format") {
  const auto p2 = PrimePower::make(2, 1);
  const auto p5 = PrimePower::make(5, 1);
  CHECK(format(TermList(p2)) == "0");
  CHECK(format(list(p2, {{1, {2, 11}}, {1, {3, 10}}})) == "S_d(2,11) + S_d(3,10)");
  CHECK(format(list(p5, {{-1, {2, 3}}, {2, {4, 1}}}), "1") == "-S_1(2,3) + 2*S_1(4,1)");
}

TEST_CASE("chen_terms examples") {
  const auto p2 = PrimePower::make(2, 1);
  const auto p3 = PrimePower::make(3, 1);
  CHECK(chen_terms(p2, 4, 9) == list(p2, {{1, {2, 11}}, {1, {3, 10}}, {1, {4, 9}}, {1, {5, 8}}, {1, {9, 4}}}));
  CHECK(chen_terms(p3, 9, 28) ==
        list(p3, {{-1, {3, 34}}, {-1, {5, 32}}, {-1, {7, 30}}, {-1, {9, 28}}, {1, {19, 18}}}));
  for (std::int64_t r = 1; r <= 12; ++r) CHECK(chen_terms(p2, r, r).empty());
}

TEST_CASE("chen_terms structure") {
  for (auto [p, l] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}, {7u, 1u}, {3u, 2u}}) {
    const auto pp = PrimePower::make(p, l);
    for (std::int64_t r = 1; r <= 20; ++r) {
      for (std::int64_t s = 1; s <= 20; ++s) {
        const TermList tl = chen_terms(pp, r, s);
        CHECK(tl == chen_terms(pp, s, r));
        std::vector<Index> seen;
        for (const auto& term : tl.terms()) {
          REQUIRE(term.index.size() == 2);
          const auto i = term.index[0], j = term.index[1];
          CHECK(i >= 1);
          CHECK(j >= 1);
          CHECK(i + j == r + s);
          CHECK(j % (pp.q - 1) == 0);
          CHECK(term.coef >= 1);
          CHECK(term.coef < p);
          seen.push_back(term.index);
          // Coefficient against Pascal's triangle.
          const std::int64_t raw = sign(s - 1) * static_cast<std::int64_t>(binom_oracle(j - 1, s - 1, p)) +
                                   sign(r - 1) * static_cast<std::int64_t>(binom_oracle(j - 1, r - 1, p));
          CHECK(static_cast<std::int64_t>(term.coef) == ((raw % p) + p) % p);
        }
        std::sort(seen.begin(), seen.end());
        CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
        // Every omitted admissible j has coefficient zero mod p.
        for (std::int64_t j = pp.q - 1; j < r + s; j += pp.q - 1) {
          if (std::find(seen.begin(), seen.end(), Index{r + s - j, j}) != seen.end()) continue;
          const std::int64_t raw = sign(s - 1) * static_cast<std::int64_t>(binom_oracle(j - 1, s - 1, p)) +
                                   sign(r - 1) * static_cast<std::int64_t>(binom_oracle(j - 1, r - 1, p));
          CHECK(raw % static_cast<std::int64_t>(p) == 0);
        }
      }
    }
  }
}

TEST_CASE("eval_terms") {
  MemoCache cache(Field::make(3, 1));
  const auto pp = cache.field()->prime_power();
  CHECK(eval_terms(cache, TermList(pp), 2).is_zero());
  CHECK(eval_terms(cache, list(pp, {{1, {4}}}), 2) == power_sum(cache, 2, 4));
  const std::int64_t idx[] = {2, 4};
  CHECK(eval_terms(cache, list(pp, {{2, {2, 4}}, {1, {3}}}), 2) ==
        multi_power_sum(cache, 2, idx).scaled(FieldElement{2}) + power_sum(cache, 2, 3));

  MemoCache f2(Field::make(2, 1));
  CHECK(eval_terms(f2, chen_terms(f2.field()->prime_power(), 4, 9), 2) == delta(f2, 2, 4, 9));
}

TEST_CASE("verify_chen examples") {
  MemoCache f2(Field::make(2, 1));
  const ChenReport r11 = verify_chen(f2, 1, 1, 1);
  CHECK(r11.holds);
  CHECK(r11.terms.empty());
  CHECK(r11.lhs.is_zero());

  MemoCache f3(Field::make(3, 1));
  const ChenReport r = verify_chen(f3, 9, 28, 1);
  CHECK(r.holds);
  CHECK(r.difference.is_zero());
  CHECK(r.lhs == r.rhs);
}

TEST_CASE("verify_chen on small grids") {
  for (auto [p, l] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    MemoCache cache(Field::make(p, l));
    for (std::int64_t d = 0; d <= 2; ++d) {
      for (std::int64_t r = 1; r <= 8; ++r) {
        for (std::int64_t s = 1; r + s <= 10; ++s) {
          CAPTURE(cache.field()->q());
          CAPTURE(d);
          CAPTURE(r);
          CAPTURE(s);
          CHECK(verify_chen(cache, r, s, d).holds);
        }
      }
    }
  }
}

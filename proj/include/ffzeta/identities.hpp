#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ffzeta/chen.hpp"

namespace ffzeta {

/// Identities of depth-2 power sums. `thm*` are the proven forms,
/// `conj_*` the originally conjectured (incorrect) variants kept so their
/// counter-examples can be reproduced, and `corollary*` the degree-truncated
/// harmonic-product formulas obtained by summing thm1..thm4 over d.
enum class IdentityTag {
  remark21,
  thm1,
  thm2,
  thm3,
  thm4,
  conj_iv_original,
  conj_iv_signfixed,
  conj_v_original,
  corollary1,
  corollary2,
  corollary3,
  corollary4,
};

inline constexpr IdentityTag kAllIdentityTags[] = {
    IdentityTag::remark21,          IdentityTag::thm1,           IdentityTag::thm2,
    IdentityTag::thm3,              IdentityTag::thm4,           IdentityTag::conj_iv_original,
    IdentityTag::conj_iv_signfixed, IdentityTag::conj_v_original, IdentityTag::corollary1,
    IdentityTag::corollary2,        IdentityTag::corollary3,     IdentityTag::corollary4,
};

std::string_view to_string(IdentityTag tag);
std::optional<IdentityTag> parse_identity_tag(std::string_view s);
bool is_conjecture(IdentityTag tag);
bool is_corollary(IdentityTag tag);
bool takes_shift(IdentityTag tag);

/// For corollary tags `d` is the truncation degree D.
struct IdentityInstance {
  IdentityTag id = IdentityTag::thm1;
  PrimePower q;
  std::int64_t n = 1;
  std::int64_t d = 0;
  std::optional<std::int64_t> shift;

  /// Throws std::invalid_argument on n < 1, d < 0, or a missing/out-of-range
  /// shift.
  void validate() const;
};

struct VerificationReport {
  IdentityInstance instance;
  RationalFunction lhs, rhs, difference;
  bool holds = false;
  std::chrono::nanoseconds elapsed{};
};

/// Int(2/q): 1 exactly when q = 2.
int int_indicator(std::int64_t q);

/// q^e with overflow checking.
std::int64_t checked_pow(std::int64_t q, std::int64_t e);

TermList rhs_thm1(const PrimePower& pp, std::int64_t n);
TermList rhs_thm2(const PrimePower& pp, std::int64_t n);
TermList rhs_thm3(const PrimePower& pp, std::int64_t n);
TermList rhs_thm4(const PrimePower& pp, std::int64_t n, std::int64_t shift);
TermList rhs_remark21(const PrimePower& pp, std::int64_t n);
TermList rhs_conj_iv_original(const PrimePower& pp, std::int64_t n);
TermList rhs_conj_iv_signfixed(const PrimePower& pp, std::int64_t n);
TermList rhs_conj_v_original(const PrimePower& pp, std::int64_t n, std::int64_t shift);

/// The formal right-hand side for any tag; corollaries use their theorem's.
TermList rhs_of(IdentityTag tag, const PrimePower& pp, std::int64_t n, std::optional<std::int64_t> shift);

/// The (a, b) of the left-hand side Delta_d(a, b) (or zeta(a) zeta(b)).
std::pair<std::int64_t, std::int64_t> delta_args(IdentityTag tag, const PrimePower& pp, std::int64_t n,
                                                 std::optional<std::int64_t> shift);

/// Delta_d(a, b) for the instance's arguments.
RationalFunction lhs_of(MemoCache& cache, const IdentityInstance& instance);

/// Exact check of LHS = RHS at the instance's d. Corollary tags dispatch to
/// verify_corollary with D = instance.d.
VerificationReport verify(MemoCache& cache, const IdentityInstance& instance);

/// zeta_{<=D}(a) zeta_{<=D}(b)
///   = zeta2_{<=D}(a,b) + zeta2_{<=D}(b,a) + zeta_{<=D}(a+b) + sum_{d<=D} RHS_d
/// where RHS is the right-hand side of theorem `which` (1..4).
VerificationReport verify_corollary(MemoCache& cache, int which, std::int64_t n, std::int64_t D,
                                    std::optional<std::int64_t> shift = std::nullopt);

enum class CounterexampleId { lae, vi };

std::string_view to_string(CounterexampleId id);
std::optional<CounterexampleId> parse_counterexample(std::string_view s);

struct CheckedFact {
  std::string name;
  std::string expected;
  std::string observed;
  bool matches = false;
};

struct CounterexampleReport {
  CounterexampleId which = CounterexampleId::lae;
  PrimePower q;
  std::vector<CheckedFact> facts;
  std::vector<std::int64_t> numerator_degrees;  // lae only
  std::optional<std::uint32_t> constant_term;   // vi only

  bool all_match() const;
};

/// Reproduces the counter-examples: `lae` over F_2 (Delta_2(4,9)) and `vi`
/// over F_3 (Delta_1(9,28)). Builds its own field and cache.
CounterexampleReport counterexample_report(CounterexampleId which);

}  // namespace ffzeta

#include "ffzeta/identities.hpp"

#include <array>
#include <limits>
#include <stdexcept>

namespace ffzeta {

namespace {

constexpr std::array<std::pair<IdentityTag, std::string_view>, 12> kTagNames{{
    {IdentityTag::remark21, "remark21"},
    {IdentityTag::thm1, "thm1"},
    {IdentityTag::thm2, "thm2"},
    {IdentityTag::thm3, "thm3"},
    {IdentityTag::thm4, "thm4"},
    {IdentityTag::conj_iv_original, "conj_iv_original"},
    {IdentityTag::conj_iv_signfixed, "conj_iv_signfixed"},
    {IdentityTag::conj_v_original, "conj_v_original"},
    {IdentityTag::corollary1, "corollary1"},
    {IdentityTag::corollary2, "corollary2"},
    {IdentityTag::corollary3, "corollary3"},
    {IdentityTag::corollary4, "corollary4"},
}};

void require_n(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
}

void require_shift(std::int64_t n, std::int64_t shift) {
  if (shift < 0 || shift > n) throw std::invalid_argument("shift must satisfy 0 <= shift <= n");
}

// Adds coef * S_d(first + (j-1)*step, top +/- (j-1)*step) for j in [lo, hi];
// empty when lo > hi.
void add_stepped_block(TermList& out, std::int64_t coef, std::int64_t lo, std::int64_t hi, std::int64_t first,
                       std::int64_t top, std::int64_t step, std::int64_t second_sign) {
  for (std::int64_t j = lo; j <= hi; ++j) {
    const std::int64_t offset = (j - 1) * step;
    out.add(coef, Index{first + offset, top + second_sign * offset});
  }
}

int corollary_theorem(IdentityTag tag) {
  switch (tag) {
    case IdentityTag::corollary1: return 1;
    case IdentityTag::corollary2: return 2;
    case IdentityTag::corollary3: return 3;
    case IdentityTag::corollary4: return 4;
    default: return 0;
  }
}

IdentityTag theorem_tag(int which) {
  switch (which) {
    case 1: return IdentityTag::thm1;
    case 2: return IdentityTag::thm2;
    case 3: return IdentityTag::thm3;
    case 4: return IdentityTag::thm4;
    default: throw std::invalid_argument("corollary line must be 1..4");
  }
}

IdentityTag corollary_tag(int which) {
  switch (which) {
    case 1: return IdentityTag::corollary1;
    case 2: return IdentityTag::corollary2;
    case 3: return IdentityTag::corollary3;
    case 4: return IdentityTag::corollary4;
    default: throw std::invalid_argument("corollary line must be 1..4");
  }
}

std::chrono::nanoseconds since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
}

}  // namespace

std::string_view to_string(IdentityTag tag) {
  for (const auto& [t, name] : kTagNames) {
    if (t == tag) return name;
  }
  return "unknown";
}

std::optional<IdentityTag> parse_identity_tag(std::string_view s) {
  for (const auto& [t, name] : kTagNames) {
    if (name == s) return t;
  }
  return std::nullopt;
}

bool is_conjecture(IdentityTag tag) {
  return tag == IdentityTag::conj_iv_original || tag == IdentityTag::conj_iv_signfixed ||
         tag == IdentityTag::conj_v_original;
}

bool is_corollary(IdentityTag tag) { return corollary_theorem(tag) != 0; }

bool takes_shift(IdentityTag tag) {
  return tag == IdentityTag::thm4 || tag == IdentityTag::conj_v_original || tag == IdentityTag::corollary4;
}

void IdentityInstance::validate() const {
  require_n(n);
  if (d < 0) throw std::invalid_argument("d must be non-negative");
  if (takes_shift(id)) {
    if (!shift) throw std::invalid_argument(std::string(to_string(id)) + " requires a shift");
    require_shift(n, *shift);
  } else if (shift) {
    throw std::invalid_argument(std::string(to_string(id)) + " takes no shift");
  }
}

int int_indicator(std::int64_t q) { return q == 2 ? 1 : 0; }

std::int64_t checked_pow(std::int64_t q, std::int64_t e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::int64_t>::max() / q) throw std::overflow_error("q^n overflows");
    r *= q;
  }
  return r;
}

TermList rhs_thm1(const PrimePower& pp, std::int64_t n) {
  require_n(n);
  const std::int64_t q = pp.q, qn = checked_pow(q, n);
  TermList out(pp);
  if (int_indicator(q)) out.add(1, Index{2, 2 * qn - 1});
  add_stepped_block(out, -1, 1, (qn - 1) / (q - 1), 3, 2 * qn - 2, q - 1, -1);
  return out;
}

TermList rhs_thm2(const PrimePower& pp, std::int64_t n) {
  require_n(n);
  const std::int64_t q = pp.q, qn = checked_pow(q, n);
  TermList out(pp);
  add_stepped_block(out, -1, 1, (qn + q - 2) / (q - 1), 2, 2 * qn - 2, q - 1, -1);
  return out;
}

TermList rhs_conj_iv_signfixed(const PrimePower& pp, std::int64_t n) {
  require_n(n);
  const std::int64_t q = pp.q, qn = checked_pow(q, n), qn1 = checked_pow(q, n - 1);
  TermList out(pp);
  if (int_indicator(q)) out.add(1, Index{2, qn + qn1 - 1});
  add_stepped_block(out, -1, 1, (qn1 - 1) / (q - 1), 3, qn + qn1 - 2, q - 1, -1);
  return out;
}

TermList rhs_thm3(const PrimePower& pp, std::int64_t n) {
  TermList out = rhs_conj_iv_signfixed(pp, n);
  const std::int64_t q = pp.q, qn = checked_pow(q, n), qn1 = checked_pow(q, n - 1);
  out.add(1, Index{2 * qn1 + 1, qn - qn1});
  return out;
}

TermList rhs_conj_iv_original(const PrimePower& pp, std::int64_t n) {
  require_n(n);
  const std::int64_t q = pp.q, qn = checked_pow(q, n), qn1 = checked_pow(q, n - 1);
  TermList out(pp);
  if (int_indicator(q)) out.add(1, Index{2, qn + qn1 - 1});
  // The second component grows with j here, so the weights are not constant.
  add_stepped_block(out, -1, 1, (qn1 - 1) / (q - 1), 3, qn + qn1 - 2, q - 1, +1);
  return out;
}

TermList rhs_thm4(const PrimePower& pp, std::int64_t n, std::int64_t shift) {
  require_n(n);
  require_shift(n, shift);
  const std::int64_t q = pp.q, qn = checked_pow(q, n), qs = checked_pow(q, shift);
  const std::int64_t split = (qn - qs) / (q - 1);
  const std::int64_t top = 2 * qn - qs - 1;
  TermList out(pp);
  if (int_indicator(q)) out.add(1, Index{2, 2 * qn - qs});
  add_stepped_block(out, -1, 1, split, 3, top, q - 1, -1);
  add_stepped_block(out, +1, split + 1, (qn - 1) / (q - 1), 3, top, q - 1, -1);
  return out;
}

TermList rhs_conj_v_original(const PrimePower& pp, std::int64_t n, std::int64_t shift) {
  require_n(n);
  require_shift(n, shift);
  const std::int64_t q = pp.q, qn = checked_pow(q, n), qs = checked_pow(q, shift);
  const std::int64_t split = (qn - qs) / (q - 1);
  const std::int64_t top = 2 * qn - qs - 1;
  TermList out(pp);
  if (int_indicator(q)) out.add(1, Index{2, 2 * qn - qs});
  add_stepped_block(out, -1, 1, split, 3, top, q - 1, -1);
  // Third block as originally stated: it runs from split + 1 up to split.
  add_stepped_block(out, +1, split + 1, split, 3, top, q - 1, -1);
  return out;
}

TermList rhs_remark21(const PrimePower& pp, std::int64_t n) {
  require_n(n);
  const std::int64_t qn = checked_pow(pp.q, n);
  TermList out(pp);
  out.add(-1, Index{qn, qn - 1});
  return out;
}

TermList rhs_of(IdentityTag tag, const PrimePower& pp, std::int64_t n, std::optional<std::int64_t> shift) {
  auto need_shift = [&] {
    if (!shift) throw std::invalid_argument(std::string(to_string(tag)) + " requires a shift");
    return *shift;
  };
  switch (tag) {
    case IdentityTag::remark21: return rhs_remark21(pp, n);
    case IdentityTag::thm1:
    case IdentityTag::corollary1: return rhs_thm1(pp, n);
    case IdentityTag::thm2:
    case IdentityTag::corollary2: return rhs_thm2(pp, n);
    case IdentityTag::thm3:
    case IdentityTag::corollary3: return rhs_thm3(pp, n);
    case IdentityTag::thm4:
    case IdentityTag::corollary4: return rhs_thm4(pp, n, need_shift());
    case IdentityTag::conj_iv_original: return rhs_conj_iv_original(pp, n);
    case IdentityTag::conj_iv_signfixed: return rhs_conj_iv_signfixed(pp, n);
    case IdentityTag::conj_v_original: return rhs_conj_v_original(pp, n, need_shift());
  }
  throw std::invalid_argument("unknown identity tag");
}

std::pair<std::int64_t, std::int64_t> delta_args(IdentityTag tag, const PrimePower& pp, std::int64_t n,
                                                 std::optional<std::int64_t> shift) {
  require_n(n);
  const std::int64_t q = pp.q, qn = checked_pow(q, n);
  switch (tag) {
    case IdentityTag::remark21: return {qn, qn - 1};
    case IdentityTag::thm1:
    case IdentityTag::corollary1: return {qn + 1, qn};
    case IdentityTag::thm2:
    case IdentityTag::corollary2: return {qn - 1, qn + 1};
    case IdentityTag::thm3:
    case IdentityTag::corollary3:
    case IdentityTag::conj_iv_original:
    case IdentityTag::conj_iv_signfixed: return {checked_pow(q, n - 1), qn + 1};
    case IdentityTag::thm4:
    case IdentityTag::corollary4:
    case IdentityTag::conj_v_original: {
      if (!shift) throw std::invalid_argument(std::string(to_string(tag)) + " requires a shift");
      require_shift(n, *shift);
      return {qn + 1, qn + 1 - checked_pow(q, *shift)};
    }
  }
  throw std::invalid_argument("unknown identity tag");
}

RationalFunction lhs_of(MemoCache& cache, const IdentityInstance& instance) {
  instance.validate();
  const auto [a, b] = delta_args(instance.id, instance.q, instance.n, instance.shift);
  return delta(cache, instance.d, a, b);
}

VerificationReport verify(MemoCache& cache, const IdentityInstance& instance) {
  instance.validate();
  if (!(cache.field()->prime_power() == instance.q)) {
    throw std::invalid_argument("instance and cache are over different fields");
  }
  if (const int which = corollary_theorem(instance.id)) {
    return verify_corollary(cache, which, instance.n, instance.d, instance.shift);
  }
  const auto start = std::chrono::steady_clock::now();
  RationalFunction lhs = lhs_of(cache, instance);
  RationalFunction rhs = eval_terms(cache, rhs_of(instance.id, instance.q, instance.n, instance.shift), instance.d);
  RationalFunction diff = lhs - rhs;
  const bool holds = diff.is_zero();
  return VerificationReport{instance, std::move(lhs), std::move(rhs), std::move(diff), holds, since(start)};
}

VerificationReport verify_corollary(MemoCache& cache, int which, std::int64_t n, std::int64_t D,
                                    std::optional<std::int64_t> shift) {
  const IdentityInstance instance{corollary_tag(which), cache.field()->prime_power(), n, D, shift};
  instance.validate();
  const auto start = std::chrono::steady_clock::now();
  const PrimePower& pp = instance.q;
  const auto [a, b] = delta_args(instance.id, pp, n, shift);
  const TermList terms = rhs_of(theorem_tag(which), pp, n, shift);

  RationalFunction lhs = zeta_trunc(cache, D, a) * zeta_trunc(cache, D, b);
  RationalFunction rhs = zeta2_trunc(cache, D, a, b) + zeta2_trunc(cache, D, b, a) + zeta_trunc(cache, D, a + b);
  for (std::int64_t d = 0; d <= D; ++d) rhs += eval_terms(cache, terms, d);
  RationalFunction diff = lhs - rhs;
  const bool holds = diff.is_zero();
  return VerificationReport{instance, std::move(lhs), std::move(rhs), std::move(diff), holds, since(start)};
}

}  // namespace ffzeta

#include "ffzeta/chen.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ffzeta/lucas.hpp"

namespace ffzeta {

void TermList::add(std::int64_t coef, Index index) {
  const std::int64_t p = pp_.p;
  const auto c = static_cast<std::uint32_t>(((coef % p) + p) % p);
  auto it = std::find_if(terms_.begin(), terms_.end(), [&](const Term& t) { return t.index == index; });
  if (it == terms_.end()) {
    if (c != 0) terms_.push_back(Term{c, std::move(index)});
    return;
  }
  it->coef = static_cast<std::uint32_t>((it->coef + c) % pp_.p);
  if (it->coef == 0) terms_.erase(it);
}

bool operator==(const TermList& a, const TermList& b) {
  if (!(a.pp_ == b.pp_) || a.terms_.size() != b.terms_.size()) return false;
  auto by_index = [](const Term& x, const Term& y) { return x.index < y.index; };
  auto sa = a.terms_, sb = b.terms_;
  std::sort(sa.begin(), sa.end(), by_index);
  std::sort(sb.begin(), sb.end(), by_index);
  return sa == sb;
}

std::string format(const TermList& tl, const std::string& degree) {
  if (tl.empty()) return "0";
  const std::uint32_t p = tl.prime_power().p;
  std::ostringstream os;
  bool first = true;
  for (const auto& t : tl.terms()) {
    const bool minus = p > 2 && t.coef == p - 1;
    if (first) {
      if (minus) os << '-';
    } else {
      os << (minus ? " - " : " + ");
    }
    first = false;
    if (!minus && t.coef != 1) os << t.coef << '*';
    os << "S_" << degree << '(';
    for (std::size_t i = 0; i < t.index.size(); ++i) os << (i ? "," : "") << t.index[i];
    os << ')';
  }
  return os.str();
}

namespace {
// (-1)^k C(m, n) mod p.
std::int64_t signed_binom(std::int64_t k, std::int64_t m, std::int64_t n, std::uint32_t p) {
  const auto c = static_cast<std::int64_t>(
      binom_mod_p(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n), p));
  return (k % 2 == 0) ? c : -c;
}
}  // namespace

TermList chen_terms(const PrimePower& pp, std::int64_t r, std::int64_t s) {
  if (r < 1 || s < 1) throw std::invalid_argument("Chen's formula needs r, s >= 1");
  TermList out(pp);
  const std::int64_t step = pp.q - 1;  // q = 2 gives step 1: every j qualifies
  const std::int64_t weight = r + s;
  std::int64_t j = (weight - 1) / step * step;
  for (; j >= 1; j -= step) {
    const std::int64_t coef = signed_binom(s - 1, j - 1, s - 1, pp.p) + signed_binom(r - 1, j - 1, r - 1, pp.p);
    out.add(coef, Index{weight - j, j});
  }
  return out;
}

RationalFunction eval_terms(MemoCache& cache, const TermList& tl, std::int64_t d) {
  const FieldPtr& field = cache.field();
  if (!(tl.prime_power() == field->prime_power())) {
    throw std::invalid_argument("term list and cache are over different fields");
  }
  std::vector<RationalFunction> parts;
  parts.reserve(tl.size());
  for (const auto& t : tl.terms()) {
    parts.push_back(multi_power_sum(cache, d, t.index).scaled(field->embed_int(t.coef)));
  }
  return balanced_sum(field, parts);
}

ChenReport verify_chen(MemoCache& cache, std::int64_t r, std::int64_t s, std::int64_t d) {
  const auto start = std::chrono::steady_clock::now();
  const PrimePower& pp = cache.field()->prime_power();
  TermList terms = chen_terms(pp, r, s);
  RationalFunction lhs = delta(cache, d, r, s);
  RationalFunction rhs = eval_terms(cache, terms, d);
  RationalFunction diff = lhs - rhs;
  const bool holds = diff.is_zero();
  return ChenReport{pp,
                    r,
                    s,
                    d,
                    std::move(terms),
                    std::move(lhs),
                    std::move(rhs),
                    std::move(diff),
                    holds,
                    std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start)};
}

}  // namespace ffzeta

#include "ffzeta/powersum.hpp"

#include <mutex>
#include <stdexcept>

namespace ffzeta {

std::optional<RationalFunction> MemoCache::find(const PowerSumKey& key) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

RationalFunction MemoCache::insert(PowerSumKey key, RationalFunction value) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.try_emplace(std::move(key), std::move(value));
  return it->second;
}

std::size_t MemoCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

namespace {

void require_degree(std::int64_t d) {
  if (d < 0) throw std::invalid_argument("degree must be non-negative");
}

RationalFunction compute_power_sum(const MemoCache& cache, std::int64_t d, std::int64_t s) {
  const FieldPtr& field = cache.field();
  const auto monics = monic_polys(field, static_cast<std::size_t>(d), cache.enum_cap());
  std::vector<RationalFunction> terms;
  terms.reserve(monics.size());
  const std::uint64_t e = s < 0 ? static_cast<std::uint64_t>(-s) : static_cast<std::uint64_t>(s);
  for (const auto& a : monics) {
    // a is monic, so 1/a^s is already reduced.
    if (s >= 0) {
      terms.emplace_back(Polynomial::one(field), pow(a, e));
    } else {
      terms.emplace_back(pow(a, e));
    }
  }
  return balanced_sum(field, terms);
}

}  // namespace

RationalFunction power_sum(MemoCache& cache, std::int64_t d, std::int64_t s) {
  require_degree(d);
  PowerSumKey key{d, {s}};
  if (auto hit = cache.find(key)) return *hit;
  return cache.insert(std::move(key), compute_power_sum(cache, d, s));
}

RationalFunction multi_power_sum(MemoCache& cache, std::int64_t d, std::span<const std::int64_t> ss) {
  require_degree(d);
  if (ss.empty()) throw std::invalid_argument("multi power sum needs at least one exponent");
  if (ss.size() == 1) return power_sum(cache, d, ss.front());
  for (auto s : ss) {
    if (s < 1) throw std::invalid_argument("multi power sum exponents must be positive");
  }
  PowerSumKey key{d, std::vector<std::int64_t>(ss.begin(), ss.end())};
  if (auto hit = cache.find(key)) return *hit;

  const auto tail = ss.subspan(1);
  std::vector<RationalFunction> inner;
  inner.reserve(static_cast<std::size_t>(d));
  for (std::int64_t e = 0; e < d; ++e) inner.push_back(multi_power_sum(cache, e, tail));
  RationalFunction value = power_sum(cache, d, ss.front()) * balanced_sum(cache.field(), inner);
  return cache.insert(std::move(key), std::move(value));
}

RationalFunction delta(MemoCache& cache, std::int64_t d, std::int64_t a, std::int64_t b) {
  return power_sum(cache, d, a) * power_sum(cache, d, b) - power_sum(cache, d, a + b);
}

RationalFunction zeta_trunc(MemoCache& cache, std::int64_t D, std::int64_t s) {
  require_degree(D);
  RationalFunction acc(cache.field());
  for (std::int64_t d = 0; d <= D; ++d) acc += power_sum(cache, d, s);
  return acc;
}

RationalFunction zeta2_trunc(MemoCache& cache, std::int64_t D, std::int64_t a, std::int64_t b) {
  require_degree(D);
  RationalFunction acc(cache.field());
  RationalFunction prefix(cache.field());  // sum_{d2 < d1} S_{d2}(b)
  for (std::int64_t d1 = 1; d1 <= D; ++d1) {
    prefix += power_sum(cache, d1 - 1, b);
    acc += power_sum(cache, d1, a) * prefix;
  }
  return acc;
}

}  // namespace ffzeta

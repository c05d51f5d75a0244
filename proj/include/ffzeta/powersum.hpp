#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <span>
#include <vector>

#include "ffzeta/ratfun.hpp"

namespace ffzeta {

struct PowerSumKey {
  std::int64_t d = 0;
  std::vector<std::int64_t> exponents;

  friend auto operator<=>(const PowerSumKey&, const PowerSumKey&) = default;
  friend bool operator==(const PowerSumKey&, const PowerSumKey&) = default;
};

/// Memo table for S_d(s_1,...,s_n) over one field. Entries are insert-once;
/// concurrent readers and writers are safe. Values are computed outside the
/// lock, so two racing workers may both compute a key and the first insert
/// wins (the values are equal anyway).
class MemoCache {
 public:
  explicit MemoCache(FieldPtr field, std::uint64_t enum_cap = kDefaultEnumCap)
      : field_(std::move(field)), enum_cap_(enum_cap) {}

  MemoCache(const MemoCache&) = delete;
  MemoCache& operator=(const MemoCache&) = delete;

  const FieldPtr& field() const noexcept { return field_; }
  std::uint64_t enum_cap() const noexcept { return enum_cap_; }

  std::optional<RationalFunction> find(const PowerSumKey& key) const;
  /// Returns the stored value, which is `value` unless the key was present.
  RationalFunction insert(PowerSumKey key, RationalFunction value);
  std::size_t size() const;

 private:
  FieldPtr field_;
  std::uint64_t enum_cap_;
  mutable std::shared_mutex mutex_;
  std::map<PowerSumKey, RationalFunction> entries_;
};

/// S_d(s) = sum over monic a of degree d of 1/a^s; any integer s.
RationalFunction power_sum(MemoCache& cache, std::int64_t d, std::int64_t s);

/// S_d(s_1,...,s_n) = S_d(s_1) * sum_{d > d_2 > ... > d_n >= 0} S_{d_2}(s_2)...S_{d_n}(s_n).
RationalFunction multi_power_sum(MemoCache& cache, std::int64_t d, std::span<const std::int64_t> ss);

/// Delta_d(a,b) = S_d(a) S_d(b) - S_d(a+b).
RationalFunction delta(MemoCache& cache, std::int64_t d, std::int64_t a, std::int64_t b);

/// sum_{d <= D} S_d(s).
RationalFunction zeta_trunc(MemoCache& cache, std::int64_t D, std::int64_t s);

/// sum_{D >= d1 > d2 >= 0} S_{d1}(a) S_{d2}(b), accumulated with a running
/// prefix sum of S_{d2}(b) rather than through multi_power_sum.
RationalFunction zeta2_trunc(MemoCache& cache, std::int64_t D, std::int64_t a, std::int64_t b);

}  // namespace ffzeta

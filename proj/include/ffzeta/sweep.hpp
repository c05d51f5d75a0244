#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ffzeta/identities.hpp"

namespace ffzeta {

/// Raised for unreadable or malformed sweep configurations.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t l = 1;
  std::optional<std::vector<std::uint32_t>> modulus;
  std::optional<std::int64_t> n_max;  // falls back to SweepConfig::n_max
};

/// Flat JSON document:
///   {"fields": [{"p": 2, "l": 1, "modulus": [...], "n_max": 4}, ...],
///    "n_max": 1, "d_max": 2, "identities": ["thm1", ...],
///    "weight_cap": 70, "enum_cap": 1000000, "jobs": 1, "out": "report.json"}
struct SweepConfig {
  std::vector<FieldSpec> fields;
  std::int64_t n_max = 1;
  std::int64_t d_max = 2;
  std::vector<IdentityTag> identities;
  std::int64_t weight_cap = 70;
  std::uint64_t enum_cap = kDefaultEnumCap;
  unsigned jobs = 1;
  std::string out;

  static SweepConfig from_json(const nlohmann::json& doc);
  static SweepConfig load(const std::string& path);
};

struct PlannedInstance {
  std::size_t field_index = 0;
  IdentityInstance instance;
};

/// Every (field, identity, n, shift, d) the config admits: n with 2q^n within
/// weight_cap, d with q^d within enum_cap, every shift 0..n where the tag
/// takes one. Order is fields, then identities, then n, shift, d.
std::vector<PlannedInstance> expand(const SweepConfig& config, const std::vector<PrimePower>& fields);

struct SweepSummary {
  std::size_t total = 0;
  std::size_t held = 0;
  std::size_t failed = 0;             // unexpected: a non-conjecture tag failed or errored
  std::size_t expected_failures = 0;  // conjecture tags that failed
  double elapsed_ms = 0;
};

struct SweepResult {
  nlohmann::json reports;  // ordered like expand(); no timing inside
  SweepSummary summary;

  /// {"reports": [...], "summary": {...}}
  nlohmann::json document() const;
};

/// FFZETA_JOBS overrides `configured` when set to a positive integer.
unsigned effective_jobs(unsigned configured);

SweepResult run_sweep(const SweepConfig& config);

}  // namespace ffzeta

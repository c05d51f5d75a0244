#include "ffzeta/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <thread>

#include "ffzeta/report_json.hpp"

namespace ffzeta {

using nlohmann::json;

namespace {

template <typename T>
T get_or(const json& doc, const char* key, T fallback) {
  if (!doc.contains(key)) return fallback;
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
  }
}

}  // namespace

SweepConfig SweepConfig::from_json(const json& doc) {
  if (!doc.is_object()) throw ConfigError("sweep config must be a JSON object");
  static const char* const kKnown[] = {"fields", "n_max", "d_max", "identities", "weight_cap", "enum_cap", "jobs", "out"};
  for (const auto& [key, _] : doc.items()) {
    if (std::find(std::begin(kKnown), std::end(kKnown), key) == std::end(kKnown)) {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  SweepConfig c;
  c.n_max = get_or<std::int64_t>(doc, "n_max", c.n_max);
  c.d_max = get_or<std::int64_t>(doc, "d_max", c.d_max);
  c.weight_cap = get_or<std::int64_t>(doc, "weight_cap", c.weight_cap);
  c.enum_cap = get_or<std::uint64_t>(doc, "enum_cap", c.enum_cap);
  c.jobs = get_or<unsigned>(doc, "jobs", c.jobs);
  c.out = get_or<std::string>(doc, "out", c.out);
  if (c.d_max < 0) throw ConfigError("d_max must be non-negative");
  if (c.n_max < 1) throw ConfigError("n_max must be at least 1");

  for (const auto& f : get_or<json>(doc, "fields", json::array())) {
    if (!f.is_object() || !f.contains("p")) throw ConfigError("each field needs at least {\"p\": ...}");
    FieldSpec spec;
    spec.p = get_or<std::uint32_t>(f, "p", 0);
    spec.l = get_or<std::uint32_t>(f, "l", 1);
    if (f.contains("modulus")) spec.modulus = get_or<std::vector<std::uint32_t>>(f, "modulus", {});
    if (f.contains("n_max")) spec.n_max = get_or<std::int64_t>(f, "n_max", 1);
    c.fields.push_back(std::move(spec));
  }
  for (const auto& name : get_or<std::vector<std::string>>(doc, "identities", {})) {
    auto tag = parse_identity_tag(name);
    if (!tag) throw ConfigError("unknown identity '" + name + "'");
    c.identities.push_back(*tag);
  }
  return c;
}

SweepConfig SweepConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  try {
    return from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw ConfigError("cannot parse config file '" + path + "': " + e.what());
  }
}

std::vector<PlannedInstance> expand(const SweepConfig& config, const std::vector<PrimePower>& fields) {
  std::vector<PlannedInstance> out;
  for (std::size_t fi = 0; fi < fields.size(); ++fi) {
    const PrimePower& pp = fields[fi];
    const std::int64_t n_max = config.fields.at(fi).n_max.value_or(config.n_max);
    std::int64_t d_max = -1;
    for (std::uint64_t qd = 1; d_max < config.d_max && qd <= config.enum_cap; qd *= pp.q) ++d_max;
    for (IdentityTag tag : config.identities) {
      for (std::int64_t n = 1; n <= n_max; ++n) {
        if (2 * checked_pow(pp.q, n) > config.weight_cap) break;
        std::vector<std::optional<std::int64_t>> shifts;
        if (takes_shift(tag)) {
          for (std::int64_t s = 0; s <= n; ++s) shifts.emplace_back(s);
        } else {
          shifts.emplace_back(std::nullopt);
        }
        for (const auto& shift : shifts) {
          for (std::int64_t d = 0; d <= d_max; ++d) out.push_back({fi, IdentityInstance{tag, pp, n, d, shift}});
        }
      }
    }
  }
  return out;
}

json SweepResult::document() const {
  return json{{"reports", reports},
              {"summary",
               {{"total", summary.total},
                {"held", summary.held},
                {"failed", summary.failed},
                {"expected_failures", summary.expected_failures},
                {"elapsed_ms", summary.elapsed_ms}}}};
}

unsigned effective_jobs(unsigned configured) {
  if (const char* env = std::getenv("FFZETA_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, configured);
}

SweepResult run_sweep(const SweepConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::unique_ptr<MemoCache>> caches;
  std::vector<PrimePower> fields;
  for (const auto& spec : config.fields) {
    FieldPtr f = Field::make(spec.p, spec.l, spec.modulus);
    fields.push_back(f->prime_power());
    caches.push_back(std::make_unique<MemoCache>(std::move(f), config.enum_cap));
  }
  const auto plan = expand(config, fields);

  std::vector<json> records(plan.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < plan.size(); i = next++) {
      const auto& item = plan[i];
      try {
        json rec = to_json(verify(*caches[item.field_index], item.instance), false);
        const bool conj = is_conjecture(item.instance.id);
        rec["status"] = rec["holds"].get<bool>() ? "held" : (conj ? "expected_failure" : "failed");
        records[i] = std::move(rec);
      } catch (const std::exception& e) {
        records[i] = json{{"identity", std::string(to_string(item.instance.id))},
                          {"n", item.instance.n},
                          {"d", item.instance.d},
                          {"status", "error"},
                          {"error", e.what()}};
      }
    }
  };
  const unsigned jobs = std::min<std::size_t>(effective_jobs(config.jobs), std::max<std::size_t>(plan.size(), 1));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
  }

  SweepResult result;
  result.reports = json::array();
  for (auto& rec : records) {
    const std::string status = rec["status"];
    ++result.summary.total;
    if (status == "held") {
      ++result.summary.held;
    } else if (status == "expected_failure") {
      ++result.summary.expected_failures;
    } else {
      ++result.summary.failed;
    }
    result.reports.push_back(std::move(rec));
  }
  result.summary.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace ffzeta

#include "ffzeta/report_json.hpp"

namespace ffzeta {

using nlohmann::json;

namespace {
json prime_power_json(const PrimePower& pp) { return json{{"p", pp.p}, {"l", pp.l}}; }

double millis(std::chrono::nanoseconds ns) { return static_cast<double>(ns.count()) / 1e6; }
}  // namespace

json to_json(const Polynomial& p) {
  const Field& f = *p.field();
  json out = json::array();
  for (auto c : p.coeffs()) {
    if (f.is_prime_field()) {
      out.push_back(c.code);
    } else {
      out.push_back(f.digits(c));
    }
  }
  return out;
}

json to_json(const RationalFunction& r) { return json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

json to_json(const TermList& tl) {
  json out = json::array();
  for (const auto& t : tl.terms()) out.push_back(json{{"coef", t.coef}, {"index", t.index}});
  return out;
}

json to_json(const VerificationReport& rep, bool with_timing) {
  const auto& inst = rep.instance;
  json out{{"identity", std::string(to_string(inst.id))}, {"q", prime_power_json(inst.q)}, {"n", inst.n},
           {"d", inst.d}};
  if (inst.shift) out["shift"] = *inst.shift;
  out["holds"] = rep.holds;
  out["difference"] = to_json(rep.difference);
  if (with_timing) out["elapsed_ms"] = millis(rep.elapsed);
  return out;
}

json to_json(const ChenReport& rep, bool with_timing) {
  json out{{"q", prime_power_json(rep.pp)}, {"r", rep.r},     {"s", rep.s},
           {"d", rep.d},                   {"terms", to_json(rep.terms)}, {"holds", rep.holds},
           {"difference", to_json(rep.difference)}};
  if (with_timing) out["elapsed_ms"] = millis(rep.elapsed);
  return out;
}

json to_json(const CounterexampleReport& rep) {
  json facts = json::array();
  for (const auto& f : rep.facts) {
    facts.push_back(json{{"name", f.name}, {"expected", f.expected}, {"observed", f.observed}, {"matches", f.matches}});
  }
  json out{{"counterexample", std::string(to_string(rep.which))},
           {"q", prime_power_json(rep.q)},
           {"facts", facts},
           {"all_match", rep.all_match()}};
  if (!rep.numerator_degrees.empty()) out["numerator_degrees"] = rep.numerator_degrees;
  if (rep.constant_term) out["constant_term"] = *rep.constant_term;
  return out;
}

}  // namespace ffzeta

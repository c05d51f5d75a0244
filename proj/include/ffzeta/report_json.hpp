#pragma once

#include <json.hpp>

#include "ffzeta/identities.hpp"

namespace ffzeta {

/// Coefficient list, lowest first. Prime-field coefficients are integers,
/// extension-field coefficients digit arrays.
nlohmann::json to_json(const Polynomial& p);
/// {"num": [...], "den": [...]}
nlohmann::json to_json(const RationalFunction& r);
/// [{"coef": c, "index": [i, j]}, ...]
nlohmann::json to_json(const TermList& tl);

/// {identity, q: {p, l}, n, d, shift?, holds, difference, elapsed_ms?}
nlohmann::json to_json(const VerificationReport& rep, bool with_timing = true);
nlohmann::json to_json(const ChenReport& rep, bool with_timing = true);
nlohmann::json to_json(const CounterexampleReport& rep);

}  // namespace ffzeta

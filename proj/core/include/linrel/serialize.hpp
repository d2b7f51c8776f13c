#pragma once

// JSON encodings: a Rat is the string "p/q" (or "p"), a Poly is an object
// mapping decimal exponent strings to Rat strings. Zero coefficients are omitted.

#include <nlohmann/json.hpp>

#include "linrel/bigint.hpp"
#include "linrel/polynomial.hpp"
#include "linrel/rational.hpp"

namespace linrel {

void to_json(nlohmann::json& j, const Rat& value);
void from_json(const nlohmann::json& j, Rat& value);

void to_json(nlohmann::json& j, const Poly& p);
void from_json(const nlohmann::json& j, Poly& p);

}  // namespace linrel

#include "linrel/serialize.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace linrel {

void to_json(nlohmann::json& j, const Rat& value) { j = value.str(); }

void from_json(const nlohmann::json& j, Rat& value) {
  value = Rat::parse(j.get<std::string>());
}

void to_json(nlohmann::json& j, const Poly& p) {
  j = nlohmann::json::object();
  const auto coeffs = p.coeffs();
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (!coeffs[e].is_zero()) j[std::to_string(e)] = coeffs[e].str();
  }
}

void from_json(const nlohmann::json& j, Poly& p) {
  if (!j.is_object()) throw std::invalid_argument("polynomial JSON must be an object");
  std::vector<Rat> coeffs;
  for (const auto& [key, value] : j.items()) {
    std::size_t exponent = 0;
    const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), exponent);
    if (ec != std::errc() || ptr != key.data() + key.size()) {
      throw std::invalid_argument("bad exponent key '" + key + "'");
    }
    if (exponent >= coeffs.size()) coeffs.resize(exponent + 1);
    coeffs[exponent] = value.get<Rat>();
  }
  p = Poly(std::move(coeffs));
}

}  // namespace linrel

#include "linrel/bigint.hpp"

#include <stdexcept>

namespace linrel {

std::string to_string(const BigInt& value) { return value.str(); }

BigInt parse_bigint(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  BigInt result = 0;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    result = result * 10 + (ch - '0');
  }
  return negative ? BigInt(-result) : result;
}

BigInt pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b == 0) throw std::domain_error("floor_div by zero");
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace linrel

#pragma once

// Arbitrary-precision signed integer used for every count in the library.

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace linrel {

using BigInt = boost::multiprecision::cpp_int;

/// Exact decimal rendering, never in scientific notation.
std::string to_string(const BigInt& value);

/// Parses an optionally signed decimal integer. Throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

BigInt pow(const BigInt& base, unsigned exponent);
BigInt factorial(unsigned n);

/// floor(a / b) for b != 0, rounding toward negative infinity.
std::int64_t floor_div(std::int64_t a, std::int64_t b);

}  // namespace linrel

#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include "linrel/bigint.hpp"

namespace linrel {

/// Exact rational number.
///
/// Always kept in lowest terms with a positive denominator; zero is 0/1.
/// Normalization happens after every operation, so `==` is structural.
class Rat {
 public:
  Rat() = default;
  Rat(BigInt value) : num_(std::move(value)) {}  // NOLINT(implicit)
  template <std::integral T>
  Rat(T value) : num_(value) {}  // NOLINT(implicit)
  /// Throws std::domain_error when `den` is zero.
  Rat(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  Rat operator-() const;
  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rat&, const Rat&) = default;
  friend std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs);

  Rat abs() const;
  double to_double() const;

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;
  /// Inverse of str(); also accepts unreduced input such as "4/6".
  static Rat parse(std::string_view text);

 private:
  void normalize();

  BigInt num_ = 0;
  BigInt den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rat& value);

/// Decimal rendering to `digits` significant figures, round-half-even.
/// Keeps trailing zeros so the number of printed significant digits is fixed,
/// e.g. 1 -> "1.0000" and 2/3 -> "0.66667" at five digits.
std::string to_significant(const Rat& value, int digits);

}  // namespace linrel

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linrel/rational.hpp"

namespace linrel {

/// Dense univariate polynomial over Rat; coefficient i multiplies n^i.
///
/// Trailing zero coefficients are always stripped, so the zero polynomial
/// has no coefficients and no degree.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);

  static Poly constant(Rat value);
  static Poly monomial(Rat coeff, std::size_t exponent);
  /// a*n + b
  static Poly linear(Rat a, Rat b);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;
  /// Zero when `exponent` exceeds the degree.
  Rat coeff(std::size_t exponent) const;
  /// Zero for the zero polynomial.
  Rat leading_coeff() const;
  std::span<const Rat> coeffs() const { return coeffs_; }

  /// Horner evaluation.
  Rat operator()(const Rat& x) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rat& scalar);
  Poly operator-() const;

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  friend Poly operator*(Poly lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Poly operator*(const Rat& lhs, Poly rhs) { return rhs *= lhs; }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// True when every nonzero coefficient sits on an odd exponent.
  bool has_only_odd_powers() const;

  /// Descending-exponent form, e.g. "11/24*n^4 + 1/4*n^3 - 3875/4*n + 6006".
  std::string str(std::string_view var = "n") const;

 private:
  void trim();

  std::vector<Rat> coeffs_;
};

Rat poly_eval(const Poly& p, const BigInt& x);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace linrel

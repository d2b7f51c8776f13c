#include "linrel/rational.hpp"

#include <ostream>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace linrel {

Rat::Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
  normalize();
}

void Rat::normalize() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rat Rat::operator-() const {
  Rat r = *this;
  r.num_ = -r.num_;
  return r;
}

Rat& Rat::operator+=(const Rat& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rat& Rat::operator-=(const Rat& rhs) { return *this += -rhs; }

Rat& Rat::operator*=(const Rat& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs) {
  const BigInt a = lhs.num_ * rhs.den_;
  const BigInt b = rhs.num_ * lhs.den_;
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rat Rat::abs() const { return sign() < 0 ? -*this : *this; }

double Rat::to_double() const {
  using Float = boost::multiprecision::cpp_bin_float_double_extended;
  return static_cast<double>(Float(num_) / Float(den_));
}

std::string Rat::str() const {
  if (is_integer()) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_bigint(text));
  return Rat(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rat& value) { return os << value.str(); }

namespace {

// Rounds a non-negative rational to the nearest integer, ties to even.
BigInt round_half_even(const Rat& x) {
  BigInt q;
  BigInt r;
  boost::multiprecision::divide_qr(x.num(), x.den(), q, r);
  const BigInt twice = 2 * r;
  if (twice > x.den() || (twice == x.den() && boost::multiprecision::bit_test(q, 0))) {
    ++q;
  }
  return q;
}

}  // namespace

std::string to_significant(const Rat& value, int digits) {
  if (digits < 1) throw std::invalid_argument("significant digits must be positive");
  if (value.is_zero()) {
    std::string out = "0";
    if (digits > 1) out += "." + std::string(static_cast<std::size_t>(digits - 1), '0');
    return out;
  }
  const Rat magnitude = value.abs();

  // Decimal exponent e with 10^e <= magnitude < 10^(e+1).
  int exponent = 0;
  {
    Rat probe = magnitude;
    while (probe >= 10) {
      probe /= 10;
      ++exponent;
    }
    while (probe < 1) {
      probe *= 10;
      --exponent;
    }
  }

  BigInt scaled;
  for (int attempt = 0; attempt < 2; ++attempt) {
    const int shift = digits - 1 - exponent;
    Rat x = magnitude;
    if (shift >= 0) {
      x *= Rat(pow(BigInt(10), static_cast<unsigned>(shift)));
    } else {
      x /= Rat(pow(BigInt(10), static_cast<unsigned>(-shift)));
    }
    scaled = round_half_even(x);
    // 9.99995 rounds up to 10.000: one more significant digit than asked.
    if (scaled < pow(BigInt(10), static_cast<unsigned>(digits))) break;
    ++exponent;
  }

  std::string mantissa = scaled.str();
  const int point = exponent + 1;  // digits before the decimal point
  std::string out;
  if (point <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-point), '0') + mantissa;
  } else if (point >= static_cast<int>(mantissa.size())) {
    out = mantissa + std::string(static_cast<std::size_t>(point) - mantissa.size(), '0');
  } else {
    out = mantissa.substr(0, static_cast<std::size_t>(point)) + "." +
          mantissa.substr(static_cast<std::size_t>(point));
  }
  return value.sign() < 0 ? "-" + out : out;
}

}  // namespace linrel

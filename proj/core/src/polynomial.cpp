#include "linrel/polynomial.hpp"

#include <algorithm>
#include <ostream>

namespace linrel {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Rat value) { return Poly({std::move(value)}); }

Poly Poly::monomial(Rat coeff, std::size_t exponent) {
  std::vector<Rat> c(exponent + 1);
  c[exponent] = std::move(coeff);
  return Poly(std::move(c));
}

Poly Poly::linear(Rat a, Rat b) { return Poly({std::move(b), std::move(a)}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rat Poly::coeff(std::size_t exponent) const {
  return exponent < coeffs_.size() ? coeffs_[exponent] : Rat();
}

Rat Poly::leading_coeff() const { return coeffs_.empty() ? Rat() : coeffs_.back(); }

Rat Poly::operator()(const Rat& x) const {
  Rat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

bool Poly::has_only_odd_powers() const {
  for (std::size_t i = 0; i < coeffs_.size(); i += 2) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

std::string Poly::str(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t e = coeffs_.size(); e-- > 0;) {
    const Rat& c = coeffs_[e];
    if (c.is_zero()) continue;
    const bool first = out.empty();
    if (c.sign() < 0) {
      out += first ? "-" : " - ";
    } else if (!first) {
      out += " + ";
    }
    const Rat magnitude = c.abs();
    if (e == 0) {
      out += magnitude.str();
      continue;
    }
    if (magnitude != 1) out += magnitude.str() + "*";
    out += var;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

Rat poly_eval(const Poly& p, const BigInt& x) { return p(Rat(x)); }

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace linrel

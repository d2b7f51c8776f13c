#include "linrel/growth.hpp"

#include "linrel/binomial.hpp"
#include "linrel/closed_form.hpp"
#include "linrel/interpolate.hpp"

namespace linrel {

namespace {

Poly signed_binomial_sum(int h, int k, std::int64_t m, std::int64_t c, int limit) {
  const int N = h + k;
  const BigInt shift = -BigInt(h - k) * m + h + c - 1;
  Poly total;
  for (int u = 0; u <= limit; ++u) {
    Poly term = binomial_linear_poly(BigInt(k - u), shift, static_cast<unsigned>(N - 1));
    term *= Rat(choose(N, static_cast<unsigned>(u)));
    if (u % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

}  // namespace

GrowthResult growth_polynomial(const ProblemSpec& spec) {
  spec.validate();
  GrowthResult result;
  result.spec = spec;
  result.u0_fixed = u0_stable(spec);
  result.n0_bound = n_threshold(spec);
  result.poly = signed_binomial_sum(spec.h, spec.k, spec.m, spec.c, result.u0_fixed);

  std::int64_t n = result.n0_bound;
  while (n > 1 && poly_eval(result.poly, n - 1) == Rat(phi_convolve(spec, n - 1))) --n;
  result.n0_observed = n;
  return result;
}

Poly growth_polynomial_by_interpolation(const ProblemSpec& spec) {
  spec.validate();
  const std::int64_t start = n_threshold(spec);
  std::vector<Sample> samples;
  for (std::int64_t n = start; n < start + spec.h + spec.k; ++n) {
    samples.push_back({Rat(n), Rat(phi_closed(spec, n))});
  }
  return lagrange_interpolate(samples);
}

Poly psi_polynomial(int h) {
  if (h < 1) throw std::invalid_argument("h must be >= 1");
  return signed_binomial_sum(h, h, 0, 0, h - 1);
}

Rat psi_leading_coeff(int h) { return psi_polynomial(h).leading_coeff(); }

std::vector<BigInt> ogf_psi3_coeffs(std::size_t count) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  static const int numerator[] = {0, 1, 14, 36, 14, 1};
  // 1/(1-x)^6 = sum_j C(j+5, 5) x^j
  std::vector<BigInt> out(count, BigInt(0));
  for (std::size_t j = 0; j < count; ++j) {
    for (std::size_t i = 0; i < std::size(numerator) && i <= j; ++i) {
      out[j] += numerator[i] * choose(BigInt(j - i + 5), 5);
    }
  }
  return out;
}

}  // namespace linrel

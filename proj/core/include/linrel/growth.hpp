#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "linrel/bigint.hpp"
#include "linrel/oracle.hpp"
#include "linrel/polynomial.hpp"

namespace linrel {

/// The polynomial in n that counts solutions for all large n, plus the
/// points from which it is known and observed to be exact.
struct GrowthResult {
  ProblemSpec spec;
  Poly poly;
  /// Threshold guaranteed by the u0 case analysis (n_threshold).
  std::int64_t n0_bound = 1;
  /// Smallest n such that poly matches the oracle on [n0_observed, n0_bound].
  std::int64_t n0_observed = 1;
  /// k - 1 or k: the summation limit used for the symbolic sum.
  int u0_fixed = 0;
};

/// Expands sum_{u=0}^{u0_fixed} (-1)^u C(h+k, u) C((k-u)n - (h-k)m + h + c - 1, h+k-1)
/// symbolically, with the generalized binomial, then locates n0_observed by
/// scanning down from n0_bound against phi_convolve.
GrowthResult growth_polynomial(const ProblemSpec& spec);

/// Second construction route: interpolate h+k closed-form samples taken at
/// n = n_threshold(spec), ..., n_threshold(spec) + h + k - 1.
Poly growth_polynomial_by_interpolation(const ProblemSpec& spec);

/// Growth polynomial of the equal-sums count Psi_h(n) (h = k, m = c = 0).
Poly psi_polynomial(int h);

/// Coefficient of n^{2h-1} in psi_polynomial(h).
Rat psi_leading_coeff(int h);

/// First `count` coefficients of x(1 + 14x + 36x^2 + 14x^3 + x^4) / (1 - x)^6,
/// the ordinary generating function of Psi_3(n).
std::vector<BigInt> ogf_psi3_coeffs(std::size_t count);

}  // namespace linrel

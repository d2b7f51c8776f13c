#pragma once

// Closed-form counting through the generating function of the interval.
//
// With F_n(z) = 1 + z + ... + z^{n-1}, the count for (h, k, m, c) is the
// coefficient of z^c in z^{(h-k)m - k(n-1)} F_n(z)^{h+k}, i.e. the coefficient
// of z^w in F_n(z)^{h+k} with w = kn + c - k - (h-k)m.

#include <cstdint>
#include <optional>
#include <vector>

#include "linrel/bigint.hpp"
#include "linrel/oracle.hpp"

namespace linrel {

/// Truncated power series with exact coefficients; `shift` is the exponent
/// of the monomial factor carried alongside, so coeffs[i] multiplies z^{i+shift}.
struct SeriesVec {
  std::vector<BigInt> coeffs;
  std::int64_t shift = 0;

  std::int64_t w_max() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }
  /// Coefficient of z^exponent in the shifted series; zero outside the stored window.
  BigInt coefficient_of(std::int64_t exponent) const;
};

/// kn + c - k - (h-k)m: the exponent of F_n(z)^{h+k} that holds the count.
std::int64_t series_exponent(const ProblemSpec& spec, std::int64_t n);

/// Upper summation limit min(h+k, floor(w/n)), floor taken toward -infinity.
/// std::nullopt when w < 0, where no tuple can reach c.
std::optional<int> u0(const ProblemSpec& spec, std::int64_t n);

/// sum_{u=0}^{u0} (-1)^u C(h+k, u) C((k-u)n - (h-k)m + h + c - 1, h+k-1),
/// exact for every n >= 1; zero when c is outside the positivity range.
BigInt phi_closed(const ProblemSpec& spec, std::int64_t n);

/// Coefficients of F_n(z)^N for exponents 0..w_max.
SeriesVec fn_power_series(std::int64_t n, int N, std::int64_t w_max);

/// Reads the count off the shifted series expansion of F_n(z)^{h+k}.
BigInt phi_via_series(const ProblemSpec& spec, std::int64_t n);

/// Smallest n from which u0 is pinned at its limiting value:
/// |d| when d = c - k - (h-k)m < 0 (u0 = k-1), else d + 1 (u0 = k). At least 1.
std::int64_t n_threshold(const ProblemSpec& spec);

/// The limiting value of u0 (k-1 or k) reached for n >= n_threshold(spec).
int u0_stable(const ProblemSpec& spec);

}  // namespace linrel

#include "linrel/closed_form.hpp"

#include <algorithm>

#include "linrel/binomial.hpp"

namespace linrel {

namespace {

void require_positive_n(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
}

std::int64_t threshold_offset(const ProblemSpec& spec) {
  return spec.c - spec.k - static_cast<std::int64_t>(spec.h - spec.k) * spec.m;
}

// Coefficient of z^w in F_n(z)^N.
BigInt power_series_coefficient(std::int64_t n, int N, std::int64_t w) {
  const std::int64_t limit = std::min<std::int64_t>(N, w / n);
  BigInt total = 0;
  for (std::int64_t u = 0; u <= limit; ++u) {
    BigInt term = choose(N, static_cast<unsigned>(u)) *
                  choose(BigInt(w - u * n + N - 1), static_cast<unsigned>(N - 1));
    if (u % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

}  // namespace

BigInt SeriesVec::coefficient_of(std::int64_t exponent) const {
  const std::int64_t i = exponent - shift;
  if (i < 0 || i > w_max()) return 0;
  return coeffs[static_cast<std::size_t>(i)];
}

std::int64_t series_exponent(const ProblemSpec& spec, std::int64_t n) {
  return spec.k * n + threshold_offset(spec);
}

std::optional<int> u0(const ProblemSpec& spec, std::int64_t n) {
  spec.validate();
  require_positive_n(n);
  const std::int64_t w = series_exponent(spec, n);
  if (w < 0) return std::nullopt;
  return static_cast<int>(std::min<std::int64_t>(spec.h + spec.k, floor_div(w, n)));
}

BigInt phi_closed(const ProblemSpec& spec, std::int64_t n) {
  spec.validate();
  require_positive_n(n);
  const int N = spec.h + spec.k;
  const std::int64_t w = series_exponent(spec, n);
  if (w < 0 || w > N * (n - 1)) return 0;

  const int limit = *u0(spec, n);
  const std::int64_t shift = -static_cast<std::int64_t>(spec.h - spec.k) * spec.m + spec.h + spec.c - 1;
  BigInt total = 0;
  for (int u = 0; u <= limit; ++u) {
    const BigInt upper = BigInt(spec.k - u) * n + shift;
    BigInt term = choose(N, static_cast<unsigned>(u)) * choose(upper, static_cast<unsigned>(N - 1));
    if (u % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

SeriesVec fn_power_series(std::int64_t n, int N, std::int64_t w_max) {
  require_positive_n(n);
  if (N < 1) throw std::invalid_argument("series power must be >= 1");
  if (w_max < 0) throw std::invalid_argument("truncation order must be >= 0");
  SeriesVec series;
  series.coeffs.reserve(static_cast<std::size_t>(w_max) + 1);
  for (std::int64_t w = 0; w <= w_max; ++w) {
    series.coeffs.push_back(power_series_coefficient(n, N, w));
  }
  return series;
}

BigInt phi_via_series(const ProblemSpec& spec, std::int64_t n) {
  spec.validate();
  require_positive_n(n);
  const int N = spec.h + spec.k;
  const std::int64_t w = spec.c - static_cast<std::int64_t>(spec.h - spec.k) * spec.m + spec.k * (n - 1);
  if (w < 0 || w > N * (n - 1)) return 0;

  SeriesVec series = fn_power_series(n, N, w);
  series.shift = static_cast<std::int64_t>(spec.h - spec.k) * spec.m - spec.k * (n - 1);
  return series.coefficient_of(spec.c);
}

std::int64_t n_threshold(const ProblemSpec& spec) {
  spec.validate();
  const std::int64_t d = threshold_offset(spec);
  return std::max<std::int64_t>(1, d < 0 ? -d : d + 1);
}

int u0_stable(const ProblemSpec& spec) {
  spec.validate();
  return threshold_offset(spec) < 0 ? spec.k - 1 : spec.k;
}

}  // namespace linrel

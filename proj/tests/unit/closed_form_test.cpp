#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "linrel/closed_form.hpp"

namespace linrel {
namespace {

TEST(U0, Examples) {
  for (std::int64_t n = 2; n <= 30; ++n) EXPECT_EQ(u0({3, 2, 0, 0}, n), 1) << n;
  EXPECT_EQ(u0({3, 2, 0, 12}, 11), 2);
  for (int h = 1; h <= 4; ++h) {
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(u0({h, k, 0, 0}, 1), 0);
  }
}

TEST(U0, EmptyWhenExponentNegative) {
  // w = kn + c - k - (h-k)m < 0 means c is below every reachable value.
  EXPECT_FALSE(u0({1, 1, 0, -5}, 3).has_value());
  EXPECT_TRUE(u0({1, 1, 0, -2}, 3).has_value());
}

TEST(U0, FloorRoundsTowardNegativeInfinity) {
  // (3,2,0,-1) at n = 5: w = 10 - 1 - 2 = 7, floor(7/5) = 1.
  EXPECT_EQ(u0({3, 2, 0, -1}, 5), 1);
  // Capped at h + k.
  EXPECT_EQ(u0({1, 1, 0, 40}, 3), 2);
}

TEST(U0, StabilizesFromThreshold) {
  for (int h = 1; h <= 4; ++h) {
    for (int k = 1; k <= 4; ++k) {
      for (std::int64_t m = -3; m <= 3; ++m) {
        for (std::int64_t c = -15; c <= 15; ++c) {
          const ProblemSpec spec{h, k, m, c};
          const std::int64_t t = n_threshold(spec);
          const int stable = u0_stable(spec);
          EXPECT_TRUE(stable == k - 1 || stable == k);
          for (std::int64_t n = t; n <= t + 25; ++n) {
            ASSERT_EQ(u0(spec, n), stable) << spec.str() << " n=" << n;
          }
        }
      }
    }
  }
}

TEST(NThreshold, Examples) {
  EXPECT_EQ(n_threshold({3, 2, 0, 12}), 11);
  EXPECT_EQ(n_threshold({2, 2, 0, 0}), 2);
  for (int h = 1; h <= 5; ++h) {
    for (int k = 1; k <= 5; ++k) EXPECT_EQ(n_threshold({h, k, 0, k}), 1);
  }
  // u0 at n = 1 for (2,2,0,0) differs from the stable value 1.
  EXPECT_EQ(u0({2, 2, 0, 0}, 1), 0);
  EXPECT_EQ(u0_stable({2, 2, 0, 0}), 1);
}

TEST(PhiClosed, Examples) {
  EXPECT_EQ(phi_closed({2, 2, 0, 0}, 5), 85);
  EXPECT_EQ(phi_closed({3, 2, 0, 12}, 3), phi_convolve({3, 2, 0, 12}, 3));
  EXPECT_EQ(phi_closed({3, 2, 0, 12}, 3), testing::brute_count(3, 2, 0, 12, 3));
  EXPECT_EQ(phi_closed({3, 2, 0, 12}, 11), 5665);
}

TEST(PhiClosed, SingleSubtrahendCase) {
  for (int h = 1; h <= 5; ++h) {
    for (std::int64_t n = 1; n <= 10; ++n) {
      EXPECT_EQ(phi_closed({h, 1, 0, 0}, n),
                testing::product_binomial(n + h - 1, static_cast<unsigned>(h)));
    }
  }
}

TEST(PhiClosed, ZeroExactlyOutsidePositivityRange) {
  for (int h = 1; h <= 4; ++h) {
    for (int k = 1; k + h <= 6; ++k) {
      for (std::int64_t m = -2; m <= 2; ++m) {
        for (std::int64_t n = 1; n <= 9; ++n) {
          const ValueRange range = positivity_range(h, k, m, n);
          for (std::int64_t c = range.min - 3; c <= range.max + 3; ++c) {
            EXPECT_EQ(phi_closed({h, k, m, c}, n).is_zero(), !range.contains(c));
          }
        }
      }
    }
  }
}

TEST(FnPowerSeries, Examples) {
  EXPECT_EQ(fn_power_series(2, 2, 2).coeffs, (std::vector<BigInt>{1, 2, 1}));
  EXPECT_EQ(fn_power_series(3, 2, 4).coeffs, (std::vector<BigInt>{1, 2, 3, 2, 1}));
  EXPECT_EQ(fn_power_series(4, 3, 9).coeffs, testing::naive_power_series(4, 3, 9));
  // Past the top degree the coefficients vanish.
  const SeriesVec s = fn_power_series(3, 2, 7);
  EXPECT_EQ(s.coeffs[5], 0);
  EXPECT_EQ(s.coeffs[7], 0);
}

TEST(FnPowerSeries, MatchesRepeatedMultiplication) {
  for (std::int64_t n = 1; n <= 8; ++n) {
    for (int N = 1; N <= 7; ++N) {
      const std::int64_t top = N * (n - 1);
      const SeriesVec s = fn_power_series(n, N, top + 3);
      EXPECT_EQ(s.coeffs, testing::naive_power_series(n, N, top + 3)) << n << " " << N;

      BigInt sum = 0;
      for (std::int64_t w = 0; w <= top; ++w) {
        sum += s.coeffs[static_cast<std::size_t>(w)];
        EXPECT_EQ(s.coeffs[static_cast<std::size_t>(w)], s.coeffs[static_cast<std::size_t>(top - w)]);
      }
      EXPECT_EQ(sum, pow(BigInt(n), static_cast<unsigned>(N)));
    }
  }
}

TEST(SeriesVec, ShiftedLookup) {
  SeriesVec s = fn_power_series(3, 2, 4);
  s.shift = -4;
  EXPECT_EQ(s.coefficient_of(-4), 1);
  EXPECT_EQ(s.coefficient_of(-2), 3);
  EXPECT_EQ(s.coefficient_of(0), 1);
  EXPECT_EQ(s.coefficient_of(1), 0);
  EXPECT_EQ(s.coefficient_of(-5), 0);
}

TEST(PhiViaSeries, Examples) {
  for (std::int64_t n = 1; n <= 10; ++n) {
    EXPECT_EQ(phi_via_series({2, 2, 0, 0}, n), (2 * n * n * n + n) / 3) << n;
  }
  EXPECT_EQ(phi_via_series({3, 2, 1, 0}, 4), phi_convolve({3, 2, 1, 0}, 4));
  for (std::int64_t m = -3; m <= 3; ++m) {
    for (std::int64_t n = 1; n <= 9; ++n) {
      for (std::int64_t c = -12; c <= 12; ++c) {
        EXPECT_EQ(phi_via_series({1, 1, m, c}, n), std::max<std::int64_t>(0, n - std::abs(c)));
      }
    }
  }
}

TEST(TripleAgreement, FullGrid) {
  for (int arity = 2; arity <= 6; ++arity) {
    for (int h = 1; h < arity; ++h) {
      const int k = arity - h;
      for (std::int64_t m = -2; m <= 2; ++m) {
        for (std::int64_t n = 1; n <= 12; ++n) {
          for (std::int64_t c = -10; c <= 10; ++c) {
            const ProblemSpec spec{h, k, m, c};
            const BigInt oracle = phi_convolve(spec, n);
            ASSERT_EQ(phi_closed(spec, n), oracle) << spec.str() << " n=" << n;
            ASSERT_EQ(phi_via_series(spec, n), oracle) << spec.str() << " n=" << n;
          }
        }
      }
    }
  }
}

TEST(PhiClosed, LargeArityAndN) {
  // h + k = 12 at n = 10^4 stays exact.
  const ProblemSpec spec{7, 5, -3, 11};
  EXPECT_EQ(phi_closed(spec, 10'000), phi_convolve(spec, 10'000));
  EXPECT_EQ(phi_closed(spec, 10'000), phi_via_series(spec, 10'000));
}

TEST(ClosedForm, RejectsBadInput) {
  EXPECT_THROW(phi_closed({0, 1, 0, 0}, 3), std::invalid_argument);
  EXPECT_THROW(phi_closed({1, 1, 0, 0}, 0), std::invalid_argument);
  EXPECT_THROW(fn_power_series(0, 2, 3), std::invalid_argument);
  EXPECT_THROW(fn_power_series(2, 0, 3), std::invalid_argument);
  EXPECT_THROW(fn_power_series(2, 2, -1), std::invalid_argument);
}

}  // namespace
}  // namespace linrel

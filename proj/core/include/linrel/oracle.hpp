#pragma once

// Ground-truth counts for (a_1+...+a_h) - (a_{h+1}+...+a_{h+k}) = c.
//
// Two independent routes: literal enumeration of tuples (tiny instances only)
// and convolution of representation profiles (polynomial in n and h+k).

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "linrel/bigint.hpp"

namespace linrel {

/// One counting problem: h positive summands, k negative summands, the
/// interval I_{m,n} = {m, ..., m+n-1} and the target value c.
struct ProblemSpec {
  int h = 1;
  int k = 1;
  std::int64_t m = 0;
  std::int64_t c = 0;

  /// Throws std::invalid_argument unless h >= 1 and k >= 1.
  void validate() const;
  /// The mirrored problem (k, h, m, -c), which has the same count.
  ProblemSpec mirrored() const { return {k, h, m, -c}; }
  std::string str() const;

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// Nonempty, strictly increasing set of integers.
class IntSet {
 public:
  /// Sorts and removes duplicates. Throws std::invalid_argument when empty.
  explicit IntSet(std::vector<std::int64_t> elements);
  /// {m, m+1, ..., m+n-1}; requires n >= 1.
  static IntSet interval(std::int64_t m, std::int64_t n);

  std::span<const std::int64_t> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::int64_t min() const { return elements_.front(); }
  std::int64_t max() const { return elements_.back(); }
  bool is_interval() const { return max() - min() + 1 == static_cast<std::int64_t>(size()); }

  friend bool operator==(const IntSet&, const IntSet&) = default;

 private:
  std::vector<std::int64_t> elements_;
};

/// counts[i] is the number of ordered h-tuples from A whose sum is base + i,
/// over the full range [h*min(A), h*max(A)].
struct RepProfile {
  std::int64_t base = 0;
  std::vector<BigInt> counts;

  std::int64_t last() const { return base + static_cast<std::int64_t>(counts.size()) - 1; }
  /// Zero outside the stored range.
  BigInt at(std::int64_t sum) const;
  BigInt total() const;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

RepProfile rep_profile(const IntSet& set, int h);

/// Counts by visiting every tuple of I_{m,n}^{h+k}. Throws BudgetExceeded when
/// n^(h+k) exceeds `budget`; use phi_convolve for larger instances.
BigInt phi_enumerate(const ProblemSpec& spec, std::int64_t n,
                     std::uint64_t budget = kDefaultEnumerationBudget);

/// Enumerates I_{m,n}^{h+k} once and tallies every difference value.
/// Entry i is the count for c = positivity_range(h, k, m, n).min + i.
std::vector<std::uint64_t> enumerate_difference_counts(
    int h, int k, std::int64_t m, std::int64_t n,
    std::uint64_t budget = kDefaultEnumerationBudget);

/// sum_x r_{I,h}(x) * r_{I,k}(x - c) over the interval I = I_{m,n}.
BigInt phi_convolve(const ProblemSpec& spec, std::int64_t n);

/// Number of 2h-tuples from A with equal front and back sums.
BigInt psi(const IntSet& set, int h);

struct ValueRange {
  std::int64_t min = 0;
  std::int64_t max = 0;
  bool contains(std::int64_t v) const { return min <= v && v <= max; }
  friend bool operator==(const ValueRange&, const ValueRange&) = default;
};

/// Closed range of c for which the count over I_{m,n} is positive:
/// -kn + k + (h-k)m <= c <= hn - h + (h-k)m.
ValueRange positivity_range(int h, int k, std::int64_t m, std::int64_t n);

}  // namespace linrel

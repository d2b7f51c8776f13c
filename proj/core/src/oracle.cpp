#include "linrel/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace linrel {

namespace {

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

void require_within_budget(std::int64_t n, int arity, std::uint64_t budget) {
  const BigInt tuples = pow(BigInt(n), static_cast<unsigned>(arity));
  if (tuples > budget) {
    throw BudgetExceeded("enumeration of " + tuples.str() + " tuples exceeds budget of " +
                         std::to_string(budget) + "; use the convolution route instead");
  }
}

// Convolves `profile` with the indicator of `set`.
RepProfile convolve_with(const RepProfile& profile, const IntSet& set) {
  RepProfile out;
  out.base = profile.base + set.min();
  const auto span = static_cast<std::size_t>(set.max() - set.min());
  out.counts.assign(profile.counts.size() + span, BigInt(0));

  if (set.is_interval()) {
    // Sliding window of width |set| over the previous counts.
    BigInt window = 0;
    const std::size_t width = set.size();
    for (std::size_t i = 0; i < out.counts.size(); ++i) {
      if (i < profile.counts.size()) window += profile.counts[i];
      if (i >= width) window -= profile.counts[i - width];
      out.counts[i] = window;
    }
    return out;
  }

  for (const std::int64_t a : set.elements()) {
    const auto offset = static_cast<std::size_t>(a - set.min());
    for (std::size_t i = 0; i < profile.counts.size(); ++i) {
      if (!profile.counts[i].is_zero()) out.counts[i + offset] += profile.counts[i];
    }
  }
  return out;
}

}  // namespace

void ProblemSpec::validate() const {
  if (h < 1 || k < 1) {
    throw std::invalid_argument("h and k must be >= 1 (got " + str() + ")");
  }
}

std::string ProblemSpec::str() const {
  std::ostringstream os;
  os << "(h=" << h << ", k=" << k << ", m=" << m << ", c=" << c << ")";
  return os.str();
}

IntSet::IntSet(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty()) throw std::invalid_argument("integer set must be nonempty");
}

IntSet IntSet::interval(std::int64_t m, std::int64_t n) {
  require_positive(n, "interval length");
  std::vector<std::int64_t> v(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = m + i;
  return IntSet(std::move(v));
}

BigInt RepProfile::at(std::int64_t sum) const {
  if (sum < base || sum > last()) return 0;
  return counts[static_cast<std::size_t>(sum - base)];
}

BigInt RepProfile::total() const {
  BigInt t = 0;
  for (const auto& c : counts) t += c;
  return t;
}

RepProfile rep_profile(const IntSet& set, int h) {
  if (h < 1) throw std::invalid_argument("h must be >= 1");
  RepProfile profile{0, {BigInt(1)}};
  for (int i = 0; i < h; ++i) profile = convolve_with(profile, set);
  return profile;
}

std::vector<std::uint64_t> enumerate_difference_counts(int h, int k, std::int64_t m,
                                                       std::int64_t n, std::uint64_t budget) {
  ProblemSpec{h, k, m, 0}.validate();
  require_positive(n, "n");
  const int arity = h + k;
  require_within_budget(n, arity, budget);

  const ValueRange range = positivity_range(h, k, m, n);
  std::vector<std::uint64_t> tally(static_cast<std::size_t>(range.max - range.min + 1), 0);

  // Odometer over offsets a_i - m in [0, n); the running value is the
  // left-hand side of the equation for the current tuple.
  std::vector<std::int64_t> digit(static_cast<std::size_t>(arity), 0);
  std::int64_t value = static_cast<std::int64_t>(h - k) * m;
  const std::int64_t top = n - 1;
  while (true) {
    ++tally[static_cast<std::size_t>(value - range.min)];
    int pos = arity - 1;
    while (pos >= 0) {
      const std::int64_t sign = pos < h ? 1 : -1;
      auto& d = digit[static_cast<std::size_t>(pos)];
      if (d < top) {
        ++d;
        value += sign;
        break;
      }
      value -= sign * top;
      d = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return tally;
}

BigInt phi_enumerate(const ProblemSpec& spec, std::int64_t n, std::uint64_t budget) {
  spec.validate();
  require_positive(n, "n");
  require_within_budget(n, spec.h + spec.k, budget);

  const std::int64_t top = n - 1;
  const int arity = spec.h + spec.k;
  std::vector<std::int64_t> digit(static_cast<std::size_t>(arity), 0);
  std::int64_t value = static_cast<std::int64_t>(spec.h - spec.k) * spec.m;
  std::uint64_t count = 0;
  while (true) {
    if (value == spec.c) ++count;
    int pos = arity - 1;
    while (pos >= 0) {
      const std::int64_t sign = pos < spec.h ? 1 : -1;
      auto& d = digit[static_cast<std::size_t>(pos)];
      if (d < top) {
        ++d;
        value += sign;
        break;
      }
      value -= sign * top;
      d = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return count;
}

BigInt phi_convolve(const ProblemSpec& spec, std::int64_t n) {
  spec.validate();
  require_positive(n, "n");
  const IntSet interval = IntSet::interval(spec.m, n);
  const RepProfile plus = rep_profile(interval, spec.h);
  const RepProfile minus = spec.h == spec.k ? plus : rep_profile(interval, spec.k);

  // x ranges over sums of the positive part with x - c a sum of the negative part.
  const std::int64_t lo = std::max(plus.base, minus.base + spec.c);
  const std::int64_t hi = std::min(plus.last(), minus.last() + spec.c);
  BigInt total = 0;
  for (std::int64_t x = lo; x <= hi; ++x) {
    total += plus.counts[static_cast<std::size_t>(x - plus.base)] *
             minus.counts[static_cast<std::size_t>(x - spec.c - minus.base)];
  }
  return total;
}

BigInt psi(const IntSet& set, int h) {
  const RepProfile profile = rep_profile(set, h);
  BigInt total = 0;
  for (const auto& r : profile.counts) total += r * r;
  return total;
}

ValueRange positivity_range(int h, int k, std::int64_t m, std::int64_t n) {
  ProblemSpec{h, k, m, 0}.validate();
  require_positive(n, "n");
  const std::int64_t shift = static_cast<std::int64_t>(h - k) * m;
  return {-k * n + k + shift, h * n - h + shift};
}

}  // namespace linrel

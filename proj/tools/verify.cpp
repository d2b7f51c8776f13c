#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "commands.hpp"
#include "linrel/closed_form.hpp"
#include "linrel/growth.hpp"
#include "linrel/interpolate.hpp"

namespace linrel::cli {

namespace {

constexpr std::size_t kMaxSamples = 20;

std::int64_t parse_bound(std::string_view item, std::string_view value) {
  std::int64_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size() || out < 0) {
    throw std::invalid_argument("bad grid bound in '" + std::string(item) + "'");
  }
  return out;
}

class Checker {
 public:
  explicit Checker(VerifyReport& report) : report_(report) {}

  template <typename A, typename B>
  void expect_equal(const A& got, const B& want, const std::string& what) {
    ++report_.checks;
    if (got == want) return;
    std::ostringstream os;
    os << what << ": got " << got << ", expected " << want;
    fail(os.str());
  }

  void expect(bool ok, const std::string& what) {
    ++report_.checks;
    if (!ok) fail(what);
  }

 private:
  void fail(std::string message) {
    ++report_.disagreements;
    if (report_.samples.size() < kMaxSamples) report_.samples.push_back(std::move(message));
  }

  VerifyReport& report_;
};

std::string at(const ProblemSpec& spec, std::int64_t n) {
  return spec.str() + " n=" + std::to_string(n);
}

}  // namespace

Grid parse_grid(std::string_view text) {
  Grid grid;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string_view item = text.substr(start, end - start);
    start = end + 1;
    if (item.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto le = item.find("<=");
    if (le == std::string_view::npos) {
      throw std::invalid_argument("grid item '" + std::string(item) + "' must look like key<=bound");
    }
    const std::string_view key = item.substr(0, le);
    const std::int64_t bound = parse_bound(item, item.substr(le + 2));
    if (key == "hk" || key == "h+k") {
      if (bound < 2) throw std::invalid_argument("hk bound must be >= 2");
      grid.max_arity = static_cast<int>(bound);
    } else if (key == "|m|") {
      grid.max_abs_m = bound;
    } else if (key == "|c|") {
      grid.max_abs_c = bound;
    } else if (key == "n") {
      if (bound < 1) throw std::invalid_argument("n bound must be >= 1");
      grid.max_n = bound;
    } else {
      throw std::invalid_argument("unknown grid key '" + std::string(key) + "'");
    }
    if (end == text.size()) break;
  }
  return grid;
}

VerifyReport run_verification(const Grid& grid, bool inject_fault) {
  VerifyReport report;
  Checker check(report);
  bool fault_pending = inject_fault;

  for (int arity = 2; arity <= grid.max_arity; ++arity) {
    for (int h = 1; h < arity; ++h) {
      const int k = arity - h;
      for (std::int64_t m = -grid.max_abs_m; m <= grid.max_abs_m; ++m) {
        for (std::int64_t n = 1; n <= grid.max_n; ++n) {
          const ValueRange range = positivity_range(h, k, m, n);

          // One literal enumeration per (h, k, m, n) covers every c at once.
          std::vector<std::uint64_t> tally;
          const bool enumerable =
              pow(BigInt(n), static_cast<unsigned>(arity)) <= kDefaultEnumerationBudget;
          if (enumerable) tally = enumerate_difference_counts(h, k, m, n);

          BigInt total = 0;
          for (std::int64_t c = range.min; c <= range.max; ++c) {
            total += phi_closed({h, k, m, c}, n);
          }
          check.expect_equal(total, pow(BigInt(n), static_cast<unsigned>(arity)),
                             "total count over all c for " + at({h, k, m, 0}, n));

          for (std::int64_t c = -grid.max_abs_c; c <= grid.max_abs_c; ++c) {
            const ProblemSpec spec{h, k, m, c};
            BigInt closed = phi_closed(spec, n);
            if (fault_pending) {
              closed += 1;
              fault_pending = false;
            }
            const BigInt convolved = phi_convolve(spec, n);
            check.expect_equal(closed, convolved, "closed vs convolve at " + at(spec, n));
            check.expect_equal(phi_via_series(spec, n), convolved,
                               "series vs convolve at " + at(spec, n));
            if (enumerable) {
              const BigInt enumerated =
                  range.contains(c) ? BigInt(tally[static_cast<std::size_t>(c - range.min)]) : BigInt(0);
              check.expect_equal(enumerated, convolved, "enumerate vs convolve at " + at(spec, n));
            }
            check.expect_equal(phi_convolve(spec.mirrored(), n), convolved,
                               "mirror symmetry at " + at(spec, n));
            if (h == k) {
              check.expect_equal(convolved, phi_convolve({h, k, 0, c}, n),
                                 "translation invariance at " + at(spec, n));
            }
            check.expect(range.contains(c) == !convolved.is_zero(),
                         "positivity range at " + at(spec, n));
          }
        }
      }

      for (std::int64_t m = -grid.max_abs_m; m <= grid.max_abs_m; ++m) {
        for (std::int64_t c = -grid.max_abs_c; c <= grid.max_abs_c; ++c) {
          const ProblemSpec spec{h, k, m, c};
          const GrowthResult growth = growth_polynomial(spec);
          const std::string where = spec.str();
          check.expect(growth.poly.degree() == static_cast<std::size_t>(arity - 1),
                       "growth polynomial degree for " + where);
          const Rat lead = growth.poly.leading_coeff();
          check.expect(lead > 0 && lead <= 1, "leading coefficient in (0, 1] for " + where);
          check.expect(growth.n0_observed <= growth.n0_bound, "n0 ordering for " + where);
          check.expect_equal(growth_polynomial_by_interpolation(spec), growth.poly,
                             "interpolated growth polynomial for " + where);
          const std::int64_t top = std::max(growth.n0_bound, grid.max_n);
          for (std::int64_t n = growth.n0_observed; n <= top; ++n) {
            check.expect_equal(poly_eval(growth.poly, n), Rat(phi_convolve(spec, n)),
                               "growth polynomial value at " + at(spec, n));
          }
          for (std::int64_t n = growth.n0_bound; n <= top; ++n) {
            check.expect(u0(spec, n) == growth.u0_fixed, "stable u0 at " + at(spec, n));
          }
        }
      }
    }
  }
  return report;
}

}  // namespace linrel::cli

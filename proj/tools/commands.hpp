#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "linrel/oracle.hpp"

namespace linrel::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kFailure = 2,  // disagreement between methods or a failed invariant
  kBudget = 3,
};

enum class OutputFormat { kText, kJson, kCsv };

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `interval:m:n` or `set:a,b,c,...`. Throws std::invalid_argument.
IntSet parse_set_spec(std::string_view text);

/// Bounds of the cross-check grid, written as e.g. "hk<=6,|m|<=2,|c|<=10,n<=12".
/// Items left out keep their defaults.
struct Grid {
  int max_arity = 6;
  std::int64_t max_abs_m = 2;
  std::int64_t max_abs_c = 10;
  std::int64_t max_n = 12;
};

Grid parse_grid(std::string_view text);

struct VerifyReport {
  std::uint64_t checks = 0;
  std::uint64_t disagreements = 0;
  /// First few failure descriptions, for display.
  std::vector<std::string> samples;

  bool passed() const { return disagreements == 0; }
};

/// Cross-checks every counting route and structural identity over the grid.
/// `inject_fault` perturbs one closed-form value to exercise the failure path.
VerifyReport run_verification(const Grid& grid, bool inject_fault = false);

}  // namespace linrel::cli

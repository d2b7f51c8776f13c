#pragma once

// Additive energy omega_h(A) = Psi_h(A) / |A|^{2h-1}, Freiman constant
// kappa_h(A) = |hA| / |A|, and their product, which Cauchy-Schwarz bounds
// below by 1.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "linrel/bigint.hpp"
#include "linrel/oracle.hpp"
#include "linrel/polynomial.hpp"
#include "linrel/rational.hpp"

namespace linrel {

/// |hA|, the number of distinct sums of h elements of A.
BigInt sumset_size(const IntSet& set, int h);

struct EnergyReport {
  IntSet set;
  int h = 1;
  BigInt psi;
  BigInt sumset_size;
  Rat omega;
  Rat kappa;
  Rat product;
};

/// Throws BudgetExceeded when the dense representation profile would hold
/// more than `budget` entries.
EnergyReport energy_report(const IntSet& set, int h,
                           std::uint64_t budget = kDefaultEnumerationBudget);

/// omega_h(I_n) as psi_polynomial(h) / n^{2h-1} and kappa_h(I_n) = (hn - h + 1)/n.
struct IntervalEnergy {
  int h = 1;
  Poly psi;
  unsigned denominator_exponent = 1;

  Rat omega_at(std::int64_t n) const;
  Rat kappa_at(std::int64_t n) const;
  Rat product_at(std::int64_t n) const { return omega_at(n) * kappa_at(n); }
};

IntervalEnergy interval_energy_poly(int h);

/// One row of the leading-coefficient table: l(h) and U(h) = h * l(h),
/// the limit of kappa_h(I_n) * omega_h(I_n) as n grows.
struct UTableRow {
  int h = 1;
  Rat ell;
  Rat u;
  std::string ell_decimal;
  std::string u_decimal;
};

std::vector<UTableRow> u_table(std::span<const int> hs, int digits = 5);

}  // namespace linrel

#include "linrel/energy.hpp"

#include <algorithm>
#include <future>

#include "linrel/growth.hpp"

namespace linrel {

namespace {

void require_h(int h) {
  if (h < 1) throw std::invalid_argument("h must be >= 1");
}

void require_profile_budget(const IntSet& set, int h, std::uint64_t budget) {
  const BigInt length = BigInt(h) * (BigInt(set.max()) - set.min()) + 1;
  if (length > budget) {
    throw BudgetExceeded("representation profile of " + length.str() +
                         " entries exceeds budget of " + std::to_string(budget));
  }
}

}  // namespace

BigInt sumset_size(const IntSet& set, int h) {
  require_h(h);
  const RepProfile profile = rep_profile(set, h);
  return static_cast<std::uint64_t>(std::count_if(
      profile.counts.begin(), profile.counts.end(), [](const BigInt& r) { return !r.is_zero(); }));
}

EnergyReport energy_report(const IntSet& set, int h, std::uint64_t budget) {
  require_h(h);
  require_profile_budget(set, h, budget);
  const RepProfile profile = rep_profile(set, h);

  EnergyReport report{set, h, 0, 0, {}, {}, {}};
  for (const auto& r : profile.counts) {
    if (r.is_zero()) continue;
    report.psi += r * r;
    ++report.sumset_size;
  }
  const BigInt size = set.size();
  report.omega = Rat(report.psi, pow(size, static_cast<unsigned>(2 * h - 1)));
  report.kappa = Rat(report.sumset_size, size);
  report.product = report.omega * report.kappa;
  return report;
}

Rat IntervalEnergy::omega_at(std::int64_t n) const {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return poly_eval(psi, n) / Rat(pow(BigInt(n), denominator_exponent));
}

Rat IntervalEnergy::kappa_at(std::int64_t n) const {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return Rat(BigInt(h) * n - h + 1, BigInt(n));
}

IntervalEnergy interval_energy_poly(int h) {
  require_h(h);
  return {h, psi_polynomial(h), static_cast<unsigned>(2 * h - 1)};
}

std::vector<UTableRow> u_table(std::span<const int> hs, int digits) {
  for (const int h : hs) require_h(h);
  std::vector<std::future<UTableRow>> pending;
  pending.reserve(hs.size());
  for (const int h : hs) {
    pending.push_back(std::async(std::launch::async, [h, digits] {
      UTableRow row;
      row.h = h;
      row.ell = psi_leading_coeff(h);
      row.u = row.ell * Rat(h);
      row.ell_decimal = to_significant(row.ell, digits);
      row.u_decimal = to_significant(row.u, digits);
      return row;
    }));
  }
  std::vector<UTableRow> rows;
  rows.reserve(hs.size());
  for (auto& f : pending) rows.push_back(f.get());
  return rows;
}

}  // namespace linrel

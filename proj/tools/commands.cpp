#include "commands.hpp"

#include <charconv>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "linrel/closed_form.hpp"
#include "linrel/energy.hpp"
#include "linrel/growth.hpp"
#include "linrel/serialize.hpp"

namespace linrel::cli {

namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t out = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return out;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    parts.push_back(text.substr(start, end == std::string_view::npos ? end : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

json spec_json(const ProblemSpec& spec) {
  return {{"h", spec.h}, {"k", spec.k}, {"m", spec.m}, {"c", spec.c}};
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// Prints "key  value" lines with the values aligned.
void print_fields(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [key, value] : rows) width = std::max(width, key.size());
  for (const auto& [key, value] : rows) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << key << value << '\n';
  }
}

void print_csv_fields(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  out << "field,value\n";
  for (const auto& [key, value] : rows) out << key << ',' << value << '\n';
}

struct PhiArgs {
  int h = 1;
  int k = 1;
  std::int64_t m = 0;
  std::int64_t c = 0;
  std::int64_t n = 1;
  std::string method = "closed";
};

int cmd_phi(const PhiArgs& args, OutputFormat format, std::ostream& out, std::ostream& err) {
  const ProblemSpec spec{args.h, args.k, args.m, args.c};
  spec.validate();
  if (args.n < 1) throw UsageError("n must be >= 1");

  static const std::vector<std::string> kMethods = {"closed", "series", "convolve", "enumerate"};
  const bool all = args.method == "all";
  std::vector<std::string> methods = all ? kMethods : std::vector<std::string>{args.method};

  // Insertion-ordered results; nullopt marks an enumeration skipped for budget.
  std::vector<std::pair<std::string, std::optional<BigInt>>> results;
  for (const auto& method : methods) {
    if (method == "closed") {
      results.emplace_back(method, phi_closed(spec, args.n));
    } else if (method == "series") {
      results.emplace_back(method, phi_via_series(spec, args.n));
    } else if (method == "convolve") {
      results.emplace_back(method, phi_convolve(spec, args.n));
    } else if (method == "enumerate") {
      try {
        results.emplace_back(method, phi_enumerate(spec, args.n));
      } catch (const BudgetExceeded& e) {
        if (!all) throw;
        results.emplace_back(method, std::nullopt);
      }
    } else {
      throw UsageError("unknown method '" + method + "'");
    }
  }

  bool agree = true;
  const std::optional<BigInt>* reference = nullptr;
  for (const auto& entry : results) {
    if (!entry.second) continue;
    if (reference == nullptr) {
      reference = &entry.second;
    } else if (*entry.second != **reference) {
      agree = false;
    }
  }
  const std::string verdict = agree ? "AGREE" : "DISAGREE";

  switch (format) {
    case OutputFormat::kText:
      if (!all) {
        out << to_string(*results.front().second) << '\n';
        break;
      }
      for (const auto& [method, value] : results) {
        out << std::left << std::setw(11) << method
            << (value ? to_string(*value) : std::string("skipped (budget)")) << '\n';
      }
      out << verdict << '\n';
      break;
    case OutputFormat::kJson: {
      json counts = json::object();
      for (const auto& [method, value] : results) {
        counts[method] = value ? json(to_string(*value)) : json(nullptr);
      }
      json j = {{"spec", spec_json(spec)}, {"n", args.n}, {"counts", counts}};
      if (all) j["verdict"] = verdict;
      print_json(out, j);
      break;
    }
    case OutputFormat::kCsv:
      out << "method,count\n";
      for (const auto& [method, value] : results) {
        out << method << ',' << (value ? to_string(*value) : std::string("skipped")) << '\n';
      }
      if (all) out << "verdict," << verdict << '\n';
      break;
  }
  if (!agree) {
    err << "methods disagree for " << spec.str() << " n=" << args.n << '\n';
    return kFailure;
  }
  return kOk;
}

int cmd_poly(const ProblemSpec& spec, OutputFormat format, std::ostream& out) {
  spec.validate();
  const GrowthResult g = growth_polynomial(spec);
  if (format == OutputFormat::kJson) {
    print_json(out, {{"spec", spec_json(spec)},
                     {"poly", g.poly},
                     {"poly_text", g.poly.str()},
                     {"degree", *g.poly.degree()},
                     {"n0_bound", g.n0_bound},
                     {"n0_observed", g.n0_observed},
                     {"u0_fixed", g.u0_fixed}});
    return kOk;
  }
  std::vector<std::pair<std::string, std::string>> rows = {
      {"poly", g.poly.str()},
      {"degree", std::to_string(*g.poly.degree())},
      {"n0_bound", std::to_string(g.n0_bound)},
      {"n0_observed", std::to_string(g.n0_observed)},
      {"u0_fixed", std::to_string(g.u0_fixed)},
  };
  if (format == OutputFormat::kText) {
    print_fields(out, rows);
  } else {
    const auto coeffs = g.poly.coeffs();
    for (std::size_t e = coeffs.size(); e-- > 0;) {
      if (!coeffs[e].is_zero()) rows.emplace_back("coeff_" + std::to_string(e), coeffs[e].str());
    }
    print_csv_fields(out, rows);
  }
  return kOk;
}

int cmd_table(int max_h, const std::string& extra, int digits, OutputFormat format,
              std::ostream& out) {
  if (max_h < 1) throw UsageError("--max-h must be >= 1");
  if (digits < 1) throw UsageError("--digits must be >= 1");
  std::vector<int> hs;
  for (int h = 1; h <= max_h; ++h) hs.push_back(h);
  if (!extra.empty()) {
    for (const auto part : split(extra, ',')) {
      const auto h = parse_int(part, "--extra entry");
      if (h < 1) throw UsageError("--extra entries must be >= 1");
      if (std::find(hs.begin(), hs.end(), h) == hs.end()) hs.push_back(static_cast<int>(h));
    }
  }
  std::sort(hs.begin(), hs.end());
  const auto rows = u_table(hs, digits);

  switch (format) {
    case OutputFormat::kText: {
      std::size_t width = 8;
      for (const auto& r : rows) width = std::max({width, r.ell_decimal.size(), r.u_decimal.size()});
      const int w = static_cast<int>(width) + 2;
      out << std::right << std::setw(4) << "h" << "  " << std::left << std::setw(w) << "l(h)"
          << "U(h)" << '\n';
      for (const auto& r : rows) {
        out << std::right << std::setw(4) << r.h << "  " << std::left << std::setw(w)
            << r.ell_decimal << r.u_decimal << '\n';
      }
      break;
    }
    case OutputFormat::kJson: {
      json arr = json::array();
      for (const auto& r : rows) {
        arr.push_back({{"h", r.h},
                       {"ell", r.ell_decimal},
                       {"ell_exact", r.ell},
                       {"U", r.u_decimal},
                       {"U_exact", r.u}});
      }
      print_json(out, arr);
      break;
    }
    case OutputFormat::kCsv:
      out << "h,ell,U,ell_exact,U_exact\n";
      for (const auto& r : rows) {
        out << r.h << ',' << r.ell_decimal << ',' << r.u_decimal << ',' << r.ell << ',' << r.u
            << '\n';
      }
      break;
  }
  return kOk;
}

int cmd_verify(const std::string& grid_text, bool inject_fault, OutputFormat format,
               std::ostream& out) {
  Grid grid;
  try {
    grid = parse_grid(grid_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const VerifyReport report = run_verification(grid, inject_fault);
  const std::string status = report.passed() ? "PASS" : "FAIL";

  switch (format) {
    case OutputFormat::kText:
      for (const auto& s : report.samples) out << "  mismatch: " << s << '\n';
      out << report.checks << " checks\n";
      out << status << ", " << report.disagreements << " disagreements\n";
      break;
    case OutputFormat::kJson:
      print_json(out, {{"status", status},
                       {"checks", report.checks},
                       {"disagreements", report.disagreements},
                       {"samples", report.samples}});
      break;
    case OutputFormat::kCsv:
      print_csv_fields(out, {{"status", status},
                             {"checks", std::to_string(report.checks)},
                             {"disagreements", std::to_string(report.disagreements)}});
      break;
  }
  return report.passed() ? kOk : kFailure;
}

int cmd_energy(const std::string& set_text, int h, OutputFormat format, std::ostream& out) {
  IntSet set = [&] {
    try {
      return parse_set_spec(set_text);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (h < 1) throw UsageError("h must be >= 1");
  const EnergyReport r = energy_report(set, h);

  if (format == OutputFormat::kJson) {
    print_json(out, {{"set", set_text},
                     {"size", set.size()},
                     {"h", h},
                     {"psi", to_string(r.psi)},
                     {"sumset_size", to_string(r.sumset_size)},
                     {"omega", r.omega},
                     {"kappa", r.kappa},
                     {"product", r.product},
                     {"product_decimal", to_significant(r.product, 6)}});
    return kOk;
  }
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"set", set_text},
      {"size", std::to_string(set.size())},
      {"h", std::to_string(h)},
      {"psi", to_string(r.psi)},
      {"sumset_size", to_string(r.sumset_size)},
      {"omega", r.omega.str()},
      {"kappa", r.kappa.str()},
      {"product", r.product.str()},
      {"product_decimal", to_significant(r.product, 6)},
  };
  if (format == OutputFormat::kText) {
    print_fields(out, rows);
  } else {
    print_csv_fields(out, rows);
  }
  return kOk;
}

int cmd_ogf(int count, OutputFormat format, std::ostream& out) {
  if (count < 1) throw UsageError("--count must be >= 1");
  const auto coeffs = ogf_psi3_coeffs(static_cast<std::size_t>(count));
  switch (format) {
    case OutputFormat::kText:
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        out << (j ? ", " : "") << to_string(coeffs[j]);
      }
      out << '\n';
      break;
    case OutputFormat::kJson: {
      json arr = json::array();
      for (const auto& c : coeffs) arr.push_back(to_string(c));
      print_json(out, arr);
      break;
    }
    case OutputFormat::kCsv:
      out << "j,coefficient\n";
      for (std::size_t j = 0; j < coeffs.size(); ++j) out << j << ',' << to_string(coeffs[j]) << '\n';
      break;
  }
  return kOk;
}

}  // namespace

IntSet parse_set_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("set spec must be interval:m:n or set:a,b,...");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view body = text.substr(colon + 1);
  if (kind == "interval") {
    const auto parts = split(body, ':');
    if (parts.size() != 2) throw std::invalid_argument("interval spec must be interval:m:n");
    const auto m = parse_int(parts[0], "interval start");
    const auto n = parse_int(parts[1], "interval length");
    if (n < 1) throw std::invalid_argument("interval length must be >= 1");
    return IntSet::interval(m, n);
  }
  if (kind == "set") {
    std::vector<std::int64_t> elements;
    for (const auto part : split(body, ',')) elements.push_back(parse_int(part, "set element"));
    return IntSet(std::move(elements));
  }
  throw std::invalid_argument("unknown set kind '" + std::string(kind) + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of (a_1+...+a_h) - (a_{h+1}+...+a_{h+k}) = c over integer intervals"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  PhiArgs phi;
  auto* phi_cmd = app.add_subcommand("phi", "Count solutions for one (h, k, m, c, n)");
  phi_cmd->add_option("h_terms", phi.h, "Number of added terms h")->required();
  phi_cmd->add_option("k_terms", phi.k, "Number of subtracted terms k")->required();
  phi_cmd->add_option("m", phi.m)->required();
  phi_cmd->add_option("c", phi.c)->required();
  phi_cmd->add_option("n", phi.n)->required();
  phi_cmd->add_option("--method", phi.method, "closed|series|convolve|enumerate|all")
      ->check(CLI::IsMember({"closed", "series", "convolve", "enumerate", "all"}));

  ProblemSpec poly_spec;
  auto* poly_cmd = app.add_subcommand("poly", "Growth polynomial in n for (h, k, m, c)");
  poly_cmd->add_option("h_terms", poly_spec.h, "Number of added terms h")->required();
  poly_cmd->add_option("k_terms", poly_spec.k, "Number of subtracted terms k")->required();
  poly_cmd->add_option("m", poly_spec.m)->required();
  poly_cmd->add_option("c", poly_spec.c)->required();

  int max_h = 10;
  std::string extra;
  int digits = 5;
  auto* table_cmd = app.add_subcommand("table", "Leading coefficients l(h) and limits U(h)");
  table_cmd->add_option("--max-h", max_h, "Rows for h = 1..max-h");
  table_cmd->add_option("--extra", extra, "Additional comma-separated h values");
  table_cmd->add_option("--digits", digits, "Significant digits");

  std::string grid_text;
  bool inject_fault = false;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check every route over a grid");
  verify_cmd->add_option("--grid", grid_text, "e.g. \"hk<=6,|m|<=2,|c|<=10,n<=12\"");
  verify_cmd->add_flag("--inject-fault", inject_fault)->group("");

  std::string set_text;
  int energy_h = 2;
  auto* energy_cmd = app.add_subcommand("energy", "Additive energy of interval:m:n or set:a,b,...");
  energy_cmd->add_option("set", set_text)->required();
  energy_cmd->add_option("h_fold", energy_h, "Number of summands h")->required();

  int ogf_count = 10;
  auto* ogf_cmd = app.add_subcommand("ogf", "Coefficients of the Psi_3 generating function");
  ogf_cmd->add_option("--count", ogf_count, "Number of coefficients");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  const OutputFormat format = format_name == "json"  ? OutputFormat::kJson
                              : format_name == "csv" ? OutputFormat::kCsv
                                                     : OutputFormat::kText;
  try {
    if (phi_cmd->parsed()) return cmd_phi(phi, format, out, err);
    if (poly_cmd->parsed()) return cmd_poly(poly_spec, format, out);
    if (table_cmd->parsed()) return cmd_table(max_h, extra, digits, format, out);
    if (verify_cmd->parsed()) return cmd_verify(grid_text, inject_fault, format, out);
    if (energy_cmd->parsed()) return cmd_energy(set_text, energy_h, format, out);
    if (ogf_cmd->parsed()) return cmd_ogf(ogf_count, format, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace linrel::cli

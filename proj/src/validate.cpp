#include "sifca/validate.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

#include "parallel.hpp"
#include "sifca/coding_cost.hpp"
#include "sifca/io.hpp"

namespace sifca {
namespace {

constexpr double kAgreementRel = 1e-6;
constexpr double kOracleSlack = 1e-9;
constexpr double kRequiredAgreement = 0.99;
constexpr double kRegularCA = 1.0158;
constexpr double kRegularCATol = 0.0005;

std::string sig(double v) { return format_sig(v); }

std::string join_ids(const std::set<int>& ids) {
  std::string s;
  for (int id : ids) s += (s.empty() ? "" : ",") + std::to_string(id);
  return s;
}

CheckResult regular_checks_nc() {
  const double expected = 5.0 * sin_deg(66.0);
  const double a = nc_cost_class_i({0.0, deg(0.0)});
  const double b = nc_cost_class_ii({1.0, deg(0.0)});
  const double err = std::max(std::abs(a - expected), std::abs(b - expected));
  return {"regular NC cost = 5 sin 66°", err <= 1e-12, "worst error " + sig(err), {}};
}

std::vector<CheckResult> regular_checks_routing(const ClosedFormOptions& cf) {
  std::vector<CheckResult> out;
  const auto pts = terminals_class_i({0.0, deg(0.0)}).points();
  const double oracle = esmt_oracle(pts).total_cost;
  const auto closed = closed_form_class_i({0.0, deg(0.0)}, cf);

  const double rel1 = std::abs(closed.costs[0] - oracle) / oracle;
  CheckResult l1{"regular L_I-1 = oracle ESMT", rel1 <= kAgreementRel,
                 "L_I-1 " + sig(closed.costs[0]) + ", oracle " + sig(oracle), {}};
  if (!l1.pass) l1.case_ids = {1};
  out.push_back(l1);

  CheckResult same{"regular L_I-1 = L_I-2 = L_I-3", true, "", {}};
  double spread = 0.0;
  for (int i = 1; i < 3; ++i) spread = std::max(spread, std::abs(closed.costs[i] - closed.costs[0]));
  same.pass = spread <= 1e-12;
  same.detail = "spread " + sig(spread);
  if (!same.pass) same.case_ids = {1, 2, 3};
  out.push_back(same);

  const double ii = esmt_class_ii({1.0, deg(0.0)});
  const double ca_i = cost_advantage(nc_cost_class_i({0.0, deg(0.0)}), closed.minimum);
  const double ca_ii = cost_advantage(nc_cost_class_ii({1.0, deg(0.0)}), ii);
  const bool ok = std::abs(ii - oracle) <= 1e-9 && std::abs(ca_i - kRegularCA) <= kRegularCATol &&
                  std::abs(ca_ii - kRegularCA) <= kRegularCATol;
  out.push_back({"regular CA = 1.0158 ± 0.0005 (Class I closed form, Class II oracle)", ok,
                 "CA_I " + sig(ca_i) + ", CA_II " + sig(ca_ii), {}});
  return out;
}

FormRow form_row(const std::string& name, const std::vector<GridCell>& grid, auto&& selected,
                 auto&& value) {
  FormRow row{name, 0, 0, std::numeric_limits<double>::infinity(),
              -std::numeric_limits<double>::infinity()};
  for (const auto& c : grid) {
    if (!selected(c)) continue;
    ++row.cells;
    const double v = value(c);
    if (!std::isfinite(v)) {
      ++row.non_finite;
      continue;
    }
    row.min_gap = std::min(row.min_gap, v - c.oracle);
    row.max_gap = std::max(row.max_gap, v - c.oracle);
  }
  if (row.cells == row.non_finite) row.min_gap = row.max_gap = std::nan("");
  return row;
}

}  // namespace

bool ValidateReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

ValidateReport run_validate(const ValidateOptions& options) {
  ValidateReport rep;
  rep.checks.push_back(regular_checks_nc());
  for (auto& c : regular_checks_routing(options.closed_form)) rep.checks.push_back(std::move(c));

  const int rows = std::max(options.rows, 2);
  const int cols = std::max(options.cols, 2);
  rep.grid.resize(static_cast<std::size_t>(rows) * cols);
  ClosedFormOptions literal = options.closed_form;
  literal.reading = FormulaReading::Literal;
  detail::parallel_for(rows * cols, options.threads, [&](int idx) {
    GridCell& c = rep.grid[idx];
    c.r = options.r_max * (idx / cols) / (rows - 1);
    c.theta = 36.0 * (idx % cols) / (cols - 1);
    const NodeClassIConfig cfg{c.r, deg(c.theta)};
    c.oracle = esmt_oracle(terminals_class_i(cfg).points()).total_cost;
    c.closed = closed_form_class_i(cfg, options.closed_form);
    c.literal = closed_form_class_i(cfg, literal);
  });

  int agree = 0;
  double worst_excess = -std::numeric_limits<double>::infinity();
  double worst_rel = 0.0;
  std::set<int> above_ids;
  std::set<int> below_ids;
  double worst_below = 0.0;
  for (const auto& c : rep.grid) {
    const double rel = std::abs(c.closed.minimum - c.oracle) / c.oracle;
    worst_rel = std::max(worst_rel, rel);
    if (rel <= kAgreementRel) ++agree;
    worst_excess = std::max(worst_excess, c.oracle - c.closed.minimum);
    if (c.oracle > c.closed.minimum + kOracleSlack) above_ids.insert(c.closed.argmin);
    if (c.closed.minimum - c.oracle > kAgreementRel * c.oracle) rep.above_oracle.push_back(c);
    // Every case value is the length of some tree, so none may undercut the
    // optimum.
    for (int k = 0; k < 5; ++k) {
      const double gap = c.closed.costs[k] - c.oracle;
      if (gap < -kOracleSlack) {
        below_ids.insert(k + 1);
        worst_below = std::min(worst_below, gap);
      }
    }
  }
  rep.agreement_fraction = static_cast<double>(agree) / static_cast<double>(rep.grid.size());

  const std::string dims = std::to_string(rows) + "x" + std::to_string(cols);
  rep.checks.push_back({"grid " + dims + ": oracle never above closed-form minimum + 1e-9",
                        above_ids.empty(), "worst oracle - closed " + sig(worst_excess),
                        {above_ids.begin(), above_ids.end()}});
  rep.checks.push_back({"grid " + dims + ": >= 99% of cells agree within 1e-6 relative",
                        rep.agreement_fraction >= kRequiredAgreement,
                        "agreement " + sig(rep.agreement_fraction) + ", worst relative gap " +
                            sig(worst_rel),
                        {}});
  CheckResult bound{"grid " + dims + ": no case formula below the oracle", below_ids.empty(),
                    "worst undercut " + sig(worst_below), {below_ids.begin(), below_ids.end()}};
  rep.checks.push_back(bound);

  using C4 = Case4Subcase;
  using C5 = Case5Subcase;
  rep.forms.push_back(form_row(
      "L_I-4-3 as printed", rep.grid, [](const GridCell& c) { return c.literal.case4 == C4::AboveBE; },
      [](const GridCell& c) { return c.literal.case4_forms[2]; }));
  rep.forms.push_back(form_row(
      "L_I-4-3 repaired (= L_I-4-2)", rep.grid,
      [](const GridCell& c) { return c.closed.case4 == C4::AboveBE; },
      [](const GridCell& c) { return c.closed.case4_forms[2]; }));
  rep.forms.push_back(form_row(
      "L_I-5-2 as printed (= L_I-5-1)", rep.grid,
      [](const GridCell& c) { return c.closed.case5 == C5::RightOfAC; },
      [](const GridCell& c) { return c.closed.case5_forms[1]; }));
  rep.forms.push_back(form_row(
      "L_I-5-3 in place of L_I-5-2", rep.grid,
      [](const GridCell& c) { return c.closed.case5 == C5::RightOfAC; },
      [](const GridCell& c) { return c.closed.case5_forms[2]; }));

  if (options.monotonicity) {
    rep.monotonicity = monotonicity_report();
    const double z = rep.monotonicity->dfdtheta_at_zero;
    rep.checks.push_back({"df/dtheta vanishes at theta = 0 (symmetry)", z <= 1e-6,
                          "max |df/dtheta| " + sig(z), {}});
  }
  return rep;
}

void print_validate(std::ostream& out, const ValidateReport& report) {
  for (const auto& c : report.checks) {
    out << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  [" << c.detail << "]";
    if (!c.case_ids.empty()) {
      out << "  case id " << join_ids(std::set<int>(c.case_ids.begin(), c.case_ids.end()));
    }
    out << '\n';
  }

  out << "\nprinted-formula discrepancy table (informational)\n";
  out << "  form                            cells  non-finite  min(form-oracle)  max(form-oracle)\n";
  for (const auto& f : report.forms) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "  %-31s %5d  %10d  %16s  %16s\n", f.form.c_str(), f.cells,
                  f.non_finite, format_sig(f.min_gap).c_str(), format_sig(f.max_gap).c_str());
    out << buf;
  }

  out << "\ncells where the closed-form minimum exceeds the oracle (relative > 1e-6): "
      << report.above_oracle.size() << '\n';
  for (const auto& c : report.above_oracle) {
    out << "  r " << format_sig(c.r) << "  theta " << format_sig(c.theta) << "  case "
        << c.closed.argmin << " (case4 " << to_string(c.closed.case4) << ", case5 "
        << to_string(c.closed.case5) << ")  closed " << format_sig(c.closed.minimum)
        << "  oracle " << format_sig(c.oracle) << '\n';
  }

  if (report.monotonicity) {
    const auto& m = *report.monotonicity;
    out << "\nmonotonicity findings (informational; tolerance -1e-8)\n";
    for (int k = 0; k < 5; ++k) {
      out << "  min y" << k + 1 << " = " << format_sig(m.min_y[k].value) << " at r "
          << format_sig(m.min_y[k].r) << ", theta " << format_sig(m.min_y[k].theta)
          << (m.min_y[k].value >= -1e-8 ? "  (nonnegative)" : "  (negative)") << '\n';
    }
    out << "  min df/dtheta = " << format_sig(m.min_dfdtheta.value) << " per degree at r "
        << format_sig(m.min_dfdtheta.r) << ", theta " << format_sig(m.min_dfdtheta.theta)
        << (m.dfdtheta_pass ? "  (nonnegative)" : "  (negative)") << '\n';
  }
  out << '\n' << (report.pass() ? "validate: all checks passed" : "validate: FAILED") << '\n';
}

}  // namespace sifca

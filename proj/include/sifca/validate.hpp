#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sifca/analysis.hpp"
#include "sifca/routing_cost.hpp"

namespace sifca {

struct ValidateOptions {
  ClosedFormOptions closed_form;
  int rows = 50;  // r in [0, r_max]
  int cols = 36;  // theta in [0°, 36°]
  double r_max = 0.45;
  unsigned threads = 0;
  bool monotonicity = true;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  /// Closed-form case numbers implicated in a failure.
  std::vector<int> case_ids;
};

/// One grid cell of the closed-form / oracle comparison.
struct GridCell {
  double r = 0.0;
  double theta = 0.0;
  double oracle = 0.0;
  CaseCostsClassI closed;
  CaseCostsClassI literal;
};

struct FormRow {
  std::string form;
  int cells = 0;       // cells where the form is the selected subcase
  int non_finite = 0;  // cells where it evaluates to NaN or infinity
  double min_gap = 0.0;  // min over finite cells of (form - oracle)
  double max_gap = 0.0;
};

struct ValidateReport {
  std::vector<CheckResult> checks;
  std::vector<GridCell> grid;
  /// Cells where the closed-form minimum exceeds the oracle by more than
  /// 1e-6 relative.
  std::vector<GridCell> above_oracle;
  std::vector<FormRow> forms;
  std::optional<MonotonicityReport> monotonicity;
  double agreement_fraction = 0.0;

  bool pass() const;
};

ValidateReport run_validate(const ValidateOptions& options = {});
void print_validate(std::ostream& out, const ValidateReport& report);

}  // namespace sifca

#include "sifca/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "sifca/coding_cost.hpp"
#include "sifca/errors.hpp"
#include "parallel.hpp"

namespace sifca {
namespace {

// Merge radius for a moved sink landing on another terminal.
constexpr double kMergeRadius = 1e-9;
constexpr double kMinDifferenceStep = 1e-7;
constexpr double kMonotonicityRMax = 0.24;

void check_range(const GridRange& g, const char* name) {
  const std::string n = name;
  if (!std::isfinite(g.min) || !std::isfinite(g.max) || !std::isfinite(g.step)) {
    throw SweepSpecError(n + " range must be finite");
  }
  if (g.min > g.max) throw SweepSpecError(n + " range has min > max");
  if (!(g.step > 0.0)) throw SweepSpecError(n + " step must be positive");
  if ((g.max - g.min) / g.step > 1e7) throw SweepSpecError(n + " range has too many cells");
}

CAField run_sweep(const SweepSpec& spec, const SweepOptions& options,
                  const std::function<CASample(double, double)>& cell) {
  spec.validate();
  CAField field;
  field.spec = spec;
  field.rows = spec.r.count();
  field.cols = spec.angle.count();
  field.samples.resize(static_cast<std::size_t>(field.rows) * field.cols);
  detail::parallel_for(field.rows * field.cols, options.threads, [&](int idx) {
    const int ri = idx / field.cols;
    const int ai = idx % field.cols;
    field.samples[idx] = cell(spec.r.at(ri), spec.angle.at(ai));
  });
  return field;
}

CASample finish(double r, double angle, double nc, double route, bool feasible) {
  CASample s{r, angle, nc, route, feasible, std::nullopt};
  if (feasible) s.ca = cost_advantage(nc, route);
  return s;
}

// Selected-subcase costs for cases 1..5 at (r, theta), with the subcases
// frozen at `ref`'s selection so differences never straddle a switch.
std::array<double, 5> frozen_costs(double r, double theta, const CaseCostsClassI& ref) {
  const auto c = closed_form_class_i({r, deg(theta)});
  auto out = c.costs;
  out[3] = c.case4_forms[static_cast<int>(ref.case4)];
  out[4] = c.case5_forms[static_cast<int>(ref.case5)];
  return out;
}

}  // namespace

const char* to_string(NodeClass c) { return c == NodeClass::I ? "I" : "II"; }

int GridRange::count() const {
  return static_cast<int>(std::floor((max - min) / step + 1e-9)) + 1;
}

double GridRange::at(int i) const { return min + i * step; }

SweepSpec SweepSpec::defaults(NodeClass c) {
  if (c == NodeClass::I) return {c, {0.0, 0.5, 0.0025}, {0.0, 36.0, 0.25}};
  return {c, {0.0, 1.5, 0.005}, {0.0, 48.0, 0.25}};
}

void SweepSpec::validate() const {
  check_range(r, "r");
  check_range(angle, "angle");
  if (r.min < 0.0) throw SweepSpecError("r range must be nonnegative");
}

double cost_advantage(double nc, double route) {
  if (!(nc > 0.0) || !(route > 0.0)) {
    throw NonPositiveCostError("cost_advantage: costs must be positive");
  }
  return route / nc;
}

CASample sample_class_i(double r, double theta, const ClosedFormOptions& options) {
  const NodeClassIConfig cfg{r, deg(theta)};
  const auto canonical = canonicalize_class_i(r, deg(theta));
  return finish(r, theta, nc_cost_class_i(cfg), closed_form_class_i(canonical, options).minimum,
                nc_feasible_class_i(cfg).feasible);
}

double route_cost_class_ii(const NodeClassIIConfig& cfg) {
  const auto all = terminals_class_ii(cfg).points();
  std::vector<Point> pts;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (i == 4) {
      const bool merged = std::any_of(all.begin(), all.end(), [&](const Point& p) {
        return &p != &all[4] && distance(p, all[4]) < kMergeRadius;
      });
      if (merged) continue;
    }
    pts.push_back(all[i]);
  }
  return esmt_oracle(pts).total_cost;
}

CASample sample_class_ii(double r, double alpha) {
  const NodeClassIIConfig cfg{r, deg(alpha)};
  return finish(r, alpha, nc_cost_class_ii(cfg), route_cost_class_ii(cfg),
                nc_feasible_class_ii(cfg).feasible);
}

CAField sweep_class_i(const SweepSpec& spec, const SweepOptions& options) {
  if (spec.node_class != NodeClass::I) throw SweepSpecError("sweep_class_i needs a Class I spec");
  return run_sweep(spec, options, [&](double r, double a) {
    return sample_class_i(r, a, options.closed_form);
  });
}

CAField sweep_class_ii(const SweepSpec& spec, const SweepOptions& options) {
  if (spec.node_class != NodeClass::II) throw SweepSpecError("sweep_class_ii needs a Class II spec");
  return run_sweep(spec, options, [](double r, double a) { return sample_class_ii(r, a); });
}

CAField sweep(const SweepSpec& spec, const SweepOptions& options) {
  return spec.node_class == NodeClass::I ? sweep_class_i(spec, options)
                                         : sweep_class_ii(spec, options);
}

MaxCA max_ca(const CAField& field) {
  std::optional<MaxCA> best;
  for (const auto& s : field.samples) {
    if (!s.ca) continue;
    if (!best || *s.ca > best->ca) best = MaxCA{s.r, s.angle, *s.ca};
  }
  if (!best) throw InfeasibleFieldError("max_ca: no feasible cell in the field");
  return *best;
}

RegionSummary extract_region(const CAField& field, double threshold) {
  RegionSummary out;
  out.node_class = field.spec.node_class;
  out.threshold = threshold;
  try {
    out.max = max_ca(field);
  } catch (const InfeasibleFieldError&) {
  }
  const auto inside = [&](const CASample& s) { return s.ca && *s.ca >= threshold; };

  for (int ai = 0; ai < field.cols; ++ai) {
    int last = -1;
    for (int ri = 0; ri < field.rows; ++ri) {
      if (inside(field.at(ri, ai))) last = ri;
    }
    if (last < 0) continue;
    const CASample& in = field.at(last, ai);
    double r = in.r;
    if (last + 1 < field.rows) {
      const CASample& out_cell = field.at(last + 1, ai);
      if (out_cell.ca) {
        const double t = (*in.ca - threshold) / (*in.ca - *out_cell.ca);
        r = in.r + t * (out_cell.r - in.r);
      }
    }
    out.boundary.push_back({in.angle, r});
  }

  out.empty = out.boundary.empty();
  if (!out.empty) {
    double sum = 0.0;
    for (const auto& b : out.boundary) sum += b.r;
    out.mean_boundary_radius = sum / static_cast<double>(out.boundary.size());
    for (const auto& b : out.boundary) {
      out.max_boundary_deviation =
          std::max(out.max_boundary_deviation, std::abs(b.r - out.mean_boundary_radius));
    }
  }

  if (field.spec.node_class == NodeClass::II && !out.empty) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : field.samples) {
      if (inside(s)) best = std::min(best, s.r);
    }
    out.min_ca_distance = best;
  }
  return out;
}

MonotonicityReport monotonicity_report(const MonotonicityOptions& options) {
  if (options.r_step < kMinDifferenceStep || options.theta_step < kMinDifferenceStep ||
      options.r_sample_step < kMinDifferenceStep) {
    throw StepTooSmallError("monotonicity_report: difference step below 1e-7");
  }
  if (!(options.r_max >= 0.0 && options.r_max <= kMonotonicityRMax + 1e-12)) {
    throw SweepSpecError("monotonicity_report: r_max must lie in [0, 0.24]");
  }
  const double h = options.r_step;
  const GridRange rs{0.0, options.r_max, options.r_sample_step};
  const GridRange ts{0.0, 36.0, options.theta_step};

  MonotonicityReport rep;
  for (auto& m : rep.min_y) m.value = std::numeric_limits<double>::infinity();
  rep.min_dfdtheta.value = std::numeric_limits<double>::infinity();

  for (int i = 0; i < rs.count(); ++i) {
    const double r = rs.at(i);
    for (int j = 0; j < ts.count(); ++j) {
      const double t = std::min(ts.at(j), 36.0);
      const auto ref = closed_form_class_i({r, deg(t)});
      // Second-order one-sided differences where r - h would be negative.
      const bool central = r - h >= 0.0;
      const auto d = [&](auto&& f) {
        if (central) return (f(r + h) - f(r - h)) / (2.0 * h);
        return (-3.0 * f(r) + 4.0 * f(r + h) - f(r + 2.0 * h)) / (2.0 * h);
      };
      const double dnc = d([&](double x) { return nc_cost_class_i({x, deg(t)}); });
      for (int k = 0; k < 5; ++k) {
        const double dl = d([&](double x) { return frozen_costs(x, t, ref)[k]; });
        const double y = dnc - dl;
        if (y < rep.min_y[k].value) rep.min_y[k] = {y, r, t};
      }
    }
  }

  const double dt = options.theta_step;
  for (double r : options.fixed_r) {
    for (int j = 0; j < ts.count(); ++j) {
      const double t = std::min(ts.at(j), 36.0);
      // Reflections across the sector edges permute cases 4 and 5, so the
      // plain minimum is used here rather than frozen subcases.
      const auto f = [&](double theta) {
        return nc_cost_class_i({r, deg(theta)}) -
               closed_form_class_i(canonicalize_class_i(r, deg(theta))).minimum;
      };
      const double g = (f(t + dt) - f(t - dt)) / (2.0 * dt);
      if (g < rep.min_dfdtheta.value) rep.min_dfdtheta = {g, r, t};
      if (j == 0) rep.dfdtheta_at_zero = std::max(rep.dfdtheta_at_zero, std::abs(g));
    }
  }

  rep.y_pass = std::all_of(rep.min_y.begin(), rep.min_y.end(),
                           [&](const MonotonicityExtreme& m) { return m.value >= options.tolerance; });
  rep.dfdtheta_pass = rep.min_dfdtheta.value >= options.tolerance;
  return rep;
}

}  // namespace sifca

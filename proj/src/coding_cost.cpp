#include "sifca/coding_cost.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "sifca/errors.hpp"

namespace sifca {
namespace {

constexpr std::array<double, 5> kAnchorDirections{0.0, 72.0, 144.0, -144.0, -72.0};

void require_nonnegative(double r, const char* what) {
  if (r < 0.0) throw NegativeRadiusError(std::string(what) + ": negative radius");
}

// Appends a violation when ∠(p, vertex, q) >= threshold or is undefined.
constexpr double kBoundaryDeg = 1e-9;

void check_angle(FeasibilityVerdict& verdict, const std::string& name, Point vertex, Point p,
                 Point q) {
  const double limit = ModelConstants::lune_threshold.value;
  try {
    const double a = angle_at(vertex, p, q).value;
    // Angles within rounding of the limit sit on the boundary.
    if (!(a < limit - kBoundaryDeg)) verdict.violations.push_back({name, a, limit});
  } catch (const DegenerateRayError&) {
    verdict.violations.push_back({name, std::numeric_limits<double>::quiet_NaN(), limit});
  }
}

}  // namespace

std::array<Point, 5> coding_anchors() {
  std::array<Point, 5> out{};
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = polar_to_point(ModelConstants::anchor_radius(), deg(kAnchorDirections[i]));
  }
  return out;
}

double nc_cost_class_i(const NodeClassIConfig& cfg) {
  require_nonnegative(cfg.r, "nc_cost_class_i");
  const double r = cfg.r;
  const double t = cfg.theta.value;
  const double s66 = sin_deg(66.0);
  const std::array<double, 5> phases{t, t + 72.0, t + 144.0, 144.0 - t, 72.0 - t};
  double sum = 0.0;
  for (double phase : phases) {
    sum += std::sqrt(r * r - 4.0 * s66 * r * cos_deg(phase) + 4.0 * s66 * s66);
  }
  return ModelConstants::flow_rate * sum;
}

double nc_cost_class_i_anchor_form(const NodeClassIConfig& cfg) {
  require_nonnegative(cfg.r, "nc_cost_class_i_anchor_form");
  const Point source = polar_to_point(cfg.r, cfg.theta);
  double sum = 0.0;
  for (const Point& anchor : coding_anchors()) sum += distance(source, anchor);
  return ModelConstants::flow_rate * sum;
}

FeasibilityVerdict nc_feasible_class_i(const NodeClassIConfig& cfg) {
  require_nonnegative(cfg.r, "nc_feasible_class_i");
  FeasibilityVerdict verdict;
  if (!(cfg.r < ModelConstants::circumradius)) {
    verdict.violations.push_back({"inside-circumcircle", cfg.r, ModelConstants::circumradius});
  }
  const TerminalSet t = terminals_class_i(cfg);
  static constexpr std::array<std::pair<Sink, Sink>, 5> kAdjacent{
      {{Sink::A, Sink::B}, {Sink::B, Sink::C}, {Sink::C, Sink::D}, {Sink::D, Sink::E},
       {Sink::E, Sink::A}}};
  for (auto [x, y] : kAdjacent) {
    std::string name = "angle ";
    name += sink_name(x);
    name += "O";
    name += sink_name(y);
    check_angle(verdict, name, t.source, t.sink(x), t.sink(y));
  }
  verdict.feasible = verdict.violations.empty();
  return verdict;
}

double nc_cost_class_ii(const NodeClassIIConfig& cfg) {
  require_nonnegative(cfg.r, "nc_cost_class_ii");
  const double r = cfg.r;
  const double a = cfg.alpha.value;
  const double first = std::sqrt(1.0 + r * r - 2.0 * r * cos_deg(132.0 - a));
  const double second = std::sqrt(1.0 + r * r - 2.0 * r * cos_deg(132.0 + a));
  return 3.0 * cos_deg(24.0) + ModelConstants::flow_rate * (first + second);
}

FeasibilityVerdict nc_feasible_class_ii(const NodeClassIIConfig& cfg) {
  require_nonnegative(cfg.r, "nc_feasible_class_ii");
  FeasibilityVerdict verdict;
  const TerminalSet t = terminals_class_ii(cfg);
  const Point o = t.source;
  const Point c = t.sink(Sink::C);
  const Point d = t.sink(Sink::D);
  const Point e = t.sink(Sink::E);
  check_angle(verdict, "angle DOE", o, d, e);
  check_angle(verdict, "angle OCD", c, o, d);
  check_angle(verdict, "angle CDO", d, c, o);
  verdict.feasible = verdict.violations.empty();
  return verdict;
}

}  // namespace sifca

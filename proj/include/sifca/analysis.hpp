#pragma once

#include <array>
#include <optional>
#include <vector>

#include "sifca/model.hpp"
#include "sifca/routing_cost.hpp"

namespace sifca {

enum class NodeClass { I, II };

const char* to_string(NodeClass c);

/// Inclusive grid [min, max] sampled at min + i * step.
struct GridRange {
  double min = 0.0;
  double max = 0.0;
  double step = 1.0;

  int count() const;
  double at(int i) const;
};

struct SweepSpec {
  NodeClass node_class = NodeClass::I;
  GridRange r;
  GridRange angle;  // degrees

  static SweepSpec defaults(NodeClass c);
  /// Throws SweepSpecError on inverted or non-finite ranges, non-positive
  /// steps, or negative radii.
  void validate() const;
};

struct CASample {
  double r = 0.0;
  double angle = 0.0;
  double nc_cost = 0.0;
  double route_cost = 0.0;
  bool feasible = false;
  std::optional<double> ca;  // present iff feasible
};

/// Row-major in r, then angle.
struct CAField {
  SweepSpec spec;
  int rows = 0;
  int cols = 0;
  std::vector<CASample> samples;

  const CASample& at(int ri, int ai) const { return samples[static_cast<std::size_t>(ri) * cols + ai]; }
};

struct SweepOptions {
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
  ClosedFormOptions closed_form;
};

double cost_advantage(double nc, double route);

CASample sample_class_i(double r, double theta, const ClosedFormOptions& options = {});
CASample sample_class_ii(double r, double alpha);

/// Oracle routing cost for Class II. A moved sink that lands on another
/// terminal is merged with it rather than rejected.
double route_cost_class_ii(const NodeClassIIConfig& cfg);

CAField sweep_class_i(const SweepSpec& spec, const SweepOptions& options = {});
CAField sweep_class_ii(const SweepSpec& spec, const SweepOptions& options = {});
CAField sweep(const SweepSpec& spec, const SweepOptions& options = {});

struct MaxCA {
  double r = 0.0;
  double angle = 0.0;
  double ca = 0.0;
};

/// Largest CA over feasible cells; ties go to the smallest r, then the
/// smallest angle. Throws InfeasibleFieldError if no cell is feasible.
MaxCA max_ca(const CAField& field);

struct BoundaryPoint {
  double angle = 0.0;
  double r = 0.0;
};

struct RegionSummary {
  NodeClass node_class = NodeClass::I;
  double threshold = 1.0;
  bool empty = true;
  std::optional<MaxCA> max;
  std::vector<BoundaryPoint> boundary;
  double mean_boundary_radius = 0.0;
  double max_boundary_deviation = 0.0;
  /// Class II only: smallest |OD| over cells with CA >= threshold.
  std::optional<double> min_ca_distance;
};

RegionSummary extract_region(const CAField& field, double threshold = 1.0);

struct MonotonicityOptions {
  double r_max = 0.24;
  /// Finite-difference step in r.
  double r_step = 1e-4;
  /// Sampling and difference step in theta, degrees.
  double theta_step = 0.05;
  /// Spacing of the sampled radii in [0, r_max].
  double r_sample_step = 0.0025;
  std::vector<double> fixed_r{0.20, 0.21, 0.22, 0.23, 0.24};
  double tolerance = -1e-8;
};

struct MonotonicityExtreme {
  double value = 0.0;
  double r = 0.0;
  double theta = 0.0;
};

struct MonotonicityReport {
  /// Minimum of y_i = d L_NC-I/dr - d L_I-i/dr over the sampled grid.
  std::array<MonotonicityExtreme, 5> min_y{};
  /// Minimum of df/dtheta (per degree) at the fixed radii,
  /// f = L_NC-I - min_i L_I-i.
  MonotonicityExtreme min_dfdtheta;
  /// Largest |df/dtheta| at theta = 0.
  double dfdtheta_at_zero = 0.0;
  bool y_pass = false;
  bool dfdtheta_pass = false;
  bool pass() const { return y_pass && dfdtheta_pass; }
};

/// Throws StepTooSmallError for steps below 1e-7 and SweepSpecError when
/// r_max lies outside [0, 0.24].
MonotonicityReport monotonicity_report(const MonotonicityOptions& options = {});

}  // namespace sifca

#pragma once

#include <array>
#include <string>
#include <vector>

#include "sifca/geometry.hpp"
#include "sifca/model.hpp"

namespace sifca {

/// One failed Lune-property constraint. `measured` and `threshold` are degrees
/// for angle constraints and circumradius units for "inside-circumcircle".
/// A NaN measurement means the angle was undefined (coincident terminals).
struct Violation {
  std::string constraint;
  double measured = 0.0;
  double threshold = 0.0;
};

struct FeasibilityVerdict {
  bool feasible = true;
  std::vector<Violation> violations;
};

/// Five fixed points at radius 2 sin 66° in the pentagon's edge-midpoint
/// directions (0°, ±72°, ±144°). The Class I coding cost is half the summed
/// distance from the source to these points.
std::array<Point, 5> coding_anchors();

/// Class I network-coding cost: the half-weighted sum of five radicals.
double nc_cost_class_i(const NodeClassIConfig& cfg);

/// The same cost evaluated as half the summed source-to-anchor distance.
double nc_cost_class_i_anchor_form(const NodeClassIConfig& cfg);

FeasibilityVerdict nc_feasible_class_i(const NodeClassIConfig& cfg);

/// Class II network-coding cost, with -2r cos(132° + alpha) in the last
/// radical.
double nc_cost_class_ii(const NodeClassIIConfig& cfg);

FeasibilityVerdict nc_feasible_class_ii(const NodeClassIIConfig& cfg);

}  // namespace sifca

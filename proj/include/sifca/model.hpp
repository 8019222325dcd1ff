#pragma once

#include <array>
#include <string_view>

#include "sifca/geometry.hpp"

namespace sifca {

/// Node Class I: the source O moves; r = |OO'|, theta = ∠OO'F measured from
/// the O'F ray toward A.
struct NodeClassIConfig {
  double r = 0.0;
  AngleDeg theta{};
};

/// Node Class II: sink D moves; r = |OD|, alpha = ∠DOD' (positive away from E).
struct NodeClassIIConfig {
  double r = 1.0;
  AngleDeg alpha{};
};

enum class Sink { A = 0, B = 1, C = 2, D = 3, E = 4 };

constexpr std::string_view sink_name(Sink s) {
  constexpr std::array<std::string_view, 5> names{"A", "B", "C", "D", "E"};
  return names[static_cast<int>(s)];
}

/// Source O, sinks A..E, and the fixed circumcenter O'.
///
/// Frame: O' at the origin, F (midpoint of AB) on +x, A at +36°, B at -36°,
/// C at -108°, D at 180°, E at +108°.
struct TerminalSet {
  Point source;
  std::array<Point, 5> sinks;
  Point fixed_center;

  const Point& sink(Sink s) const { return sinks[static_cast<std::size_t>(s)]; }
  /// {O, A, B, C, D, E}.
  std::array<Point, 6> points() const;
};

/// Polar direction (degrees) of each sink of the regular pentagon.
constexpr std::array<double, 5> kSinkDirections{36.0, -36.0, -108.0, 180.0, 108.0};

std::array<Point, 5> regular_sinks();

TerminalSet terminals_class_i(const NodeClassIConfig& cfg);
TerminalSet terminals_class_ii(const NodeClassIIConfig& cfg);

/// Maps (r, theta) to the congruent configuration with theta in [0°, 36°]
/// under the pentagon's dihedral symmetry.
NodeClassIConfig canonicalize_class_i(double r, AngleDeg theta_raw);

}  // namespace sifca

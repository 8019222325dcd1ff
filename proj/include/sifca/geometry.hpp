#pragma once

#include <cmath>
#include <numbers>

namespace sifca {

/// A point in the plane, in circumradius units.
struct Point {
  double x = 0.0;
  double y = 0.0;

  constexpr Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  constexpr Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
  constexpr Point operator*(double s) const { return {x * s, y * s}; }
  constexpr Point operator/(double s) const { return {x / s, y / s}; }
  constexpr bool operator==(const Point&) const = default;

  constexpr double dot(const Point& o) const { return x * o.x + y * o.y; }
  constexpr double cross(const Point& o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

/// An angle in degrees. Radians only appear inside trigonometric calls.
struct AngleDeg {
  double value = 0.0;

  constexpr double radians() const { return value * std::numbers::pi / 180.0; }
  /// Direction interpretation, reduced into [0, 360).
  AngleDeg normalized() const;

  constexpr AngleDeg operator+(AngleDeg o) const { return {value + o.value}; }
  constexpr AngleDeg operator-(AngleDeg o) const { return {value - o.value}; }
  constexpr AngleDeg operator-() const { return {-value}; }
  constexpr auto operator<=>(const AngleDeg&) const = default;
};

constexpr AngleDeg deg(double v) { return AngleDeg{v}; }

double sin_deg(double degrees);
double cos_deg(double degrees);

/// Constants of the (5+1) model.
struct ModelConstants {
  static constexpr double circumradius = 1.0;
  static constexpr double flow_rate = 0.5;
  static constexpr AngleDeg lune_threshold{120.0};
  /// Side of the regular pentagon, 2 sin 36°.
  static double pentagon_side();
  /// Distance from the circumcenter to the equilateral apex built outward on a
  /// pentagon side, 2 sin 66°.
  static double anchor_radius();
};

double distance(Point a, Point b);

/// Angle ∠p·vertex·q in [0°, 180°]. Throws DegenerateRayError if p or q
/// coincides with the vertex.
AngleDeg angle_at(Point vertex, Point p, Point q);

/// Point at distance r from origin along reference_direction + theta
/// (counterclockwise).
Point polar_to_point(double r, AngleDeg theta, Point origin = {},
                     AngleDeg reference_direction = {});

struct FermatResult {
  Point point;
  double length = 0.0;
};

/// Point minimizing the summed distance to a, b, c, via the equilateral
/// construction. Returns the offending vertex when a triangle angle is >= 120°.
FermatResult fermat_point(Point a, Point b, Point c);

/// Apex of the equilateral triangle on segment ab lying on the opposite side of
/// the line ab from `away`. When `away` is on the line, the apex is taken to
/// the right of a->b.
Point equilateral_apex(Point a, Point b, Point away);

}  // namespace sifca

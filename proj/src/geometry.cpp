#include "sifca/geometry.hpp"

#include <array>
#include <cmath>

#include "sifca/errors.hpp"

namespace sifca {

AngleDeg AngleDeg::normalized() const {
  double v = std::fmod(value, 360.0);
  if (v < 0.0) v += 360.0;
  if (v >= 360.0) v -= 360.0;
  return {v};
}

double sin_deg(double degrees) { return std::sin(degrees * std::numbers::pi / 180.0); }
double cos_deg(double degrees) { return std::cos(degrees * std::numbers::pi / 180.0); }

double ModelConstants::pentagon_side() { return 2.0 * sin_deg(36.0); }
double ModelConstants::anchor_radius() { return 2.0 * sin_deg(66.0); }

double distance(Point a, Point b) { return (a - b).norm(); }

AngleDeg angle_at(Point vertex, Point p, Point q) {
  const Point u = p - vertex;
  const Point w = q - vertex;
  if ((u.x == 0.0 && u.y == 0.0) || (w.x == 0.0 && w.y == 0.0)) {
    throw DegenerateRayError("angle_at: ray endpoint coincides with the vertex");
  }
  const double rad = std::atan2(std::abs(u.cross(w)), u.dot(w));
  return {rad * 180.0 / std::numbers::pi};
}

Point polar_to_point(double r, AngleDeg theta, Point origin, AngleDeg reference_direction) {
  if (r < 0.0) throw NegativeRadiusError("polar_to_point: negative radius");
  const double phi = (reference_direction + theta).radians();
  return {origin.x + r * std::cos(phi), origin.y + r * std::sin(phi)};
}

Point equilateral_apex(Point a, Point b, Point away) {
  const Point mid = (a + b) * 0.5;
  const Point ab = b - a;
  // Left normal of a->b, scaled to the triangle height.
  const Point left = Point{-ab.y, ab.x} * (std::sqrt(3.0) / 2.0);
  const double side = ab.cross(away - a);
  return side > 0.0 ? mid - left : mid + left;
}

FermatResult fermat_point(Point a, Point b, Point c) {
  const std::array<Point, 3> v{a, b, c};
  const double ab = distance(a, b);
  const double bc = distance(b, c);
  const double ca = distance(c, a);

  if (ab == 0.0) return {a, ca};
  if (bc == 0.0) return {b, ab};
  if (ca == 0.0) return {c, bc};

  // Vertex with an angle of 120° or more is the minimizer.
  for (int i = 0; i < 3; ++i) {
    const Point& x = v[i];
    const Point u = v[(i + 1) % 3] - x;
    const Point w = v[(i + 2) % 3] - x;
    if (u.dot(w) <= -0.5 * u.norm() * w.norm()) {
      return {x, u.norm() + w.norm()};
    }
  }

  // Torricelli: apex E on ab away from c; the Fermat point is where segment cE
  // meets the circumcircle of triangle abE, and the minimum sum is |cE|.
  const Point apex = equilateral_apex(a, b, c);
  const Point center = (a + b + apex) / 3.0;
  const Point dir = c - apex;
  const double t = -2.0 * dir.dot(apex - center) / dir.dot(dir);
  return {apex + dir * t, dir.norm()};
}

}  // namespace sifca

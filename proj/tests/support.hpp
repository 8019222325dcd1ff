#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "sifca/geometry.hpp"

namespace testing_support {

inline constexpr double kPi = std::numbers::pi;

inline double rad(double d) { return d * kPi / 180.0; }

// Points written out from trigonometry rather than through the library.
inline sifca::Point at(double r, double degrees) {
  return {r * std::cos(rad(degrees)), r * std::sin(rad(degrees))};
}

inline double dist(sifca::Point a, sifca::Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Interior angle at v in degrees, by the law of cosines.
inline double corner(sifca::Point v, sifca::Point p, sifca::Point q) {
  const double a = dist(v, p);
  const double b = dist(v, q);
  const double c = dist(p, q);
  double cosv = (a * a + b * b - c * c) / (2.0 * a * b);
  cosv = std::fmax(-1.0, std::fmin(1.0, cosv));
  return std::acos(cosv) * 180.0 / kPi;
}

inline std::vector<sifca::Point> random_points(std::mt19937_64& rng, int n, double spread = 1.0) {
  std::uniform_real_distribution<double> u(-spread, spread);
  std::vector<sifca::Point> pts;
  while (static_cast<int>(pts.size()) < n) {
    const sifca::Point p{u(rng), u(rng)};
    bool ok = true;
    for (const auto& q : pts) ok = ok && dist(p, q) > 1e-3;
    if (ok) pts.push_back(p);
  }
  return pts;
}

// Rotation by `degrees` about the origin followed by a translation.
inline sifca::Point move(sifca::Point p, double degrees, sifca::Point shift) {
  const double c = std::cos(rad(degrees));
  const double s = std::sin(rad(degrees));
  return {c * p.x - s * p.y + shift.x, s * p.x + c * p.y + shift.y};
}

}  // namespace testing_support

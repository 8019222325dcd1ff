#include "sifca/model.hpp"

#include <cmath>

#include "sifca/errors.hpp"

namespace sifca {

std::array<Point, 6> TerminalSet::points() const {
  return {source, sinks[0], sinks[1], sinks[2], sinks[3], sinks[4]};
}

std::array<Point, 5> regular_sinks() {
  std::array<Point, 5> out{};
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = polar_to_point(ModelConstants::circumradius, deg(kSinkDirections[i]));
  }
  return out;
}

TerminalSet terminals_class_i(const NodeClassIConfig& cfg) {
  if (cfg.r < 0.0) throw NegativeRadiusError("terminals_class_i: negative radius");
  TerminalSet t;
  t.fixed_center = {};
  t.sinks = regular_sinks();
  t.source = polar_to_point(cfg.r, cfg.theta);
  return t;
}

TerminalSet terminals_class_ii(const NodeClassIIConfig& cfg) {
  if (cfg.r < 0.0) throw NegativeRadiusError("terminals_class_ii: negative radius");
  TerminalSet t;
  t.fixed_center = {};
  t.source = {};
  t.sinks = regular_sinks();
  // D' sits at 180°; positive alpha turns D toward C, opening ∠DOE.
  t.sinks[static_cast<std::size_t>(Sink::D)] =
      polar_to_point(cfg.r, cfg.alpha, {}, deg(kSinkDirections[3]));
  return t;
}

NodeClassIConfig canonicalize_class_i(double r, AngleDeg theta_raw) {
  double t = std::fmod(theta_raw.value, 72.0);
  if (t < 0.0) t += 72.0;
  if (t > 36.0) t = 72.0 - t;
  return {r, deg(t)};
}

}  // namespace sifca

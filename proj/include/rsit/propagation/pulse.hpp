#pragma once

#include <string>
#include <string_view>

namespace rsit {

enum class PulseShape { sech, gaussian };

std::string_view to_string(PulseShape s);
PulseShape pulse_shape_from_string(std::string_view s);

/// Boundary field Omega(0, t). omega_s in rad/s, times in s.
///   sech:     Omega_s sech((t - t0) / tau),            area pi Omega_s tau
///   gaussian: Omega_s exp(-(t - t0)^2 / (2 tau^2)),    area sqrt(2 pi) Omega_s tau
struct PulseSpec {
  PulseShape shape = PulseShape::sech;
  double omega_s = 0.0;
  double tau = 1e-9;
  double t0 = 5e-9;

  double operator()(double t) const;
  double area() const;
  void validate() const;

  /// Pulse whose time-integrated Rabi frequency equals `theta` (rad).
  static PulseSpec with_area(PulseShape shape, double theta, double tau, double t0);
};

/// Omega_s giving area theta for the shape.
double amplitude_for_area(PulseShape shape, double theta, double tau);

}  // namespace rsit

#include "rsit/propagation/pulse.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rsit/constants.hpp"

namespace rsit {

std::string_view to_string(PulseShape s) {
  return s == PulseShape::sech ? "sech" : "gaussian";
}

PulseShape pulse_shape_from_string(std::string_view s) {
  if (s == "sech") return PulseShape::sech;
  if (s == "gaussian") return PulseShape::gaussian;
  throw std::invalid_argument("unknown pulse shape '" + std::string(s) + "'");
}

double PulseSpec::operator()(double t) const {
  const double x = (t - t0) / tau;
  if (shape == PulseShape::sech) return omega_s / std::cosh(x);
  return omega_s * std::exp(-0.5 * x * x);
}

double PulseSpec::area() const {
  return shape == PulseShape::sech ? constants::pi * omega_s * tau
                                   : std::sqrt(2.0 * constants::pi) * omega_s * tau;
}

void PulseSpec::validate() const {
  if (!(tau > 0.0)) throw std::invalid_argument("pulse.tau must be positive");
  if (!(omega_s >= 0.0)) throw std::invalid_argument("pulse.omega_s must be non-negative");
  if (!std::isfinite(t0)) throw std::invalid_argument("pulse.t0 must be finite");
}

double amplitude_for_area(PulseShape shape, double theta, double tau) {
  return shape == PulseShape::sech ? theta / (constants::pi * tau)
                                   : theta / (std::sqrt(2.0 * constants::pi) * tau);
}

PulseSpec PulseSpec::with_area(PulseShape shape, double theta, double tau, double t0) {
  return {shape, amplitude_for_area(shape, theta, tau), tau, t0};
}

}  // namespace rsit

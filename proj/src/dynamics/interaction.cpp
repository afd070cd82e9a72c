#include "rsit/dynamics/interaction.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rsit/constants.hpp"

namespace rsit {

double soft_core_potential(double z, double c6, double z_m) {
  const double z2 = z * z;
  const double zm2 = z_m * z_m;
  return c6 / (z2 * z2 * z2 + zm2 * zm2 * zm2);
}

EffectiveInteraction effective_interaction(double density, double c6, double omega_s) {
  if (!(density >= 0.0)) throw std::invalid_argument("effective_interaction: negative density");
  if (!(omega_s >= 0.0)) throw std::invalid_argument("effective_interaction: negative omega_s");
  EffectiveInteraction out;
  if (omega_s == 0.0 || c6 == 0.0) {
    out.z_m = omega_s == 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    return out;
  }
  const double n13 = std::cbrt(density);
  const double sign = c6 > 0.0 ? 1.0 : -1.0;
  out.z_m = std::pow(std::abs(c6) / omega_s, 1.0 / 6.0);
  out.u = sign * 4.0 * constants::pi / 3.0 * n13 * std::pow(std::abs(c6), 1.0 / 6.0) *
          std::pow(omega_s, 5.0 / 6.0);
  if (density == 0.0) return out;

  // int_0^inf dz / (z^6 + z_m^6) = z_m^-5 int_0^1 dx/(1+x^6) + z_m^-5 int_0^1 s^4/(1+s^6) ds
  // after x = 1/s on the tail.
  using boost::math::quadrature::gauss_kronrod;
  const double inner = gauss_kronrod<double, 31>::integrate(
      [](double x) { return 1.0 / (1.0 + std::pow(x, 6)); }, 0.0, 1.0, 15, 1e-14);
  const double tail = gauss_kronrod<double, 31>::integrate(
      [](double s) { return std::pow(s, 4) / (1.0 + std::pow(s, 6)); }, 0.0, 1.0, 15, 1e-14);
  out.u_quadrature = 2.0 * n13 * c6 * (inner + tail) / std::pow(out.z_m, 5);
  out.quadrature_ratio = out.u / out.u_quadrature;
  return out;
}

}  // namespace rsit

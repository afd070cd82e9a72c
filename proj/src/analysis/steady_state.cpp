#include "rsit/analysis/steady_state.hpp"

#include <cmath>
#include <stdexcept>

#include "rsit/constants.hpp"
#include "rsit/numerics/quadrature.hpp"

namespace rsit {

Susceptibility steady_state_susceptibility(const Medium& m, double omega, double v_d, int n_v) {
  if (!(m.Gamma > 0.0))
    throw std::invalid_argument("steady-state susceptibility needs spontaneous decay (Gamma > 0)");
  if (!(m.gamma_c > 0.0))
    throw std::invalid_argument("steady-state susceptibility needs collisional decay (gamma > 0)");
  const auto vg = velocity_grid(m.v_thermal, n_v);
  const double g = m.gamma_c, G = m.Gamma;
  const double pref =
      m.density * m.dipole * m.dipole / (2.0 * constants::eps0 * constants::hbar);
  std::complex<double> sum = 0.0;
  for (Eigen::Index i = 0; i < vg.size(); ++i) {
    const double delta = v_d + m.wavenumber * vg.nodes(i);
    const double den = g * (omega * omega + g * G) + G * delta * delta;
    sum += vg.weights(i) * std::complex<double>(delta, g) * G / den;
  }
  Susceptibility s;
  s.chi = pref * sum;
  s.phase = m.wavenumber * m.length * s.chi.real();
  s.absorption = m.wavenumber * m.length * s.chi.imag();
  return s;
}

double gate_potential(double c6, double separation) {
  if (!(separation > 0.0)) throw std::invalid_argument("gate separation must be positive");
  return -c6 / std::pow(separation, 6);
}

}  // namespace rsit

#include "rsit/propagation/medium.hpp"

#include <cmath>
#include <stdexcept>

#include "rsit/constants.hpp"
#include "rsit/dynamics/interaction.hpp"

namespace rsit {

void GasConfig::validate() const {
  if (n < kMinPrincipalQuantumNumber) throw std::invalid_argument("gas.n below validity floor");
  if (!(temperature >= 0.0)) throw std::invalid_argument("gas.temperature must be >= 0");
  if (!(density >= 0.0)) throw std::invalid_argument("gas.density must be >= 0");
  if (!(length > 0.0)) throw std::invalid_argument("gas.length must be positive");
}

double coupling_constant(double wavenumber, double density, double dipole) {
  return wavenumber * density * dipole * dipole / (constants::eps0 * constants::hbar);
}

Medium make_medium(const SpeciesConstants& species, const GasConfig& gas, const PulseSpec& pulse,
                   bool include_spontaneous_decay) {
  species.validate();
  gas.validate();
  pulse.validate();
  const RydbergState ryd = rydberg_state(gas.n, species);

  Medium m;
  m.wavenumber = species.wavenumber();
  m.density = gas.density;
  m.length = gas.length;
  m.temperature = gas.temperature;
  m.v_thermal = thermal_velocity(gas.temperature, species);
  m.doppler = doppler_width(species, m.v_thermal);
  if (gas.temperature > 0.0) {
    m.sigma = inelastic_cross_section(gas.n, gas.temperature, species);
    m.gamma_c = collisional_decay_rate(gas.density, gas.temperature, m.sigma, species);
  }
  m.Gamma = include_spontaneous_decay ? ryd.decay_rate() : 0.0;
  m.dipole = ryd.dipole;
  m.kappa = coupling_constant(m.wavenumber, gas.density, ryd.dipole);
  m.c6 = ryd.c6;
  const EffectiveInteraction eff = effective_interaction(gas.density, ryd.c6, pulse.omega_s);
  m.u = eff.u;
  m.u_quadrature = eff.u_quadrature;
  m.z_m = eff.z_m;
  return m;
}

}  // namespace rsit

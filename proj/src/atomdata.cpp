#include "rsit/atomdata.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rsit/constants.hpp"

namespace rsit {

namespace cst = constants;

double SpeciesConstants::wavenumber() const { return 2.0 * cst::pi / wavelength; }

void SpeciesConstants::validate() const {
  if (!(mass > 0.0)) throw std::invalid_argument("species.mass must be positive");
  if (!(wavelength > 0.0)) throw std::invalid_argument("species.wavelength must be positive");
  if (!(quantum_defect_P >= 0.0 && quantum_defect_P < 5.0))
    throw std::invalid_argument("species.quantum_defect_P must lie in [0, 5)");
  if (!std::isfinite(scattering_length))
    throw std::invalid_argument("species.scattering_length must be finite");
  if (n_ref < kMinPrincipalQuantumNumber)
    throw std::invalid_argument("species.n_ref below validity floor");
  if (!(dipole_ref > 0.0)) throw std::invalid_argument("species.dipole_ref must be positive");
  if (!(lifetime_ref > 0.0)) throw std::invalid_argument("species.lifetime_ref must be positive");
  if (!std::isfinite(c6_ref)) throw std::invalid_argument("species.c6_ref must be finite");
}

SpeciesConstants cesium() {
  SpeciesConstants s;
  s.name = "Cs";
  s.mass = 132.905451933 * cst::amu;
  s.scattering_length = 21.7;
  s.quantum_defect_P = 3.56;
  s.wavelength = 319e-9;
  s.n_ref = 30;
  // 2 pi x 60 GHz um^6 at 30P: puts the self-consistent mean-field optimal
  // area of a 1 ns sech pulse at N = 5e15 cm^-3 at 0.35 pi.
  s.c6_ref = 2.0 * cst::pi * 60.0e9 * 1e-36;
  // From a 0.08 MW/cm^2 peak intensity driving a 0.35 pi, 1 ns sech pulse.
  s.dipole_ref = 0.0056 * cst::ea0;
  s.lifetime_ref = 27.79e-6;
  s.lifetime_table = {{30, 27.79e-6}};
  return s;
}

double thermal_velocity(double temperature, const SpeciesConstants& species) {
  if (!(temperature >= 0.0)) throw std::invalid_argument("thermal_velocity: negative temperature");
  return std::sqrt(2.0 * cst::k_B * temperature / species.mass);
}

double doppler_width(const SpeciesConstants& species, double v_thermal) {
  if (!(v_thermal >= 0.0)) throw std::invalid_argument("doppler_width: negative thermal velocity");
  return species.wavenumber() * v_thermal;
}

double cross_section_bracket(double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("cross_section_bracket: lambda must be positive");
  const double x = 2.0 / lambda;
  if (x < 0.5) {
    // Sum_{j>=1} (-1)^{j+1} x^{2j+1} j / ((2j+1)(j+1)); the direct form cancels.
    const double x2 = x * x;
    double power = x * x2;
    double sum = 0.0;
    for (int j = 1; j < 60; ++j) {
      const double term = power * j / ((2.0 * j + 1.0) * (j + 1.0));
      sum += (j % 2 == 1) ? term : -term;
      if (term < 1e-18 * sum) break;
      power *= x2;
    }
    return sum;
  }
  return std::atan(x) - 0.5 * lambda * std::log1p(x * x);
}

CrossSection inelastic_cross_section_detail(int n, double temperature,
                                            const SpeciesConstants& species,
                                            const CrossSectionOptions& opts) {
  if (n < kMinPrincipalQuantumNumber)
    throw std::invalid_argument("inelastic_cross_section: n below validity floor");
  if (!(temperature > 0.0))
    throw std::invalid_argument("inelastic_cross_section: temperature must be positive");
  const double vt = thermal_velocity(temperature, species);
  const double as = species.scattering_length * cst::a_B;
  const double prefactor = 4.0 * cst::v_orbital * cst::v_orbital * as * as / (vt * vt);
  const double lambda_scale = cst::v_orbital / (static_cast<double>(n) * n * vt);

  auto term = [&](int np) {
    const double lambda = std::abs(species.quantum_defect_P + np - n) * lambda_scale;
    if (lambda == 0.0) return 0.0;  // elastic channel
    const double npd = np;
    return prefactor / (npd * npd * npd) * cross_section_bracket(lambda);
  };

  CrossSection out;
  double total = term(n);
  for (int delta = 1; delta <= opts.max_window; ++delta) {
    double shell = term(n + delta);
    if (n - delta >= kMinPrincipalQuantumNumber) shell += term(n - delta);
    total += shell;
    // Shells fall off at least as delta^-3, so the remaining tail is below
    // shell * delta / 2; stop once that bound is under the tolerance.
    if (shell * (1.0 + 0.5 * delta) < opts.shell_tolerance * total) {
      out.sigma = total;
      out.window = delta;
      return out;
    }
  }
  throw std::runtime_error("inelastic_cross_section: n' sum did not converge for n = " +
                           std::to_string(n));
}

double inelastic_cross_section(int n, double temperature, const SpeciesConstants& species) {
  return inelastic_cross_section_detail(n, temperature, species).sigma;
}

double collisional_decay_rate(double density, double temperature, double sigma,
                              const SpeciesConstants& species) {
  if (!(density >= 0.0)) throw std::invalid_argument("collisional_decay_rate: negative density");
  if (!(temperature > 0.0))
    throw std::invalid_argument("collisional_decay_rate: temperature must be positive");
  return density * thermal_velocity(temperature, species) * sigma;
}

RydbergState rydberg_state(int n, const SpeciesConstants& species) {
  if (n < kMinPrincipalQuantumNumber)
    throw std::invalid_argument("rydberg_state: n below validity floor");
  RydbergState r;
  r.n = n;
  r.n_star = n - species.quantum_defect_P;
  const double ratio = r.n_star / (species.n_ref - species.quantum_defect_P);
  r.c6 = species.c6_ref * std::pow(ratio, 11);
  if (auto it = species.dipole_table.find(n); it != species.dipole_table.end())
    r.dipole = it->second;
  else
    r.dipole = species.dipole_ref * std::pow(ratio, -1.5);
  if (auto it = species.lifetime_table.find(n); it != species.lifetime_table.end())
    r.lifetime = it->second;
  else
    r.lifetime = species.lifetime_ref * std::pow(ratio, 3);
  return r;
}

}  // namespace rsit

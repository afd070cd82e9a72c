#include "rsit/analysis/regime.hpp"

#include <limits>

#include "rsit/dynamics/interaction.hpp"

namespace rsit {

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::doppler_dominant: return "doppler_dominant";
    case Regime::rydberg_dominant: return "rydberg_dominant";
    case Regime::absorption_dominant: return "absorption_dominant";
  }
  return "unknown";
}

Regime classify(double kv_T, double u, double gamma_c) {
  const double sum = kv_T + u;
  if (sum < 100.0 * gamma_c) return Regime::absorption_dominant;
  if (u >= 10.0 * kv_T) return Regime::rydberg_dominant;
  return Regime::doppler_dominant;
}

RegimePoint regime_classify(double density, double temperature, int n, double omega_s,
                            const SpeciesConstants& species) {
  RegimePoint p;
  p.density = density;
  p.temperature = temperature;
  const double vt = thermal_velocity(temperature, species);
  p.kv_T = doppler_width(species, vt);
  p.u = effective_interaction(density, rydberg_state(n, species).c6, omega_s).u;
  if (temperature > 0.0)
    p.gamma_c = collisional_decay_rate(density, temperature,
                                       inelastic_cross_section(n, temperature, species), species);
  p.label = classify(p.kv_T, p.u, p.gamma_c);
  p.ratio = p.gamma_c > 0.0 ? (p.kv_T + p.u) / p.gamma_c
                            : std::numeric_limits<double>::infinity();
  return p;
}

}  // namespace rsit

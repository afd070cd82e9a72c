#pragma once

#include "rsit/atomdata.hpp"
#include "rsit/propagation/pulse.hpp"

namespace rsit {

struct GasConfig {
  int n = 30;                 // Rydberg principal quantum number
  double temperature = 300;   // K
  double density = 5e21;      // m^-3
  double length = 400e-6;     // m

  void validate() const;
};

/// Every rate and coupling the solvers consume, resolved from species, gas
/// and pulse. Tests and the CLI may overwrite fields after construction to
/// switch individual effects off.
struct Medium {
  double wavenumber = 0.0;     // 1/m
  double density = 0.0;        // m^-3
  double length = 0.0;         // m
  double temperature = 0.0;    // K
  double v_thermal = 0.0;      // m/s
  double doppler = 0.0;        // k v_T, rad/s
  double sigma = 0.0;          // m^2
  double gamma_c = 0.0;        // 1/s
  double Gamma = 0.0;          // 1/s, 0 unless spontaneous decay is enabled
  double dipole = 0.0;         // C m
  double kappa = 0.0;          // k N d^2 / (eps0 hbar), rad/(s m)
  double c6 = 0.0;             // rad/s m^6
  double u = 0.0;              // rad/s
  double u_quadrature = 0.0;   // rad/s, diagnostic
  double z_m = 0.0;            // m
};

/// kappa = k N d^2 / (eps0 hbar): d Omega / dz = -i kappa R21.
double coupling_constant(double wavenumber, double density, double dipole);

Medium make_medium(const SpeciesConstants& species, const GasConfig& gas, const PulseSpec& pulse,
                   bool include_spontaneous_decay = false);

}  // namespace rsit

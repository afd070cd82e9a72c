#pragma once

#include <map>
#include <string>

namespace rsit {

/// Species data. Frequencies are angular (rad/s), everything else SI.
struct SpeciesConstants {
  std::string name = "Cs";
  double mass = 0.0;               // kg
  double scattering_length = 0.0;  // Bohr radii, any sign
  double quantum_defect_P = 0.0;   // delta_P in [0, 5)
  double wavelength = 0.0;         // m, |1> -> |nP>
  int n_ref = 30;                  // reference principal quantum number
  double c6_ref = 0.0;             // rad/s m^6 at n_ref
  double dipole_ref = 0.0;         // C m at n_ref
  double lifetime_ref = 0.0;       // s at n_ref
  // Optional explicit per-n overrides of the scaling laws.
  std::map<int, double> dipole_table;
  std::map<int, double> lifetime_table;

  double wavenumber() const;
  void validate() const;
};

/// Shipped Cs defaults. The Rydberg C6 and ground-Rydberg dipole at the
/// reference state are calibration inputs, see README.
SpeciesConstants cesium();

struct RydbergState {
  int n = 0;
  double n_star = 0.0;
  double c6 = 0.0;        // rad/s m^6
  double dipole = 0.0;    // C m
  double lifetime = 0.0;  // s

  double decay_rate() const { return 1.0 / lifetime; }
};

inline constexpr int kMinPrincipalQuantumNumber = 10;

/// sqrt(2 k_B T / M).
double thermal_velocity(double temperature, const SpeciesConstants& species);

/// k v_T with k = 2 pi / wavelength.
double doppler_width(const SpeciesConstants& species, double v_thermal);

/// Single n -> n' term of the inelastic cross-section bracket,
///   arctan(2/lambda) - (lambda/2) ln((4 + lambda^2)/lambda^2).
/// Non-negative for lambda > 0 and ~ 4/(3 lambda^3) for large lambda.
double cross_section_bracket(double lambda);

struct CrossSectionOptions {
  double shell_tolerance = 1e-6;  // relative bound on the truncated tail
  int max_window = 100000;
};

struct CrossSection {
  double sigma = 0.0;  // m^2
  int window = 0;      // final Delta of the n' window
};

/// Inelastic l-mixing cross-section of the nP state by electron / ground-state
/// atom scattering, summed over neighbouring n' manifolds.
CrossSection inelastic_cross_section_detail(int n, double temperature,
                                            const SpeciesConstants& species,
                                            const CrossSectionOptions& opts = {});

double inelastic_cross_section(int n, double temperature, const SpeciesConstants& species);

/// gamma_21^c = N v_T sigma. Returned in 1/s (used as an angular rate).
double collisional_decay_rate(double density, double temperature, double sigma,
                              const SpeciesConstants& species);

RydbergState rydberg_state(int n, const SpeciesConstants& species);

}  // namespace rsit

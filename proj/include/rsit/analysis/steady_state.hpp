#pragma once

#include <complex>

#include "rsit/propagation/medium.hpp"

namespace rsit {

struct Susceptibility {
  std::complex<double> chi;  // dimensionless
  double phase = 0.0;        // k L Re chi
  double absorption = 0.0;   // k L Im chi
};

/// Steady-state susceptibility of the driven, collisionally damped medium
/// with a static shift V_d (e.g. from a stored gate excitation):
///   chi = (N d^2 / (2 eps0 hbar)) sum_i w_i (i gamma + V_d + k v_i) Gamma
///         / [gamma (Omega^2 + gamma Gamma) + Gamma (V_d + k v_i)^2].
/// V_d is uniform along the medium, so the line integrals are k L chi.
/// Requires Gamma > 0 and gamma > 0.
Susceptibility steady_state_susceptibility(const Medium& medium, double omega, double v_d,
                                           int n_v = 256);

/// Gate-source shift V_d = -C6 / r^6.
double gate_potential(double c6, double separation);

}  // namespace rsit

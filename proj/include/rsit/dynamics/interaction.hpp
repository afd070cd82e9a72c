#pragma once

namespace rsit {

/// Mean-field interaction strength from the soft-core potential
/// V(z) = C6 / (z^6 + z_m^6), z_m = (|C6| / Omega_s)^(1/6).
struct EffectiveInteraction {
  double u = 0.0;             // rad/s, closed form (4 pi / 3) N^(1/3) C6^(1/6) Omega_s^(5/6)
  double z_m = 0.0;           // m, blockade radius
  double u_quadrature = 0.0;  // rad/s, 2 N^(1/3) int_0^inf V(z) dz by adaptive quadrature
  // u / u_quadrature. The closed form is twice the integral it is quoted
  // from; both are reported and the closed form drives the dynamics.
  double quadrature_ratio = 0.0;
};

EffectiveInteraction effective_interaction(double density, double c6, double omega_s);

/// Soft-core pair potential used by both interaction closures.
double soft_core_potential(double z, double c6, double z_m);

}  // namespace rsit

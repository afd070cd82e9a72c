#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>

#include "rsit/propagation/medium.hpp"
#include "rsit/propagation/pulse.hpp"

namespace rsit {

enum class Level { mean_field, two_body };

std::string_view to_string(Level l);
Level level_from_string(std::string_view s);

struct NumericsConfig {
  int n_z = 64;
  int n_v = 16;
  double dt = 0.0;      // s; 0 selects tau / 200
  double dt_out = 0.0;  // s; 0 selects tau / 50
  int n_xi = 0;         // marching steps for the co-moving solver; 0 selects n_z

  double resolved_dt(const PulseSpec& p) const { return dt > 0.0 ? dt : p.tau / 200.0; }
  double resolved_dt_out(const PulseSpec& p) const { return dt_out > 0.0 ? dt_out : p.tau / 50.0; }
  void validate() const;
};

struct RunMetadata {
  std::string solver;  // "chebyshev" or "marching"
  Level level = Level::mean_field;
  int n_z = 0;
  int n_v = 0;
  double dt = 0.0;
  double dt_out = 0.0;
  double window = 0.0;
  long steps = 0;
  double wall_seconds = 0.0;
  Eigen::VectorXd velocity_nodes;
  Eigen::VectorXd velocity_weights;
};

/// Space-time solution. `field`, `coherence` and `excitation` are
/// (z node) x (output sample); `input`/`output` hold Omega(0, t) and
/// Omega(L, t) at every time step.
struct PropagationResult {
  Eigen::VectorXd z;
  Eigen::VectorXd t_samples;
  Eigen::MatrixXcd field;
  Eigen::MatrixXcd coherence;
  Eigen::MatrixXd excitation;

  Eigen::VectorXd t;
  Eigen::VectorXcd input;
  Eigen::VectorXcd output;

  double transmission = 0.0;
  double fidelity = 0.0;
  RunMetadata meta;

  double dt() const { return t.size() > 1 ? t(1) - t(0) : 0.0; }
};

/// Source of the reduced Maxwell equation, (d/dz + (1/c) d/dt) Omega = -i kappa R21.
/// This is (i k / 2) chi Omega without the division by Omega.
Eigen::VectorXcd polarization_source(const Eigen::VectorXcd& r21, double kappa);

/// Lab-frame solver: RK4 in t for all (z, v) atoms; at every stage the field
/// on the Chebyshev nodes is the retarded boundary value plus the spectral
/// antiderivative of the source, with Omega(0, t) imposed exactly.
PropagationResult run_propagation(const PulseSpec& pulse, const Medium& medium, Level level,
                                  const NumericsConfig& numerics);

/// Independent check in local time s = t - z/c: RK4 marching in z, each stage
/// integrating the Bloch equations over the whole pulse. Mean-field only.
PropagationResult cross_check_marching(const PulseSpec& pulse, const Medium& medium, Level level,
                                       const NumericsConfig& numerics);

/// v_g ~ 2 eps0 hbar |Omega|^2 / (k N d^2) = 2 |Omega|^2 / kappa.
double group_velocity_estimate(double omega, const Medium& medium);

/// Simulated time window [0, t0 + L/c + 10 tau].
double simulation_window(const PulseSpec& pulse, double length);

}  // namespace rsit

#pragma once

#include <Eigen/Dense>

#include "rsit/dynamics/mean_field.hpp"
#include "rsit/propagation/pulse.hpp"

namespace rsit {

struct TransientSettings {
  double dt = 0.0;      // s; 0 selects tau / 200
  double dt_out = 0.0;  // s; 0 selects tau / 50
  double window = 0.0;  // s; 0 selects t0 + 10 tau
};

/// Mean-field trajectories of atoms at one position driven by the boundary
/// pulse. `class_coherence` is (sample) x (velocity node).
struct TransientResult {
  Eigen::VectorXd t;
  Eigen::VectorXcd coherence;   // R21
  Eigen::VectorXd excitation;   // velocity-averaged rho22
  Eigen::VectorXd inversion;    // velocity-averaged w
  Eigen::MatrixXcd class_coherence;
};

TransientResult transient_dynamics(const PulseSpec& pulse, const MFParams& params,
                                   const TransientSettings& settings = {});

}  // namespace rsit

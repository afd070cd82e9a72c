#pragma once

#include <Eigen/Dense>

#include "rsit/propagation/pulse.hpp"

namespace rsit {

/// Mean-field optimal area
///   theta~ = (2 pi / u tau) (sqrt(2 pi u^2 tau^2 + pi^2) - pi)^(1/2),
/// evaluated in the cancellation-free form 8 pi^2 / (sqrt(1 + 2 (u tau)^2 / pi) + 1).
double optimal_area_mf(double u, double tau);

/// (u^2 tau^2 / theta0^5) theta^4 + theta^2 / theta0^2 - 1 with theta0 = 2 pi.
double optimal_area_residual(double theta, double u, double tau);

/// Fixed point theta = theta~(u(theta)), where u follows the peak Rabi
/// frequency of a pulse of area theta. Bisection on (0, 2 pi].
double optimal_area_self_consistent(double density, double c6, PulseShape shape, double tau);

struct AnsatzParams {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double theta_tilde = 0.0;
};

/// B = theta~/theta0, A = theta~ B / (2 theta0), C = sqrt(2 pi) u tau B / (2 theta0).
AnsatzParams ansatz_params(double theta_tilde, double u, double tau);

/// rho22 = A (1 - cos F), rho21 = -(i B / 2) cos F + C rho22 with
/// F(t) = (theta0 / 2)(1 + erf(t / (sqrt(2) tau))); t measured from the pulse centre.
struct AnsatzTrajectory {
  Eigen::VectorXd t;
  Eigen::VectorXd excitation;
  Eigen::VectorXcd coherence;
};

AnsatzTrajectory ansatz_trajectory(const AnsatzParams& p, double tau, const Eigen::VectorXd& t);

}  // namespace rsit

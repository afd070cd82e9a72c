#pragma once

#include <Eigen/Dense>
#include <complex>

namespace rsit {

struct PulseArea {
  double theta = 0.0;
  bool truncated = false;  // an end sample exceeds 1e-4 of the peak
};

/// Trapezoid integral of Re Omega over uniformly spaced samples.
PulseArea pulse_area(const Eigen::Ref<const Eigen::VectorXcd>& omega, double dt);

/// eta = int |Omega_out|^2 dt / int |Omega_in|^2 dt.
double transmission(const Eigen::Ref<const Eigen::VectorXcd>& omega_in,
                    const Eigen::Ref<const Eigen::VectorXcd>& omega_out);

/// F = |int Omega_out Omega_in dt|^2 / (int |Omega_out|^2 dt int |Omega_in|^2 dt).
double fidelity(const Eigen::Ref<const Eigen::VectorXcd>& omega_in,
                const Eigen::Ref<const Eigen::VectorXcd>& omega_out);

/// max_s |y(t0 + s) + y(t0 - s)| / max |y| over uniformly spaced samples
/// starting at t(0); y is linearly interpolated at the mirrored times.
double antisymmetry_residual(const Eigen::Ref<const Eigen::VectorXd>& t,
                             const Eigen::Ref<const Eigen::VectorXd>& y, double t0);

/// Time of the maximum of |y|, refined by a parabola through the top three samples.
double peak_time(const Eigen::Ref<const Eigen::VectorXd>& t,
                 const Eigen::Ref<const Eigen::VectorXd>& y);

/// Trapezoid weights are common to numerator and denominator, so the
/// uniform spacing cancels; exposed for energy bookkeeping.
double trapezoid(const Eigen::Ref<const Eigen::VectorXd>& y, double dt);
std::complex<double> trapezoid(const Eigen::Ref<const Eigen::VectorXcd>& y, double dt);

}  // namespace rsit

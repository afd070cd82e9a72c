#include "rsit/analysis/optimal_area.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "rsit/constants.hpp"
#include "rsit/dynamics/interaction.hpp"

namespace rsit {

using constants::pi;

namespace {
constexpr double theta0 = 2.0 * pi;
}

double optimal_area_mf(double u, double tau) {
  if (!(u >= 0.0)) throw std::invalid_argument("optimal_area_mf: u must be >= 0");
  if (!(tau > 0.0)) throw std::invalid_argument("optimal_area_mf: tau must be positive");
  const double x = u * tau;
  // For x < 1e-4 the square root is evaluated through its series so the
  // u -> 0 limit 2 pi is reached smoothly.
  const double s = x < 1e-4 ? 2.0 + x * x / pi - 0.5 * x * x * x * x / (pi * pi)
                            : std::sqrt(1.0 + 2.0 * x * x / pi) + 1.0;
  return std::sqrt(8.0 * pi * pi / s);
}

double optimal_area_residual(double theta, double u, double tau) {
  const double x = u * tau;
  const double t2 = theta * theta;
  return x * x / std::pow(theta0, 5) * t2 * t2 + t2 / (theta0 * theta0) - 1.0;
}

double optimal_area_self_consistent(double density, double c6, PulseShape shape, double tau) {
  auto g = [&](double theta) {
    const double omega_s = amplitude_for_area(shape, theta, tau);
    return optimal_area_mf(effective_interaction(density, c6, omega_s).u, tau) - theta;
  };
  double lo = 0.0, hi = theta0;
  if (g(hi) >= 0.0) return hi;
  for (int it = 0; it < 200 && hi - lo > 1e-14 * theta0; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

AnsatzParams ansatz_params(double theta_tilde, double u, double tau) {
  AnsatzParams p;
  p.theta_tilde = theta_tilde;
  p.B = theta_tilde / theta0;
  p.A = theta_tilde * p.B / (2.0 * theta0);
  p.C = std::sqrt(2.0 * pi) * u * tau * p.B / (2.0 * theta0);
  return p;
}

AnsatzTrajectory ansatz_trajectory(const AnsatzParams& p, double tau, const Eigen::VectorXd& t) {
  AnsatzTrajectory tr{t, Eigen::VectorXd(t.size()), Eigen::VectorXcd(t.size())};
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    const double F = 0.5 * theta0 * (1.0 + std::erf(t(i) / (std::sqrt(2.0) * tau)));
    const double c = std::cos(F);
    tr.excitation(i) = p.A * (1.0 - c);
    tr.coherence(i) = std::complex<double>(0.0, -0.5 * p.B * c) + p.C * tr.excitation(i);
  }
  return tr;
}

}  // namespace rsit

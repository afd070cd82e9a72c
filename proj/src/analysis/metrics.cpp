#include "rsit/analysis/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace rsit {

double trapezoid(const Eigen::Ref<const Eigen::VectorXd>& y, double dt) {
  const Eigen::Index n = y.size();
  if (n < 2) return 0.0;
  return dt * (y.sum() - 0.5 * (y(0) + y(n - 1)));
}

std::complex<double> trapezoid(const Eigen::Ref<const Eigen::VectorXcd>& y, double dt) {
  const Eigen::Index n = y.size();
  if (n < 2) return 0.0;
  return dt * (y.sum() - 0.5 * (y(0) + y(n - 1)));
}

PulseArea pulse_area(const Eigen::Ref<const Eigen::VectorXcd>& omega, double dt) {
  PulseArea out;
  const Eigen::VectorXd re = omega.real();
  out.theta = trapezoid(re, dt);
  if (omega.size() > 0) {
    const double peak = omega.cwiseAbs().maxCoeff();
    const double edge = std::max(std::abs(omega(0)), std::abs(omega(omega.size() - 1)));
    out.truncated = peak > 0.0 && edge > 1e-4 * peak;
  }
  return out;
}

double transmission(const Eigen::Ref<const Eigen::VectorXcd>& omega_in,
                    const Eigen::Ref<const Eigen::VectorXcd>& omega_out) {
  if (omega_in.size() != omega_out.size())
    throw std::invalid_argument("transmission: sample counts differ");
  const double e_in = trapezoid(Eigen::VectorXd(omega_in.cwiseAbs2()), 1.0);
  if (!(e_in > 0.0)) throw std::invalid_argument("transmission: zero input energy");
  return trapezoid(Eigen::VectorXd(omega_out.cwiseAbs2()), 1.0) / e_in;
}

double fidelity(const Eigen::Ref<const Eigen::VectorXcd>& omega_in,
                const Eigen::Ref<const Eigen::VectorXcd>& omega_out) {
  if (omega_in.size() != omega_out.size())
    throw std::invalid_argument("fidelity: sample counts differ");
  const double e_in = trapezoid(Eigen::VectorXd(omega_in.cwiseAbs2()), 1.0);
  const double e_out = trapezoid(Eigen::VectorXd(omega_out.cwiseAbs2()), 1.0);
  if (!(e_in > 0.0) || !(e_out > 0.0)) throw std::invalid_argument("fidelity: zero energy");
  const std::complex<double> overlap =
      trapezoid(Eigen::VectorXcd(omega_out.cwiseProduct(omega_in)), 1.0);
  return std::norm(overlap) / (e_in * e_out);
}

namespace {
double interp(const Eigen::Ref<const Eigen::VectorXd>& t, const Eigen::Ref<const Eigen::VectorXd>& y,
              double x) {
  const double h = t(1) - t(0);
  const double f = (x - t(0)) / h;
  const Eigen::Index i = std::clamp<Eigen::Index>(static_cast<Eigen::Index>(std::floor(f)), 0,
                                                  t.size() - 2);
  const double a = f - static_cast<double>(i);
  return (1.0 - a) * y(i) + a * y(i + 1);
}
}  // namespace

double antisymmetry_residual(const Eigen::Ref<const Eigen::VectorXd>& t,
                             const Eigen::Ref<const Eigen::VectorXd>& y, double t0) {
  if (t.size() != y.size() || t.size() < 2)
    throw std::invalid_argument("antisymmetry_residual: need matching samples");
  const double peak = y.cwiseAbs().maxCoeff();
  if (!(peak > 0.0)) return 0.0;
  const double reach = std::min(t0 - t(0), t(t.size() - 1) - t0);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    const double s = t(i) - t0;
    if (s < 0.0 || s > reach) continue;
    worst = std::max(worst, std::abs(y(i) + interp(t, y, t0 - s)));
  }
  return worst / peak;
}

double peak_time(const Eigen::Ref<const Eigen::VectorXd>& t,
                 const Eigen::Ref<const Eigen::VectorXd>& y) {
  Eigen::Index k;
  y.cwiseAbs().maxCoeff(&k);
  if (k == 0 || k == y.size() - 1) return t(k);
  const double a = std::abs(y(k - 1)), b = std::abs(y(k)), c = std::abs(y(k + 1));
  const double den = a - 2.0 * b + c;
  const double off = den != 0.0 ? 0.5 * (a - c) / den : 0.0;
  return t(k) + off * (t(k + 1) - t(k));
}

}  // namespace rsit

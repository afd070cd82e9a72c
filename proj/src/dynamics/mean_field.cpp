#include "rsit/dynamics/mean_field.hpp"

#include <stdexcept>

namespace rsit {

MFBlochState MFBlochState::ground(Eigen::Index n_z, Eigen::Index n_v) {
  return {Eigen::ArrayXXd::Ones(n_z, n_v), Eigen::ArrayXXcd::Zero(n_z, n_v)};
}

MFBlochState& MFBlochState::operator+=(const MFBlochState& o) {
  w += o.w;
  rho21 += o.rho21;
  return *this;
}

MFBlochState operator+(MFBlochState a, const MFBlochState& b) { return a += b; }

MFBlochState operator*(double s, MFBlochState a) {
  a.w *= s;
  a.rho21 *= s;
  return a;
}

bool all_finite(const MFBlochState& s) { return s.w.allFinite() && s.rho21.allFinite(); }

MFParams make_mf_params(const VelocityGrid<double>& vgrid, double wavenumber, double u,
                        double gamma_c, double Gamma) {
  MFParams p;
  p.u = u;
  p.gamma_c = gamma_c;
  p.Gamma = Gamma;
  p.kv = wavenumber * vgrid.nodes.array();
  p.weights = vgrid.weights.array();
  return p;
}

Eigen::VectorXcd coherence_average(const MFBlochState& s, const Eigen::ArrayXd& weights) {
  return s.rho21.matrix() * weights.matrix().cast<std::complex<double>>();
}

Eigen::VectorXd excitation_average(const MFBlochState& s, const Eigen::ArrayXd& weights) {
  return 0.5 * (1.0 - (s.w.matrix() * weights.matrix()).array()).matrix();
}

MFBlochState mf_rhs(const MFBlochState& state, const Eigen::VectorXcd& omega,
                    const MFParams& params) {
  const Eigen::Index nz = state.n_z();
  const Eigen::Index nv = state.n_v();
  if (omega.size() != nz || params.kv.size() != nv || params.weights.size() != nv)
    throw std::invalid_argument("mf_rhs: inconsistent grid sizes");

  using cd = std::complex<double>;
  const cd I(0.0, 1.0);
  const Eigen::VectorXcd r21 = coherence_average(state, params.weights);
  const Eigen::VectorXd p22 = excitation_average(state, params.weights);

  MFBlochState d{Eigen::ArrayXXd(nz, nv), Eigen::ArrayXXcd(nz, nv)};
  for (Eigen::Index i = 0; i < nv; ++i) {
    for (Eigen::Index z = 0; z < nz; ++z) {
      const cd rho = state.rho21(z, i);
      const double w = state.w(z, i);
      const cd om = omega(z);
      const double shift = params.kv(i) + params.u * p22(z);
      d.rho21(z, i) = -params.gamma_c * (rho - r21(z)) - I * shift * rho - 0.5 * I * om * w;
      d.w(z, i) = 2.0 * std::imag(std::conj(om) * rho) + params.Gamma * (1.0 - w);
    }
  }
  return d;
}

}  // namespace rsit

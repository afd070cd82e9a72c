#include "rsit/dynamics/two_body.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rsit/dynamics/interaction.hpp"

namespace rsit {

using cd = std::complex<double>;

TwoBodyState TwoBodyState::ground(Eigen::Index n_z, Eigen::Index n_v) {
  const Eigen::Index m = n_z * n_v;
  TwoBodyState s;
  s.n_z = n_z;
  s.rho21 = Eigen::ArrayXcd::Zero(m);
  s.w = Eigen::ArrayXd::Ones(m);
  s.rho21_21 = Eigen::MatrixXcd::Zero(m, m);
  s.rho21_12 = Eigen::MatrixXcd::Zero(m, m);
  s.rho22_21 = Eigen::MatrixXcd::Zero(m, m);
  s.rho22_22 = Eigen::MatrixXd::Zero(m, m);
  return s;
}

TwoBodyState& TwoBodyState::operator+=(const TwoBodyState& o) {
  rho21 += o.rho21;
  w += o.w;
  rho21_21 += o.rho21_21;
  rho21_12 += o.rho21_12;
  rho22_21 += o.rho22_21;
  rho22_22 += o.rho22_22;
  return *this;
}

TwoBodyState operator+(TwoBodyState a, const TwoBodyState& b) { return a += b; }

TwoBodyState operator*(double s, TwoBodyState a) {
  a.rho21 *= s;
  a.w *= s;
  a.rho21_21 *= s;
  a.rho21_12 *= s;
  a.rho22_21 *= s;
  a.rho22_22 *= s;
  return a;
}

bool all_finite(const TwoBodyState& s) {
  return s.rho21.allFinite() && s.w.allFinite() && s.rho21_21.allFinite() &&
         s.rho21_12.allFinite() && s.rho22_21.allFinite() && s.rho22_22.allFinite();
}

TwoBodyState factorized(const Eigen::ArrayXcd& rho21, const Eigen::ArrayXd& w, Eigen::Index n_z) {
  TwoBodyState s;
  s.n_z = n_z;
  s.rho21 = rho21;
  s.w = w;
  const Eigen::VectorXcd c = rho21.matrix();
  const Eigen::VectorXd n = (0.5 * (1.0 - w)).matrix();
  s.rho21_21 = c * c.transpose();
  s.rho21_12 = c * c.adjoint();
  s.rho22_21 = n.cast<cd>() * c.transpose();
  s.rho22_22 = n * n.transpose();
  return s;
}

TwoBodyParams make_twobody_params(const SpatialGrid<double>& zgrid,
                                  const VelocityGrid<double>& vgrid, double wavenumber,
                                  double density, double c6, double z_m, double gamma_c,
                                  double Gamma) {
  const Eigen::Index nz = zgrid.size();
  TwoBodyParams p;
  p.gamma_c = gamma_c;
  p.Gamma = Gamma;
  p.density_cbrt = std::cbrt(density);
  p.kv = wavenumber * vgrid.nodes.array();
  p.weights = vgrid.weights.array();
  p.cc_weights = zgrid.cc_weights;
  p.potential = Eigen::MatrixXd::Zero(nz, nz);
  if (c6 == 0.0) return p;

  double widest = 0.0;
  for (Eigen::Index j = 1; j < nz; ++j)
    widest = std::max(widest, zgrid.points(j) - zgrid.points(j - 1));
  if (!(z_m >= 3.0 * widest))
    throw std::invalid_argument("make_twobody_params: blockade radius " + std::to_string(z_m) +
                                " m is not resolved by node spacing " + std::to_string(widest) +
                                " m (need z_m >= 3 spacings)");
  for (Eigen::Index a = 0; a < nz; ++a)
    for (Eigen::Index b = 0; b < nz; ++b)
      p.potential(a, b) = soft_core_potential(zgrid.points(a) - zgrid.points(b), c6, z_m);
  return p;
}

Eigen::VectorXcd coherence_average(const TwoBodyState& s, const Eigen::ArrayXd& weights) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.n_z);
  for (Eigen::Index v = 0; v < weights.size(); ++v)
    out += weights(v) * s.rho21.segment(v * s.n_z, s.n_z).matrix();
  return out;
}

Eigen::VectorXd excitation_average(const TwoBodyState& s, const Eigen::ArrayXd& weights) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(s.n_z);
  const Eigen::ArrayXd r22 = s.rho22();
  for (Eigen::Index v = 0; v < weights.size(); ++v)
    out += weights(v) * r22.segment(v * s.n_z, s.n_z).matrix();
  return out;
}

namespace {

// Strong-collision operator -gamma (x - <x>_v) applied to the row (first atom)
// or column (second atom) index of a pair matrix.
template <typename M>
void add_collisions_rows(const M& x, const Eigen::ArrayXd& wv, Eigen::Index nz, double gamma,
                         M& out) {
  const Eigen::Index nv = wv.size();
  M avg = M::Zero(nz, x.cols());
  for (Eigen::Index v = 0; v < nv; ++v) avg += wv(v) * x.middleRows(v * nz, nz);
  for (Eigen::Index v = 0; v < nv; ++v)
    out.middleRows(v * nz, nz) -= gamma * (x.middleRows(v * nz, nz) - avg);
}

template <typename M>
void add_collisions_cols(const M& x, const Eigen::ArrayXd& wv, Eigen::Index nz, double gamma,
                         M& out) {
  const Eigen::Index nv = wv.size();
  M avg = M::Zero(x.rows(), nz);
  for (Eigen::Index v = 0; v < nv; ++v) avg += wv(v) * x.middleCols(v * nz, nz);
  for (Eigen::Index v = 0; v < nv; ++v)
    out.middleCols(v * nz, nz) -= gamma * (x.middleCols(v * nz, nz) - avg);
}

}  // namespace

TwoBodyState twobody_rhs(const TwoBodyState& s, const Eigen::VectorXcd& omega,
                         const TwoBodyParams& p) {
  const Eigen::Index nz = s.n_z;
  const Eigen::Index m = s.atoms();
  const Eigen::Index nv = p.weights.size();
  if (omega.size() != nz || nv * nz != m || p.potential.rows() != nz)
    throw std::invalid_argument("twobody_rhs: inconsistent grid sizes");

  const cd I(0.0, 1.0);
  auto zi = [nz](Eigen::Index a) { return a % nz; };
  auto vi = [nz](Eigen::Index a) { return a / nz; };

  Eigen::ArrayXcd om(m);
  Eigen::ArrayXd delta(m);
  for (Eigen::Index a = 0; a < m; ++a) {
    om(a) = omega(zi(a));
    delta(a) = p.kv(vi(a));
  }
  const Eigen::ArrayXd r22 = s.rho22();
  const auto& A = s.rho21_21;
  const auto& B = s.rho21_12;
  const auto& C = s.rho22_21;
  const auto& D = s.rho22_22;

  TwoBodyState d;
  d.n_z = nz;
  d.rho21_21.resize(m, m);
  d.rho21_12.resize(m, m);
  d.rho22_21.resize(m, m);
  d.rho22_22.resize(m, m);

  for (Eigen::Index b = 0; b < m; ++b) {
    for (Eigen::Index a = 0; a < m; ++a) {
      const double v = p.potential(zi(a), zi(b));
      const cd oa = om(a), ob = om(b);
      d.rho21_21(a, b) = -I * (delta(a) + delta(b) + v) * A(a, b) -
                         0.5 * I * oa * (s.rho21(b) - 2.0 * C(a, b)) -
                         0.5 * I * ob * (s.rho21(a) - 2.0 * C(b, a));
      d.rho21_12(a, b) = -I * (delta(a) - delta(b)) * B(a, b) -
                         0.5 * I * oa * (std::conj(s.rho21(b)) - 2.0 * std::conj(C(a, b))) +
                         0.5 * I * std::conj(ob) * (s.rho21(a) - 2.0 * C(b, a));
      d.rho22_21(a, b) = -(p.Gamma + I * (delta(b) + v)) * C(a, b) +
                         0.5 * I * std::conj(oa) * A(a, b) - 0.5 * I * oa * B(b, a) -
                         0.5 * I * ob * (r22(a) - 2.0 * D(a, b));
      d.rho22_22(a, b) = -2.0 * p.Gamma * D(a, b) - std::imag(std::conj(oa) * C(b, a)) -
                         std::imag(std::conj(ob) * C(a, b));
    }
  }

  // One-body equations; the interaction integral runs over the partner atom.
  d.rho21.resize(m);
  d.w.resize(m);
  const Eigen::ArrayXcd r21 = s.rho21;
  Eigen::VectorXcd avg = coherence_average(s, p.weights);
  for (Eigen::Index b = 0; b < m; ++b) {
    cd shift = 0.0;
    if (p.density_cbrt != 0.0) {
      for (Eigen::Index a = 0; a < m; ++a) {
        const double v = p.potential(zi(a), zi(b));
        if (v != 0.0) shift += p.cc_weights(zi(a)) * p.weights(vi(a)) * v * C(a, b);
      }
      shift *= p.density_cbrt;
    }
    d.rho21(b) = -p.gamma_c * (r21(b) - avg(zi(b))) - I * delta(b) * r21(b) -
                 0.5 * I * om(b) * s.w(b) - I * shift;
    d.w(b) = 2.0 * std::imag(std::conj(om(b)) * r21(b)) + p.Gamma * (1.0 - s.w(b));
  }

  if (p.gamma_c != 0.0) {
    add_collisions_rows(A, p.weights, nz, p.gamma_c, d.rho21_21);
    add_collisions_cols(A, p.weights, nz, p.gamma_c, d.rho21_21);
    add_collisions_rows(B, p.weights, nz, p.gamma_c, d.rho21_12);
    add_collisions_cols(B, p.weights, nz, p.gamma_c, d.rho21_12);
    add_collisions_cols(C, p.weights, nz, p.gamma_c, d.rho22_21);
  }
  return d;
}

}  // namespace rsit

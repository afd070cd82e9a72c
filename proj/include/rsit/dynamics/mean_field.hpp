#pragma once

#include <Eigen/Dense>
#include <complex>

#include "rsit/numerics/quadrature.hpp"

namespace rsit {

/// Mean-field Bloch state on a (z-node, velocity-node) grid.
/// rho21 holds per-class amplitudes; the medium coherence is
/// R21(z) = sum_i weights[i] rho21(z, i).
struct MFBlochState {
  Eigen::ArrayXXd w;       // inversion 1 - 2 rho22
  Eigen::ArrayXXcd rho21;  // <2|rho|1>

  static MFBlochState ground(Eigen::Index n_z, Eigen::Index n_v);

  Eigen::Index n_z() const { return w.rows(); }
  Eigen::Index n_v() const { return w.cols(); }

  MFBlochState& operator+=(const MFBlochState& o);
};

MFBlochState operator+(MFBlochState a, const MFBlochState& b);
MFBlochState operator*(double s, MFBlochState a);
bool all_finite(const MFBlochState& s);

/// Parameters of the mean-field right-hand side.
struct MFParams {
  double u = 0.0;        // effective interaction, rad/s
  double gamma_c = 0.0;  // collisional rate, 1/s
  double Gamma = 0.0;    // spontaneous decay of |2>, 1/s; 0 disables it
  Eigen::ArrayXd kv;     // Doppler shift k v_i per velocity node, rad/s
  Eigen::ArrayXd weights;
};

MFParams make_mf_params(const VelocityGrid<double>& vgrid, double wavenumber, double u,
                        double gamma_c, double Gamma);

/// R21(z) = sum_i w_i rho21(z, v_i).
Eigen::VectorXcd coherence_average(const MFBlochState& s, const Eigen::ArrayXd& weights);
/// Velocity-averaged excited population per z node.
Eigen::VectorXd excitation_average(const MFBlochState& s, const Eigen::ArrayXd& weights);

/// Time derivative of the mean-field Bloch equations with the local-field
/// interaction closure:
///   d rho21/dt = -gamma (rho21 - R21) - i (k v + u rho22) rho21 - i Omega w / 2
///   d w/dt     = 2 Im(Omega^* rho21) + Gamma (1 - w)
/// where rho22 is the velocity-averaged excitation at the same z.
MFBlochState mf_rhs(const MFBlochState& state, const Eigen::VectorXcd& omega,
                    const MFParams& params);

}  // namespace rsit

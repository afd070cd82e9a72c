#pragma once

#include <Eigen/Dense>
#include <complex>

#include "rsit/numerics/chebyshev.hpp"
#include "rsit/numerics/quadrature.hpp"

namespace rsit {

/// One-body plus two-body correlator state.
///
/// Atoms are indexed by a = v * n_z + z, so every (v', v) pair owns a
/// contiguous n_z x n_z column block of the pair matrices. With c = |1><2|
/// and n = |2><2| acting on the atom at (z_a, v_a):
///   rho21_21(a, b) = <c_a c_b>      rho21_12(a, b) = <c_a c_b^dag>
///   rho22_21(a, b) = <n_a c_b>      rho22_22(a, b) = <n_a n_b>
/// The remaining correlators follow from these by conjugation, swapping the
/// pair, or the trace identity rho11_X = rho_X - rho22_X.
struct TwoBodyState {
  Eigen::ArrayXcd rho21;  // one-body coherence <c_a>
  Eigen::ArrayXd w;       // one-body inversion
  Eigen::MatrixXcd rho21_21;
  Eigen::MatrixXcd rho21_12;
  Eigen::MatrixXcd rho22_21;
  Eigen::MatrixXd rho22_22;
  Eigen::Index n_z = 0;

  static TwoBodyState ground(Eigen::Index n_z, Eigen::Index n_v);

  Eigen::Index atoms() const { return w.size(); }
  Eigen::Index n_v() const { return atoms() / n_z; }
  Eigen::ArrayXd rho22() const { return 0.5 * (1.0 - w); }
  Eigen::ArrayXd rho11() const { return 0.5 * (1.0 + w); }

  TwoBodyState& operator+=(const TwoBodyState& o);
};

TwoBodyState operator+(TwoBodyState a, const TwoBodyState& b);
TwoBodyState operator*(double s, TwoBodyState a);
bool all_finite(const TwoBodyState& s);

/// Product state rho_{ab,cd} = rho_ab rho_cd built from one-body values.
TwoBodyState factorized(const Eigen::ArrayXcd& rho21, const Eigen::ArrayXd& w, Eigen::Index n_z);

struct TwoBodyParams {
  double gamma_c = 0.0;
  double Gamma = 0.0;
  double density_cbrt = 0.0;   // N^(1/3) prefactor of the interaction integral
  Eigen::ArrayXd kv;           // per velocity node
  Eigen::ArrayXd weights;      // per velocity node
  Eigen::MatrixXd potential;   // V_r(z_a - z_b) on the spatial nodes, rad/s
  Eigen::VectorXd cc_weights;  // spatial quadrature weights
};

/// Builds the soft-core pair potential on the grid. Rejects grids that cannot
/// resolve the blockade radius (z_m below three of the widest node spacings)
/// unless c6 == 0.
TwoBodyParams make_twobody_params(const SpatialGrid<double>& zgrid,
                                  const VelocityGrid<double>& vgrid, double wavenumber,
                                  double density, double c6, double z_m, double gamma_c,
                                  double Gamma);

/// R21(z) = sum_v w_v rho21(z, v).
Eigen::VectorXcd coherence_average(const TwoBodyState& s, const Eigen::ArrayXd& weights);
Eigen::VectorXd excitation_average(const TwoBodyState& s, const Eigen::ArrayXd& weights);

/// Time derivative of the one-body equations coupled to the truncated
/// two-body hierarchy. `omega` is the Rabi frequency per z node.
TwoBodyState twobody_rhs(const TwoBodyState& state, const Eigen::VectorXcd& omega,
                         const TwoBodyParams& params);

}  // namespace rsit

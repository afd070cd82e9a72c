#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rsit {

/// Discretization of the 1D Maxwell-Boltzmann distribution
///   f(v) = exp(-v^2 / v_T^2) / (sqrt(pi) v_T)
/// such that sum_i weights[i] g(nodes[i]) ~ int f(v) g(v) dv.
template <typename Scalar>
struct VelocityGrid {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  Vector nodes;
  Vector weights;
  Scalar v_thermal = 0;

  Eigen::Index size() const { return nodes.size(); }
};

/// Gauss-Hermite rule (Golub-Welsch). Exact for polynomial integrands of
/// degree <= 2 n_v - 1 against f(v). Nodes and weights are symmetrized and the
/// weights renormalized to sum to one.
template <typename Scalar = double>
VelocityGrid<Scalar> velocity_grid(Scalar v_thermal, int n_v) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (n_v < 1) throw std::invalid_argument("velocity_grid: n_v must be >= 1");
  if (!(v_thermal >= 0)) throw std::invalid_argument("velocity_grid: negative v_T");

  VelocityGrid<Scalar> grid;
  grid.v_thermal = v_thermal;
  if (v_thermal == 0 || n_v == 1) {
    grid.nodes = VelocityGrid<Scalar>::Vector::Zero(1);
    grid.weights = VelocityGrid<Scalar>::Vector::Ones(1);
    return grid;
  }

  Matrix jacobi = Matrix::Zero(n_v, n_v);
  for (int k = 1; k < n_v; ++k) {
    const Scalar b = std::sqrt(Scalar(k) / Scalar(2));
    jacobi(k, k - 1) = b;
    jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(jacobi);
  const auto& x = eig.eigenvalues();
  const auto& vecs = eig.eigenvectors();

  typename VelocityGrid<Scalar>::Vector nodes(n_v), weights(n_v);
  for (int i = 0; i < n_v; ++i) {
    const int j = n_v - 1 - i;
    nodes(i) = (x(i) - x(j)) / 2;
    weights(i) = (vecs(0, i) * vecs(0, i) + vecs(0, j) * vecs(0, j)) / 2;
  }
  if (n_v % 2 == 1) nodes(n_v / 2) = 0;
  weights /= weights.sum();

  grid.nodes = v_thermal * nodes;
  grid.weights = weights;
  return grid;
}

}  // namespace rsit

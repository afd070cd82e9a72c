#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rsit {

/// Chebyshev-Gauss-Lobatto collocation on [0, L].
template <typename Scalar>
struct SpatialGrid {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Vector points;       // strictly increasing, points(0) = 0, points(N-1) = L
  Matrix diff_matrix;  // d/dz at the nodes
  Vector cc_weights;   // Clenshaw-Curtis: sum_j w_j g(z_j) ~ int_0^L g dz
  // Inverse of the interior block of diff_matrix. For a source s,
  // g(z_j) = g(0) + (integrator * s.tail(N-1))(j-1) solves g' = s with the
  // value at z = 0 imposed.
  Matrix integrator;
  Scalar length = 0;

  Eigen::Index size() const { return points.size(); }

  /// Antiderivative of `source` vanishing at z = 0, evaluated at the nodes.
  template <typename Derived>
  auto integrate(const Eigen::MatrixBase<Derived>& source) const {
    using S = typename Derived::Scalar;
    Eigen::Matrix<S, Eigen::Dynamic, 1> out(size());
    out(0) = S(0);
    out.tail(size() - 1).noalias() = integrator * source.tail(size() - 1);
    return out;
  }
};

template <typename Scalar = double>
SpatialGrid<Scalar> chebyshev_grid(Scalar length, int n_z) {
  using Grid = SpatialGrid<Scalar>;
  using Vector = typename Grid::Vector;
  using Matrix = typename Grid::Matrix;
  if (n_z < 4) throw std::invalid_argument("chebyshev_grid: n_z must be >= 4");
  if (!(length > 0)) throw std::invalid_argument("chebyshev_grid: length must be positive");

  const int n = n_z - 1;
  const Scalar pi = std::numbers::pi_v<Scalar>;
  // x_j = cos(pi j / n), written with sin for symmetric rounding.
  Vector x(n_z);
  for (int j = 0; j <= n; ++j) x(j) = std::sin(pi * Scalar(n - 2 * j) / Scalar(2 * n));

  Vector c = Vector::Ones(n_z);
  c(0) = 2;
  c(n) = 2;
  Matrix dx = Matrix::Zero(n_z, n_z);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      const Scalar sign = ((i + j) % 2 == 0) ? 1 : -1;
      dx(i, j) = sign * c(i) / (c(j) * (x(i) - x(j)));
    }
  }
  // Negative-sum trick: rows annihilate constants to rounding.
  for (int i = 0; i <= n; ++i) dx(i, i) = -dx.row(i).sum();

  // Clenshaw-Curtis weights on [-1, 1] (Trefethen, clencurt).
  Vector w = Vector::Zero(n_z);
  {
    Vector v = Vector::Ones(n - 1);
    auto theta = [&](int j) { return pi * Scalar(j) / Scalar(n); };
    if (n % 2 == 0) {
      w(0) = w(n) = Scalar(1) / Scalar(n * n - 1);
      for (int k = 1; k < n / 2; ++k)
        for (int j = 1; j < n; ++j) v(j - 1) -= 2 * std::cos(2 * k * theta(j)) / Scalar(4 * k * k - 1);
      for (int j = 1; j < n; ++j) v(j - 1) -= std::cos(n * theta(j)) / Scalar(n * n - 1);
    } else {
      w(0) = w(n) = Scalar(1) / Scalar(n * n);
      for (int k = 1; k <= (n - 1) / 2; ++k)
        for (int j = 1; j < n; ++j) v(j - 1) -= 2 * std::cos(2 * k * theta(j)) / Scalar(4 * k * k - 1);
    }
    for (int j = 1; j < n; ++j) w(j) = 2 * v(j - 1) / Scalar(n);
  }

  // z = L (1 - x) / 2 is increasing in j; d/dz = -(2/L) d/dx.
  Grid grid;
  grid.length = length;
  grid.points = length * (Vector::Ones(n_z) - x) / 2;
  grid.points(0) = 0;
  grid.points(n) = length;
  grid.diff_matrix = -(Scalar(2) / length) * dx;
  grid.cc_weights = (length / 2) * w;
  grid.integrator = grid.diff_matrix.bottomRightCorner(n, n).inverse();
  return grid;
}

}  // namespace rsit

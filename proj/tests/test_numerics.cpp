#include <cmath>

#include "doctest.h"
#include "rsit/errors.hpp"
#include "rsit/numerics/chebyshev.hpp"
#include "rsit/numerics/quadrature.hpp"
#include "rsit/numerics/rk4.hpp"

using namespace rsit;

namespace {
// Moments of f(v) = exp(-v^2/vT^2) / (sqrt(pi) vT).
double gaussian_moment(int k, double vT) {
  if (k % 2) return 0.0;
  double m = 1.0;
  for (int j = 1; j < k; j += 2) m *= j * 0.5;
  return m * std::pow(vT, k);
}
}  // namespace

TEST_CASE("velocity grid reproduces Maxwell-Boltzmann moments") {
  const double vT = 194.0;
  for (int nv : {8, 16, 32}) {
    const auto g = velocity_grid(vT, nv);
    CHECK(g.size() == nv);
    CHECK(std::abs(g.weights.sum() - 1.0) < 1e-12);
    CHECK(std::abs(g.weights.dot(g.nodes)) < 1e-12 * vT);
    for (int k = 0; k <= 5; ++k) {
      const double m = g.weights.dot(g.nodes.array().pow(k).matrix());
      const double ref = gaussian_moment(k, vT);
      const double scale = std::pow(vT, k);
      CHECK(std::abs(m - ref) <= 1e-10 * scale);
    }
    for (int i = 0; i < nv; ++i) CHECK(g.nodes(i) == doctest::Approx(-g.nodes(nv - 1 - i)).epsilon(1e-14));
  }
  // Exact up to degree 2 nv - 1.
  const auto g = velocity_grid(1.0, 4);
  CHECK(g.weights.dot(g.nodes.array().pow(6).matrix()) == doctest::Approx(gaussian_moment(6, 1.0)).epsilon(1e-12));
}

TEST_CASE("velocity grid edge cases") {
  const auto cold = velocity_grid(0.0, 16);
  CHECK(cold.size() == 1);
  CHECK(cold.nodes(0) == 0.0);
  CHECK(cold.weights(0) == 1.0);
  const auto one = velocity_grid(100.0, 1);
  CHECK(one.size() == 1);
  CHECK(one.weights(0) == doctest::Approx(1.0));
  CHECK_THROWS(velocity_grid(100.0, 0));
  CHECK_THROWS(velocity_grid(-1.0, 4));
}

TEST_CASE("chebyshev grid differentiates smooth functions") {
  const double L = 400e-6;
  const auto g = chebyshev_grid(L, 32);
  for (int i = 1; i < g.size(); ++i) CHECK(g.points(i) > g.points(i - 1));
  CHECK(g.points(0) == 0.0);
  CHECK(g.points(31) == doctest::Approx(L));

  const Eigen::VectorXd one = Eigen::VectorXd::Ones(32);
  CHECK((g.diff_matrix * one).cwiseAbs().maxCoeff() < 1e-10 * 32 / L);
  CHECK((g.diff_matrix * g.points - one).cwiseAbs().maxCoeff() < 1e-9);

  const Eigen::VectorXd e = (g.points.array() / L).exp();
  const Eigen::VectorXd de = g.diff_matrix * e;
  const double err = ((de - e / L).array() / (e / L).array()).abs().maxCoeff();
  CHECK(err < 1e-8);
}

TEST_CASE("chebyshev differentiation converges spectrally") {
  const double L = 1.0;
  auto error = [&](int n) {
    const auto g = chebyshev_grid(L, n);
    const Eigen::ArrayXd x = (g.points.array() - L / 2) / (L / 10);
    const Eigen::ArrayXd f = 1.0 / x.cosh();
    const Eigen::ArrayXd df = -(10.0 / L) * x.tanh() / x.cosh();
    return ((g.diff_matrix * f.matrix()).array() - df).abs().maxCoeff();
  };
  const double e16 = error(16), e32 = error(32), e64 = error(64), e96 = error(96);
  // Faster than any fixed power: successive ratios grow.
  CHECK(e32 < e16);
  CHECK(e64 < 1e-3 * e32);
  CHECK(e96 < 1e-6);
}

TEST_CASE("clenshaw-curtis weights and spectral integrator") {
  const double L = 2.5;
  const auto g = chebyshev_grid(L, 24);
  CHECK(g.cc_weights.sum() == doctest::Approx(L).epsilon(1e-13));
  const Eigen::VectorXd c = (g.points.array() / L).cos();
  CHECK(g.cc_weights.dot(c) == doctest::Approx(L * std::sin(1.0)).epsilon(1e-12));
  // integrate(cos(z/L)) = L sin(z/L)
  const Eigen::VectorXd F = g.integrate(c);
  const Eigen::VectorXd ref = L * (g.points.array() / L).sin();
  CHECK((F - ref).cwiseAbs().maxCoeff() < 1e-12);
  // Complex sources
  const Eigen::VectorXcd cc = std::complex<double>(0, 2) * c.cast<std::complex<double>>();
  const Eigen::VectorXcd Fc = g.integrate(cc);
  CHECK((Fc.imag() - 2 * ref).cwiseAbs().maxCoeff() < 1e-12);
  CHECK_THROWS(chebyshev_grid(1.0, 3));
  CHECK_THROWS(chebyshev_grid(0.0, 8));
}

TEST_CASE("rk4 on linear test problems") {
  using V = Eigen::VectorXd;
  auto zero = [](const V& y, double) { return V(V::Zero(y.size())); };
  V y0 = V::Constant(3, 1.5);
  CHECK(rk4_step(zero, y0, 0.0, 0.1) == y0);

  auto grow = [](const V& y, double) { return V(y); };
  const V y1 = rk4_step(grow, V(V::Ones(1)), 0.0, 0.1);
  CHECK(std::abs(y1(0) - std::exp(0.1)) < 1e-7);

  auto decay = [](const V& y, double) { return V(-y); };
  auto global_error = [&](int steps) {
    V y = V::Ones(1);
    const double h = 1.0 / steps;
    for (int k = 0; k < steps; ++k) y = rk4_step(decay, y, k * h, h);
    return std::abs(y(0) - std::exp(-1.0));
  };
  const double ratio = global_error(10) / global_error(20);
  CHECK(ratio > 14.0);
  CHECK(ratio < 18.0);
}

TEST_CASE("rk4 empirical order on a nonlinear problem") {
  using V = Eigen::VectorXd;
  // y' = -y^2 + sin t
  auto f = [](const V& y, double t) { return V(V::Constant(1, -y(0) * y(0) + std::sin(t))); };
  auto solve = [&](int steps) {
    V y = V::Constant(1, 1.0);
    const double h = 2.0 / steps;
    for (int k = 0; k < steps; ++k) y = rk4_step(f, y, k * h, h);
    return y(0);
  };
  const double ref = solve(6400);
  const double e1 = std::abs(solve(50) - ref), e2 = std::abs(solve(100) - ref);
  const double order = std::log2(e1 / e2);
  CHECK(order > 3.8);
  CHECK(order < 4.2);
}

TEST_CASE("rk4 aborts on non-finite derivatives") {
  using V = Eigen::VectorXd;
  auto bad = [](const V& y, double) { return V(y.array() / 0.0); };
  CHECK_THROWS_AS(rk4_step(bad, V(V::Ones(2)), 0.0, 0.1), SolverError);
  auto ok = [](const V& y, double) { return V(y); };
  CHECK_THROWS(rk4_step(ok, V(V::Ones(2)), 0.0, 0.0));
}

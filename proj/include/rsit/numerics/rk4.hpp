#pragma once

#include <Eigen/Core>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rsit/errors.hpp"

namespace rsit {

/// Finite check for Eigen expressions; other state types provide an
/// `all_finite` overload found by ADL.
template <typename Derived>
bool all_finite(const Eigen::DenseBase<Derived>& x) {
  return x.allFinite();
}

/// One classic fourth-order Runge-Kutta step of dy/dt = rhs(y, t).
/// `State` needs `State + State` and `double * State`.
template <typename State, typename Rhs>
State rk4_step(const Rhs& rhs, const State& y, double t, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("rk4_step: dt must be positive");
  auto checked = [t](State k) {
    if (!all_finite(k))
      throw SolverError("rk4_step: non-finite derivative near t = " + std::to_string(t));
    return k;
  };
  const double half = 0.5 * dt;
  const State k1 = checked(rhs(y, t));
  const State k2 = checked(rhs(State(y + half * k1), t + half));
  const State k3 = checked(rhs(State(y + half * k2), t + half));
  const State k4 = checked(rhs(State(y + dt * k3), t + dt));
  return State(y + (dt / 6.0) * State(k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

}  // namespace rsit

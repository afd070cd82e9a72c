#include "rsit/dynamics/transient.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rsit/numerics/rk4.hpp"

namespace rsit {

TransientResult transient_dynamics(const PulseSpec& pulse, const MFParams& params,
                                   const TransientSettings& settings) {
  pulse.validate();
  const double window = settings.window > 0.0 ? settings.window : pulse.t0 + 10.0 * pulse.tau;
  if (window < pulse.t0 + 10.0 * pulse.tau)
    throw std::invalid_argument("transient window must cover t0 + 10 tau");
  const double dt_req = settings.dt > 0.0 ? settings.dt : pulse.tau / 200.0;
  const double dt_out = settings.dt_out > 0.0 ? settings.dt_out : pulse.tau / 50.0;
  const long steps = static_cast<long>(std::ceil(window / dt_req - 1e-9));
  const double dt = window / static_cast<double>(steps);
  const long stride = std::max(1L, static_cast<long>(std::floor(dt_out / dt + 1e-9)));
  const long n_out = steps / stride + 1;
  const Eigen::Index nv = params.weights.size();

  TransientResult r;
  r.t.resize(n_out);
  r.coherence.resize(n_out);
  r.excitation.resize(n_out);
  r.inversion.resize(n_out);
  r.class_coherence.resize(n_out, nv);

  auto rhs = [&](const MFBlochState& s, double t) {
    return mf_rhs(s, Eigen::VectorXcd::Constant(1, pulse(t)), params);
  };
  MFBlochState s = MFBlochState::ground(1, nv);
  for (long k = 0;; ++k) {
    if (k % stride == 0) {
      const long j = k / stride;
      r.t(j) = k * dt;
      r.coherence(j) = coherence_average(s, params.weights)(0);
      r.excitation(j) = excitation_average(s, params.weights)(0);
      r.inversion(j) = 1.0 - 2.0 * r.excitation(j);
      r.class_coherence.row(j) = s.rho21.row(0).matrix();
    }
    if (k == steps) break;
    s = rk4_step(rhs, s, k * dt, dt);
  }
  return r;
}

}  // namespace rsit

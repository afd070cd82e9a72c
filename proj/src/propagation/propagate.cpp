#include "rsit/propagation/propagate.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rsit/analysis/metrics.hpp"
#include "rsit/constants.hpp"
#include "rsit/dynamics/mean_field.hpp"
#include "rsit/dynamics/two_body.hpp"
#include "rsit/errors.hpp"
#include "rsit/numerics/chebyshev.hpp"
#include "rsit/numerics/quadrature.hpp"
#include "rsit/numerics/rk4.hpp"

namespace rsit {

using cd = std::complex<double>;

std::string_view to_string(Level l) { return l == Level::mean_field ? "mean_field" : "two_body"; }

Level level_from_string(std::string_view s) {
  if (s == "mean_field") return Level::mean_field;
  if (s == "two_body") return Level::two_body;
  throw std::invalid_argument("unknown level '" + std::string(s) + "'");
}

void NumericsConfig::validate() const {
  if (n_z < 4) throw std::invalid_argument("numerics.n_z must be >= 4");
  if (n_v < 1) throw std::invalid_argument("numerics.n_v must be >= 1");
  if (dt < 0.0) throw std::invalid_argument("numerics.dt must be positive");
  if (dt_out < 0.0) throw std::invalid_argument("numerics.dt_out must be positive");
  if (n_xi < 0) throw std::invalid_argument("numerics.n_xi must be positive");
}

Eigen::VectorXcd polarization_source(const Eigen::VectorXcd& r21, double kappa) {
  return cd(0.0, -kappa) * r21;
}

double group_velocity_estimate(double omega, const Medium& medium) {
  if (!(std::abs(omega) > 0.0))
    throw std::invalid_argument("group_velocity_estimate: Omega must be nonzero");
  if (!(medium.kappa > 0.0)) throw std::invalid_argument("group_velocity_estimate: empty medium");
  return 2.0 * omega * omega / medium.kappa;
}

double simulation_window(const PulseSpec& pulse, double length) {
  return pulse.t0 + length / constants::c + 10.0 * pulse.tau;
}

namespace {

struct TimeGrid {
  double window;
  double dt;
  long steps;
  long stride;
};

TimeGrid make_time_grid(const PulseSpec& pulse, double length, const NumericsConfig& num) {
  TimeGrid g;
  g.window = simulation_window(pulse, length);
  g.steps = static_cast<long>(std::ceil(g.window / num.resolved_dt(pulse) - 1e-9));
  g.dt = g.window / static_cast<double>(g.steps);
  g.stride = std::max(1L, static_cast<long>(std::floor(num.resolved_dt_out(pulse) / g.dt + 1e-9)));
  return g;
}

void check_step_size(double dt, double max_kv, const PulseSpec& pulse, const Medium& m,
                     double max_potential) {
  const double rate = max_kv + std::abs(m.u) + pulse.omega_s + 2.0 * m.gamma_c + m.Gamma +
                      max_potential;
  // RK4 is stable on the imaginary axis up to 2 sqrt(2).
  if (rate * dt > 2.5) {
    std::ostringstream os;
    os << "step size " << dt << " s too large for the fastest atomic rate " << rate
       << " rad/s (rate * dt = " << rate * dt << " > 2.5); reduce numerics.dt";
    throw SolverError(os.str());
  }
}

// Per-class coherences and the velocity-averaged populations must stay in
// [0, 1] up to the tolerance. Per-class populations are not checked: the
// strong-collision term feeds coherence into a class without moving its
// population, so a class Bloch vector may exceed unit length by O(gamma/kv_T).
void check_physical(const Eigen::ArrayXXcd& rho, const Eigen::VectorXd& p22, double t) {
  const double tol = 1e-3;
  const double max_rho = rho.abs().maxCoeff();
  const double lo = p22.minCoeff(), hi = p22.maxCoeff();
  if (max_rho > 1.0 + tol || lo < -tol || hi > 1.0 + tol) {
    std::ostringstream os;
    os << "density matrix left the physical range at t = " << t << " (max |rho21| = " << max_rho
       << ", rho22 in [" << lo << ", " << hi << "])";
    throw SolverError(os.str());
  }
}

void check_field(const Eigen::VectorXcd& om, double omega_s, double t) {
  if (omega_s > 0.0 && om.cwiseAbs().maxCoeff() > 10.0 * omega_s) {
    std::ostringstream os;
    os << "field grew beyond 10x the boundary amplitude at t = " << t;
    throw SolverError(os.str());
  }
}

// Lab-frame time loop shared by both levels. `Ops` provides ground(),
// rhs(state, omega), coherence(state), excitation(state), check(state, t).
template <typename State, typename Ops>
PropagationResult lab_frame_loop(const PulseSpec& pulse, const Medium& medium,
                                 const SpatialGrid<double>& zgrid, const TimeGrid& tg,
                                 const Ops& ops) {
  const Eigen::Index nz = zgrid.size();
  const Eigen::VectorXd delay = zgrid.points / constants::c;

  auto field_at = [&](const State& s, double t) {
    Eigen::VectorXcd om = zgrid.integrate(polarization_source(ops.coherence(s), medium.kappa));
    for (Eigen::Index j = 0; j < nz; ++j) om(j) += pulse(t - delay(j));
    om(0) = pulse(t);
    return om;
  };
  auto rhs = [&](const State& s, double t) { return ops.rhs(s, field_at(s, t)); };

  const long n_samples = tg.steps / tg.stride + 1;
  PropagationResult r;
  r.z = zgrid.points;
  r.t_samples.resize(n_samples);
  r.field.resize(nz, n_samples);
  r.coherence.resize(nz, n_samples);
  r.excitation.resize(nz, n_samples);
  r.t.resize(tg.steps + 1);
  r.input.resize(tg.steps + 1);
  r.output.resize(tg.steps + 1);

  State state = ops.ground();
  for (long k = 0;; ++k) {
    const double t = k * tg.dt;
    const Eigen::VectorXcd om = field_at(state, t);
    check_field(om, pulse.omega_s, t);
    r.t(k) = t;
    r.input(k) = om(0);
    r.output(k) = om(nz - 1);
    if (k % tg.stride == 0) {
      const long j = k / tg.stride;
      r.t_samples(j) = t;
      r.field.col(j) = om;
      r.coherence.col(j) = ops.coherence(state);
      r.excitation.col(j) = ops.excitation(state);
    }
    if (k == tg.steps) break;
    state = rk4_step(rhs, state, t, tg.dt);
    ops.check(state, t + tg.dt);
  }
  r.transmission = transmission(r.input, r.output);
  r.fidelity = fidelity(r.input, r.output);
  return r;
}

struct MeanFieldOps {
  MFParams params;
  Eigen::Index nz, nv;
  MFBlochState ground() const { return MFBlochState::ground(nz, nv); }
  MFBlochState rhs(const MFBlochState& s, const Eigen::VectorXcd& om) const {
    return mf_rhs(s, om, params);
  }
  Eigen::VectorXcd coherence(const MFBlochState& s) const {
    return coherence_average(s, params.weights);
  }
  Eigen::VectorXd excitation(const MFBlochState& s) const {
    return excitation_average(s, params.weights);
  }
  void check(const MFBlochState& s, double t) const {
    check_physical(s.rho21, excitation(s), t);
  }
};

struct TwoBodyOps {
  TwoBodyParams params;
  Eigen::Index nz, nv;
  TwoBodyState ground() const { return TwoBodyState::ground(nz, nv); }
  TwoBodyState rhs(const TwoBodyState& s, const Eigen::VectorXcd& om) const {
    return twobody_rhs(s, om, params);
  }
  Eigen::VectorXcd coherence(const TwoBodyState& s) const {
    return coherence_average(s, params.weights);
  }
  Eigen::VectorXd excitation(const TwoBodyState& s) const {
    return excitation_average(s, params.weights);
  }
  void check(const TwoBodyState& s, double t) const {
    check_physical(s.rho21, excitation(s), t);
    const double bound = 1.0 + 1e-3;
    if (s.rho21_21.cwiseAbs().maxCoeff() > bound || s.rho21_12.cwiseAbs().maxCoeff() > bound ||
        s.rho22_21.cwiseAbs().maxCoeff() > bound || s.rho22_22.cwiseAbs().maxCoeff() > bound)
      throw SolverError("two-body correlator left the physical range at t = " +
                        std::to_string(t));
  }
};

RunMetadata base_metadata(const char* solver, Level level, int n_z, int n_v, const TimeGrid& tg,
                          const VelocityGrid<double>& vgrid) {
  RunMetadata m;
  m.solver = solver;
  m.level = level;
  m.n_z = n_z;
  m.n_v = n_v;
  m.dt = tg.dt;
  m.dt_out = tg.dt * tg.stride;
  m.window = tg.window;
  m.steps = tg.steps;
  m.velocity_nodes = vgrid.nodes;
  m.velocity_weights = vgrid.weights;
  return m;
}

}  // namespace

PropagationResult run_propagation(const PulseSpec& pulse, const Medium& medium, Level level,
                                  const NumericsConfig& numerics) {
  pulse.validate();
  numerics.validate();
  const auto start = std::chrono::steady_clock::now();
  const auto zgrid = chebyshev_grid(medium.length, numerics.n_z);
  const auto vgrid = velocity_grid(medium.v_thermal, numerics.n_v);
  const TimeGrid tg = make_time_grid(pulse, medium.length, numerics);
  const double max_kv = medium.wavenumber * vgrid.nodes.cwiseAbs().maxCoeff();
  const Eigen::Index nz = zgrid.size(), nv = vgrid.size();

  PropagationResult r;
  if (level == Level::mean_field) {
    check_step_size(tg.dt, max_kv, pulse, medium, 0.0);
    MeanFieldOps ops{make_mf_params(vgrid, medium.wavenumber, medium.u, medium.gamma_c,
                                    medium.Gamma),
                     nz, nv};
    r = lab_frame_loop<MFBlochState>(pulse, medium, zgrid, tg, ops);
  } else {
    TwoBodyOps ops{make_twobody_params(zgrid, vgrid, medium.wavenumber, medium.density,
                                       medium.c6, medium.z_m, medium.gamma_c, medium.Gamma),
                   nz, nv};
    const double vmax = ops.params.potential.cwiseAbs().maxCoeff();
    Medium no_mf = medium;
    no_mf.u = 0.0;
    check_step_size(tg.dt, max_kv, pulse, no_mf, vmax);
    r = lab_frame_loop<TwoBodyState>(pulse, medium, zgrid, tg, ops);
  }
  r.meta = base_metadata("chebyshev", level, static_cast<int>(nz), static_cast<int>(nv), tg, vgrid);
  r.meta.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {

// Cubic Lagrange interpolation of uniformly sampled y at fractional index x.
cd sample_cubic(const Eigen::VectorXcd& y, double x) {
  const Eigen::Index n = y.size();
  const double xc = std::clamp(x, 0.0, static_cast<double>(n - 1));
  Eigen::Index i = static_cast<Eigen::Index>(std::floor(xc));
  i = std::clamp<Eigen::Index>(i - 1, 0, n - 4);
  const double s = xc - static_cast<double>(i);
  // Nodes at s = 0, 1, 2, 3.
  const double l0 = -(s - 1) * (s - 2) * (s - 3) / 6.0;
  const double l1 = s * (s - 2) * (s - 3) / 2.0;
  const double l2 = -s * (s - 1) * (s - 3) / 2.0;
  const double l3 = s * (s - 1) * (s - 2) / 6.0;
  return l0 * y(i) + l1 * y(i + 1) + l2 * y(i + 2) + l3 * y(i + 3);
}

struct LocalResponse {
  Eigen::VectorXcd coherence;
  Eigen::VectorXd excitation;
};

// Bloch equations at one position driven by omega(s_k); RK4 with midpoint
// values from four-point interpolation.
LocalResponse local_response(const Eigen::VectorXcd& omega, double dt, const MFParams& params) {
  const Eigen::Index n = omega.size();
  const Eigen::Index nv = params.weights.size();
  LocalResponse out{Eigen::VectorXcd(n), Eigen::VectorXd(n)};
  MFBlochState s = MFBlochState::ground(1, nv);
  Eigen::VectorXcd om(1);

  auto midpoint = [&](Eigen::Index k) -> cd {
    if (k == 0) return (3.0 * omega(0) + 6.0 * omega(1) - omega(2)) / 8.0;
    if (k == n - 2) return (3.0 * omega(k + 1) + 6.0 * omega(k) - omega(k - 1)) / 8.0;
    return (-omega(k - 1) + 9.0 * omega(k) + 9.0 * omega(k + 1) - omega(k + 2)) / 16.0;
  };
  auto rhs_at = [&](const MFBlochState& x, cd o) {
    om(0) = o;
    return mf_rhs(x, om, params);
  };

  for (Eigen::Index k = 0;; ++k) {
    out.coherence(k) = coherence_average(s, params.weights)(0);
    out.excitation(k) = excitation_average(s, params.weights)(0);
    if (k == n - 1) break;
    const cd mid = midpoint(k);
    const MFBlochState k1 = rhs_at(s, omega(k));
    const MFBlochState k2 = rhs_at(s + (0.5 * dt) * k1, mid);
    const MFBlochState k3 = rhs_at(s + (0.5 * dt) * k2, mid);
    const MFBlochState k4 = rhs_at(s + dt * k3, omega(k + 1));
    s = s + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!all_finite(s)) throw SolverError("marching: non-finite Bloch state");
    check_physical(s.rho21, excitation_average(s, params.weights), (k + 1) * dt);
  }
  return out;
}

}  // namespace

PropagationResult cross_check_marching(const PulseSpec& pulse, const Medium& medium, Level level,
                                       const NumericsConfig& numerics) {
  if (level != Level::mean_field)
    throw std::invalid_argument(
        "cross_check_marching: the two-body interaction couples all z, only mean_field marches");
  pulse.validate();
  numerics.validate();
  const auto start = std::chrono::steady_clock::now();
  const auto vgrid = velocity_grid(medium.v_thermal, numerics.n_v);
  const TimeGrid tg = make_time_grid(pulse, medium.length, numerics);
  check_step_size(tg.dt, medium.wavenumber * vgrid.nodes.cwiseAbs().maxCoeff(), pulse, medium, 0.0);
  const MFParams params =
      make_mf_params(vgrid, medium.wavenumber, medium.u, medium.gamma_c, medium.Gamma);

  const int n_xi = numerics.n_xi > 0 ? numerics.n_xi : numerics.n_z;
  const double h = medium.length / n_xi;
  const long nt = tg.steps + 1;

  // Local-time field at each marching node.
  std::vector<Eigen::VectorXcd> omega(n_xi + 1);
  std::vector<LocalResponse> response(n_xi + 1);
  omega[0].resize(nt);
  for (long k = 0; k < nt; ++k) omega[0](k) = pulse(k * tg.dt);

  const cd minus_i_kappa(0.0, -medium.kappa);
  auto slope = [&](const Eigen::VectorXcd& om, LocalResponse* keep) {
    LocalResponse lr = local_response(om, tg.dt, params);
    Eigen::VectorXcd d = minus_i_kappa * lr.coherence;
    if (keep) *keep = std::move(lr);
    return d;
  };
  for (int j = 0; j < n_xi; ++j) {
    const Eigen::VectorXcd& y = omega[j];
    const Eigen::VectorXcd k1 = slope(y, &response[j]);
    const Eigen::VectorXcd k2 = slope(y + (0.5 * h) * k1, nullptr);
    const Eigen::VectorXcd k3 = slope(y + (0.5 * h) * k2, nullptr);
    const Eigen::VectorXcd k4 = slope(y + h * k3, nullptr);
    omega[j + 1] = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    check_field(omega[j + 1], pulse.omega_s, medium.length);
  }
  response[n_xi] = local_response(omega[n_xi], tg.dt, params);

  // Back to lab time t = s + z / c. Only the medium-induced part of the field
  // is interpolated; the boundary pulse is evaluated exactly.
  const Eigen::VectorXcd boundary = omega[0];
  for (auto& om : omega) om -= boundary;
  PropagationResult r;
  const long n_samples = tg.steps / tg.stride + 1;
  r.z = Eigen::VectorXd::LinSpaced(n_xi + 1, 0.0, medium.length);
  r.t_samples.resize(n_samples);
  r.field.resize(n_xi + 1, n_samples);
  r.coherence.resize(n_xi + 1, n_samples);
  r.excitation.resize(n_xi + 1, n_samples);
  for (long j = 0; j < n_samples; ++j) {
    const double t = j * tg.stride * tg.dt;
    r.t_samples(j) = t;
    for (int i = 0; i <= n_xi; ++i) {
      const double s = t - r.z(i) / constants::c;
      const double x = s / tg.dt;
      if (s < 0.0) {
        r.field(i, j) = pulse(s);
        r.coherence(i, j) = 0.0;
        r.excitation(i, j) = 0.0;
        continue;
      }
      r.field(i, j) = pulse(s) + sample_cubic(omega[i], x);
      r.coherence(i, j) = sample_cubic(response[i].coherence, x);
      r.excitation(i, j) = sample_cubic(response[i].excitation.cast<cd>(), x).real();
    }
  }
  r.t.resize(nt);
  r.input.resize(nt);
  r.output.resize(nt);
  const double shift = medium.length / constants::c;
  for (long k = 0; k < nt; ++k) {
    const double t = k * tg.dt;
    r.t(k) = t;
    r.input(k) = pulse(t);
    const double s = t - shift;
    r.output(k) = s < 0.0 ? cd(pulse(s)) : pulse(s) + sample_cubic(omega[n_xi], s / tg.dt);
  }
  r.transmission = transmission(r.input, r.output);
  r.fidelity = fidelity(r.input, r.output);
  r.meta = base_metadata("marching", level, n_xi + 1, static_cast<int>(vgrid.size()), tg, vgrid);
  r.meta.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace rsit

// Acceptance report: one PASS/FAIL line per criterion. Exits 0 either way;
// the lines are the result, also written to acceptance_report.txt in the
// working directory. RSIT_SKIP_LONG=1 skips criterion 5.
#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rsit/analysis/metrics.hpp"
#include "rsit/analysis/optimal_area.hpp"
#include "rsit/analysis/scan.hpp"
#include "rsit/analysis/steady_state.hpp"
#include "rsit/atomdata.hpp"
#include "rsit/config.hpp"
#include "rsit/constants.hpp"
#include "rsit/dynamics/interaction.hpp"
#include "rsit/dynamics/mean_field.hpp"
#include "rsit/dynamics/transient.hpp"
#include "rsit/dynamics/two_body.hpp"
#include "rsit/io.hpp"
#include "rsit/numerics/chebyshev.hpp"
#include "rsit/numerics/quadrature.hpp"
#include "rsit/numerics/rk4.hpp"
#include "rsit/parallel.hpp"
#include "rsit/propagation/medium.hpp"
#include "rsit/propagation/propagate.hpp"

using namespace rsit;
namespace fs = std::filesystem;
constexpr double pi = constants::pi;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string f(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
std::string f(const char* fmt, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, ap);
  va_end(ap);
  return buf;
}

int failures = 0;
std::ofstream report("acceptance_report.txt");

void emit(const std::string& line) {
  std::fputs(line.c_str(), stdout);
  std::fflush(stdout);
  report << line << std::flush;
}

void run(int id, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  char head[160];
  std::snprintf(head, sizeof head, "criterion %2d %s  %s  [", id, o.pass ? "PASS" : "FAIL", title);
  emit(head + o.detail + f("] (%.1f s)\n", secs));
}

// Baseline: n = 30, tau = 1 ns, t0 = 5 ns, T = 300 K, L = 400 um, N = 5e15 cm^-3.
struct Baseline {
  SpeciesConstants species = cesium();
  GasConfig gas;
  PulseSpec pulse = PulseSpec::with_area(PulseShape::sech, 0.35 * pi, 1e-9, 5e-9);
  NumericsConfig numerics;
};

ScanResult baseline_scan(int n) {
  Baseline b;
  b.gas.n = n;
  ScanOptions opt;
  opt.workers = 0;
  return optimal_area_scan(b.species, b.gas, b.pulse, Level::mean_field, b.numerics, opt);
}

const ScanResult& scan_n30() {
  static const ScanResult r = baseline_scan(30);
  return r;
}

Outcome criterion1() {
  const auto cs = cesium();
  bool ok = true;
  double prev = 0.0;
  for (int n = 20; n <= 60; ++n) {
    const double s = inelastic_cross_section(n, 300.0, cs);
    if (!(s > prev)) ok = false;
    prev = s;
  }
  const bool mono_n = ok;
  prev = 0.0;
  for (double T = 50; T <= 400; T += 10) {
    const double s = inelastic_cross_section(40, T, cs);
    if (!(s > prev)) ok = false;
    prev = s;
  }
  const bool mono_T = ok && mono_n;
  const double sigma = inelastic_cross_section(50, 300.0, cs);
  const double gamma = collisional_decay_rate(5e21, 300.0, sigma, cs);
  const double ghz = gamma / 1e9;
  return {mono_n && mono_T && ghz >= 0.3 && ghz <= 10.0,
          f("sigma increasing in n: %s, in T: %s; gamma(n=50) = %.3g GHz (1e9 s^-1)",
            mono_n ? "yes" : "no", mono_T ? "yes" : "no", ghz)};
}

Outcome criterion2() {
  const double lim = std::abs(optimal_area_mf(1e-3, 1e-9) - 2 * pi);
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> lu(-4.0, 4.0), lt(-11.0, -6.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double tau = std::pow(10.0, lt(rng));
    const double u = std::pow(10.0, lu(rng)) / tau;
    worst = std::max(worst, std::abs(optimal_area_residual(optimal_area_mf(u, tau), u, tau)));
  }
  return {lim < 1e-9 && worst < 1e-10,
          f("|theta~(u->0) - 2pi| = %.2g, max residual = %.2g", lim, worst)};
}

Medium ideal(const PulseSpec& p) {
  Medium m = make_medium(cesium(), GasConfig{}, p);
  m.u = 0.0;
  m.gamma_c = 0.0;
  m.Gamma = 0.0;
  m.v_thermal = 0.0;
  return m;
}

Outcome criterion3() {
  NumericsConfig num;
  num.n_v = 1;
  const auto p2 = PulseSpec::with_area(PulseShape::sech, 2 * pi, 1e-9, 5e-9);
  const auto p1 = PulseSpec::with_area(PulseShape::sech, pi, 1e-9, 5e-9);
  const auto r2 = run_propagation(p2, ideal(p2), Level::mean_field, num);
  const auto r1 = run_propagation(p1, ideal(p1), Level::mean_field, num);
  const bool ok = r2.fidelity >= 0.99 && r2.transmission >= 0.99 &&
                  r1.transmission < r2.transmission - 0.01;
  return {ok, f("2pi: F = %.5f, eta = %.5f; pi: eta = %.5f", r2.fidelity, r2.transmission,
                r1.transmission)};
}

Outcome criterion4() {
  const ScanResult& s = scan_n30();
  const auto& last = s.points.back();  // theta = 2 pi
  const bool pos = std::abs(s.theta_star - 0.35 * pi) <= 0.05 * pi;
  const bool good = s.fidelity_star > 0.9 && s.transmission_star > 0.9;
  const bool drop = last.ok && last.fidelity <= s.fidelity_star - 0.05;
  return {pos && good && drop,
          f("theta* = %.3f pi, F* = %.4f, eta* = %.4f, F(2pi) = %.4f, unimodal = %s, failures = %d",
            s.theta_star / pi, s.fidelity_star, s.transmission_star, last.fidelity,
            s.unimodal ? "yes" : "no", s.failures)};
}

Outcome criterion5() {
  if (const char* e = std::getenv("RSIT_SKIP_LONG"); e && std::string(e) == "1")
    return {false, "long suite skipped (RSIT_SKIP_LONG=1)"};
  const auto cs = cesium();
  std::ostringstream os;
  bool agree = true;
  std::vector<std::pair<int, double>> star;
  for (int n : {20, 25, 30, 35, 40, 50}) {
    const ScanResult s = n == 30 ? scan_n30() : baseline_scan(n);
    star.emplace_back(n, s.theta_star);
    if (n <= 35) {
      const double th =
          optimal_area_self_consistent(5e21, rydberg_state(n, cs).c6, PulseShape::sech, 1e-9);
      const double rel = std::abs(s.theta_star - th) / th;
      if (!(rel < 0.15)) agree = false;
      os << f("n=%d: scan %.3f pi vs formula %.3f pi (rel %.2f); ", n, s.theta_star / pi, th / pi,
              rel);
    } else {
      os << f("n=%d: scan %.3f pi; ", n, s.theta_star / pi);
    }
  }
  auto at = [&](int n) {
    for (auto& [m, t] : star)
      if (m == n) return t;
    return std::nan("");
  };
  const bool dec = at(20) > at(30) && at(30) > at(40) && at(40) > at(50);
  os << "strictly decreasing over {20,30,40,50}: " << (dec ? "yes" : "no");
  return {agree && dec, "long suite; " + os.str()};
}

Outcome criterion6() {
  const auto pulse = PulseSpec::with_area(PulseShape::sech, 0.35 * pi, 1e-9, 5e-9);
  TransientResult tr[2];
  const double temps[2] = {1e-6, 300.0};
  double anti[2], end[2];
  for (int i = 0; i < 2; ++i) {
    GasConfig gas;
    gas.temperature = temps[i];
    const Medium m = make_medium(cesium(), gas, pulse);
    const auto vg = velocity_grid(m.v_thermal, 16);
    tr[i] = transient_dynamics(pulse, make_mf_params(vg, m.wavenumber, m.u, m.gamma_c, m.Gamma));
    const Eigen::VectorXd im = tr[i].coherence.imag();
    anti[i] = antisymmetry_residual(tr[i].t, im, pulse.t0);
    end[i] = std::abs(tr[i].excitation(tr[i].t.size() - 1));
  }
  const double diff = (tr[0].excitation - tr[1].excitation).cwiseAbs().maxCoeff();
  const bool ok = anti[0] < 0.1 && anti[1] < 0.1 && end[0] < 0.05 && end[1] < 0.05 && diff < 0.1;
  return {ok, f("theta = 0.35 pi; 1 uK: antisym %.3f, rho22_end %.4f; 300 K: antisym %.3f, "
                "rho22_end %.4f; max |d rho22| = %.4f",
                anti[0], end[0], anti[1], end[1], diff)};
}

Outcome criterion7() {
  Baseline b;
  const std::vector<double> temps{1, 3, 10, 30, 100, 200, 300, 400};
  const auto etas = parallel_map<double>(temps.size(), 0, [&](std::size_t i) {
    GasConfig g = b.gas;
    g.temperature = temps[i];
    return run_propagation(b.pulse, make_medium(b.species, g, b.pulse), Level::mean_field,
                           b.numerics)
        .transmission;
  });
  const auto [lo, hi] = std::minmax_element(etas.begin(), etas.end());
  const double spread = *hi - *lo;

  // Steady state with the shipped defaults (tau = 100 ns, spontaneous decay on).
  RunConfig c;
  c.pulse = PulseSpec::with_area(PulseShape::sech, 0.35 * pi, 100e-9, 500e-9);
  const double vd = gate_potential(rydberg_state(c.gas.n, c.species).c6, c.steady.gate_separation);
  const auto ts = c.steady.temperature.values();
  double ref = 0.0, best = -1.0, best_T = 0.0;
  for (double T : ts) {
    GasConfig g = c.gas;
    g.temperature = T;
    const double im =
        steady_state_susceptibility(make_medium(c.species, g, c.pulse, true), c.steady.omega, vd,
                                    c.steady.n_v)
            .chi.imag();
    if (ref == 0.0) ref = im;
    if (im / ref > best) {
      best = im / ref;
      best_T = T;
    }
  }
  const bool ok = spread < 0.1 && best_T >= 3.0 && best_T <= 30.0;
  return {ok, f("tau = 1 ns: eta in [%.4f, %.4f] over 1-400 K (spread %.4f); "
                "tau = 100 ns: max Im chi/Im chi(1 K) = %.3f at T = %.2f K",
                *lo, *hi, spread, best, best_T)};
}

Outcome criterion8() {
  Baseline b;
  const Medium m = make_medium(b.species, b.gas, b.pulse);
  const auto a = run_propagation(b.pulse, m, Level::mean_field, b.numerics);
  const auto c = cross_check_marching(b.pulse, m, Level::mean_field, b.numerics);
  const double d_eta = std::abs(a.transmission - c.transmission) / a.transmission;
  const double d_f = std::abs(a.fidelity - c.fidelity) / a.fidelity;
  NumericsConfig fine = b.numerics;
  fine.n_z *= 2;
  fine.dt = b.numerics.resolved_dt(b.pulse) / 2;
  fine.dt_out = b.numerics.resolved_dt_out(b.pulse);
  const auto r = run_propagation(b.pulse, m, Level::mean_field, fine);
  const double c_eta = std::abs(r.transmission - a.transmission);
  const double c_f = std::abs(r.fidelity - a.fidelity);
  const bool ok = d_eta < 0.01 && d_f < 0.01 && c_eta < 1e-3 && c_f < 1e-3;
  return {ok, f("chebyshev eta %.5f F %.5f; marching eta %.5f F %.5f; "
                "2x resolution changes eta by %.2g, F by %.2g",
                a.transmission, a.fidelity, c.transmission, c.fidelity, c_eta, c_f)};
}

template <typename F>
void drive(TwoBodyState& s, const TwoBodyParams& p, const PulseSpec& pulse, double t_end, double dt,
           F each) {
  auto rhs = [&](const TwoBodyState& x, double t) {
    return twobody_rhs(x, Eigen::VectorXcd::Constant(x.n_z, pulse(t)), p);
  };
  const long steps = std::lround(t_end / dt);
  for (long k = 0; k < steps; ++k) {
    s = rk4_step(rhs, s, k * dt, dt);
    each(s, (k + 1) * dt);
  }
}

Outcome criterion9() {
  const auto zg = chebyshev_grid(400e-6, 8);
  const auto vg = velocity_grid(0.0, 1);
  const double tau = 1e-9, dt = 5e-12;
  const auto pulse = PulseSpec::with_area(PulseShape::sech, 1.3 * pi, tau, 5e-9);

  // V = 0: the hierarchy keeps the factorized form.
  const auto p0 = make_twobody_params(zg, vg, 2e7, 5e21, 0.0, 0.0, 0.0, 0.0);
  TwoBodyState s = TwoBodyState::ground(8, 1);
  double fact = 0.0;
  drive(s, p0, pulse, 15e-9, dt, [&](const TwoBodyState& x, double) {
    const auto g = factorized(x.rho21, x.w, x.n_z);
    fact = std::max({fact, (x.rho22_21 - g.rho22_21).cwiseAbs().maxCoeff(),
                     (x.rho21_21 - g.rho21_21).cwiseAbs().maxCoeff(),
                     (x.rho21_12 - g.rho21_12).cwiseAbs().maxCoeff(),
                     (x.rho22_22 - g.rho22_22).cwiseAbs().maxCoeff()});
  });

  // Weak pair potential (V tau = 0.05): compare with the mean field whose
  // local shift is N^(1/3) sum_b w_b V_ab.
  const double density = 1.6e10, z_m = 400e-6;
  const double c6 = 0.05 / tau * std::pow(z_m, 6);
  const auto pw = make_twobody_params(zg, vg, 2e7, density, c6, z_m, 0.0, 0.0);
  const Eigen::VectorXd u = pw.density_cbrt * (pw.potential * pw.cc_weights.matrix());
  const double utau = u.maxCoeff() * tau;
  std::vector<MFBlochState> mf(8, MFBlochState::ground(1, 1));
  std::vector<MFParams> mp;
  for (int a = 0; a < 8; ++a) mp.push_back(make_mf_params(vg, 2e7, u(a), 0.0, 0.0));
  TwoBodyState t = TwoBodyState::ground(8, 1);
  double worst = 0.0, peak = 0.0;
  double now = 0.0;
  drive(t, pw, pulse, 15e-9, dt, [&](const TwoBodyState& x, double tn) {
    const Eigen::VectorXcd r = coherence_average(x, pw.weights);
    for (int a = 0; a < 8; ++a) {
      mf[a] = rk4_step(
          [&](const MFBlochState& y, double tt) {
            return mf_rhs(y, Eigen::VectorXcd::Constant(1, pulse(tt)), mp[a]);
          },
          mf[a], now, dt);
      worst = std::max(worst, std::abs(r(a) - mf[a].rho21(0, 0)));
      peak = std::max(peak, std::abs(mf[a].rho21(0, 0)));
    }
    now = tn;
  });
  const double rel = worst / peak;
  return {fact < 1e-6 && utau < 0.1 && rel < 0.05,
          f("V = 0 factorization error %.2g; u tau = %.3f, max |R21_2b - R21_mf| / max |R21| = %.4f",
            fact, utau, rel)};
}

Outcome criterion10() {
  // Gauss-Hermite moments of exp(-v^2/vT^2)/(sqrt(pi) vT).
  const double vT = 194.0;
  const auto g = velocity_grid(vT, 16);
  double mom = 0.0;
  for (int k = 0; k <= 8; ++k) {
    double exact = 0.0;
    if (k % 2 == 0) {
      exact = 1.0;
      for (int j = 1; j < k; j += 2) exact *= j * vT * vT / 2.0;
    }
    const double num = g.weights.dot(g.nodes.array().pow(k).matrix());
    mom = std::max(mom, std::abs(num - exact) / std::pow(vT, k));
  }
  // Spectral derivative of smooth functions at N = 32.
  const auto cg = chebyshev_grid(1.0, 32);
  const Eigen::ArrayXd z = cg.points.array();
  double der = 0.0;
  der = std::max(der, (cg.diff_matrix * z.exp().matrix() - z.exp().matrix()).cwiseAbs().maxCoeff());
  der = std::max(der, (cg.diff_matrix * (3 * z).sin().matrix() - (3 * (3 * z).cos()).matrix())
                          .cwiseAbs()
                          .maxCoeff());
  // RK4 order on y' = -y^2 + sin t.
  using V = Eigen::VectorXd;
  auto fn = [](const V& y, double t) { return V(V::Constant(1, -y(0) * y(0) + std::sin(t))); };
  auto solve = [&](int steps) {
    V y = V::Constant(1, 1.0);
    const double h = 2.0 / steps;
    for (int k = 0; k < steps; ++k) y = rk4_step(fn, y, k * h, h);
    return y(0);
  };
  const double ref = solve(12800);
  const double order = std::log2(std::abs(solve(50) - ref) / std::abs(solve(100) - ref));
  return {mom < 1e-10 && der < 1e-8 && order >= 3.8 && order <= 4.2,
          f("moment error %.2g, derivative error %.2g, RK4 order %.3f", mom, der, order)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome criterion11() {
  const fs::path root = fs::temp_directory_path() / "rsit_acceptance_determinism";
  fs::remove_all(root);
  fs::create_directories(root);
  const fs::path cfg = root / "baseline.json";
  io::write_json(cfg, to_json(RunConfig{}));
  std::vector<std::string> csv, summary;
  for (int w : {1, 4, 8}) {
    const fs::path out = root / ("w" + std::to_string(w));
    const std::string cmd = std::string("\"") + RSIT_CLI + "\" sweep-area --config \"" +
                            cfg.string() + "\" --out \"" + out.string() +
                            "\" --workers " + std::to_string(w) + " > /dev/null";
    if (std::system(cmd.c_str()) != 0) return {false, "sweep-area failed: " + cmd};
    csv.push_back(slurp(out / "scan.csv"));
    summary.push_back(slurp(out / "summary.json"));
  }
  const bool same = !csv[0].empty() && csv[0] == csv[1] && csv[0] == csv[2] &&
                    summary[0] == summary[1] && summary[0] == summary[2];
  return {same, f("scan.csv (%zu bytes) and summary.json identical for workers 1, 4, 8: %s",
                  csv[0].size(), same ? "yes" : "no")};
}

}  // namespace

int main() {
  emit(f("acceptance report (rsit %s)\n", RSIT_VERSION));
  run(1, "cross-section trends", criterion1);
  run(2, "optimal-area limits and root property", criterion2);
  run(3, "non-interacting SIT", criterion3);
  run(4, "Rydberg-SIT optimum at n = 30", criterion4);
  run(5, "scan vs formula over n", criterion5);
  run(6, "transient symmetry", criterion6);
  run(7, "thermal robustness and steady-state absorption peak", criterion7);
  run(8, "solver cross-validation and convergence", criterion8);
  run(9, "correlator-level consistency", criterion9);
  run(10, "numerics foundations", criterion10);
  run(11, "sweep determinism across workers", criterion11);
  emit(f("%d of 11 criteria failed\n", failures));
  return 0;
}

// Command-line driver: one subcommand per experiment, each writing CSV and
// JSON into its own output directory.

#include <Eigen/Core>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rsit/analysis/metrics.hpp"
#include "rsit/analysis/optimal_area.hpp"
#include "rsit/analysis/regime.hpp"
#include "rsit/analysis/scan.hpp"
#include "rsit/analysis/steady_state.hpp"
#include "rsit/config.hpp"
#include "rsit/constants.hpp"
#include "rsit/dynamics/transient.hpp"
#include "rsit/errors.hpp"
#include "rsit/io.hpp"
#include "rsit/numerics/quadrature.hpp"
#include "rsit/parallel.hpp"

#ifndef RSIT_VERSION
#define RSIT_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace rsit;

namespace {

constexpr const char* kOutputRootEnv = "RSIT_OUTPUT_ROOT";

struct Options {
  std::string config;
  std::string out;
  std::optional<int> workers;
  std::optional<std::string> level;
  std::optional<std::string> theta;
  std::optional<int> n;
  std::optional<double> temperature;
  std::optional<std::string> n_range;
  std::optional<std::string> density_range;
  std::optional<std::string> temperature_range;
  std::optional<int> points;
  bool dump_field = false;
  bool marching = false;
};

// "lo:hi[:count]" with values in the config's bare units.
RangeSection parse_range(const std::string& s, const std::string& dim, RangeSection r,
                         const std::string& flag) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto p = s.find(':', start);
    parts.push_back(s.substr(start, p - start));
    if (p == std::string::npos) break;
    start = p + 1;
  }
  if (parts.size() < 2 || parts.size() > 3)
    throw ConfigError(flag, "expected lo:hi or lo:hi:count");
  r.min = parse_quantity(json(parts[0]), dim, flag);
  r.max = parse_quantity(json(parts[1]), dim, flag);
  if (parts.size() == 3) r.count = std::stoi(parts[2]);
  if (r.count < 1 || r.max < r.min || (r.log && r.min <= 0.0))
    throw ConfigError(flag, "invalid range '" + s + "'");
  return r;
}

RunConfig load(const Options& o) {
  RunConfig c = o.config.empty() ? parse_config(json::object()) : parse_config_file(o.config);
  if (o.workers) {
    if (*o.workers < 0) throw ConfigError("--workers", "must be >= 0");
    c.run.workers = *o.workers;
  }
  if (o.level) {
    try {
      c.run.level = level_from_string(*o.level);
    } catch (const std::exception&) {
      throw ConfigError("--level", "expected mean_field or two_body");
    }
  }
  if (o.theta) {
    const double th = parse_quantity(json(*o.theta), "area", "--theta");
    if (th < 0.0) throw ConfigError("--theta", "must be >= 0");
    c.pulse.omega_s = amplitude_for_area(c.pulse.shape, th, c.pulse.tau);
  }
  if (o.n) {
    if (*o.n < kMinPrincipalQuantumNumber) throw ConfigError("--n", "n below validity floor (10)");
    c.gas.n = *o.n;
  }
  if (o.temperature) {
    if (*o.temperature < 0.0) throw ConfigError("--temperature", "must be >= 0");
    c.gas.temperature = *o.temperature;
  }
  if (o.n_range) {
    const auto p = o.n_range->find(':');
    if (p == std::string::npos) throw ConfigError("--n-range", "expected lo:hi");
    c.cross_section.n_min = std::stoi(o.n_range->substr(0, p));
    c.cross_section.n_max = std::stoi(o.n_range->substr(p + 1));
    if (c.cross_section.n_min < kMinPrincipalQuantumNumber ||
        c.cross_section.n_max < c.cross_section.n_min)
      throw ConfigError("--n-range", "invalid range");
  }
  if (o.density_range)
    c.regime.density = parse_range(*o.density_range, "density", c.regime.density, "--density-range");
  if (o.temperature_range) {
    c.regime.temperature =
        parse_range(*o.temperature_range, "temperature", c.regime.temperature, "--temperature-range");
    c.steady.temperature =
        parse_range(*o.temperature_range, "temperature", c.steady.temperature, "--temperature-range");
  }
  if (o.points) {
    if (*o.points < 3) throw ConfigError("--points", "must be >= 3");
    c.scan.points = *o.points;
  }
  if (o.dump_field) c.run.dump_field = true;
  if (!o.out.empty()) c.run.out_dir = o.out;
  return c;
}

fs::path output_dir(const RunConfig& c, const std::string& sub) {
  fs::path dir;
  if (!c.run.out_dir.empty()) {
    dir = c.run.out_dir;
  } else {
    const char* root = std::getenv(kOutputRootEnv);
    dir = fs::path(root && *root ? root : "out") / sub;
  }
  fs::create_directories(dir);
  return dir;
}

int workers(const RunConfig& c) { return c.run.workers > 0 ? c.run.workers : default_workers(); }

json provenance(const std::string& sub) {
  json j;
  j["program"] = "rsit";
  j["version"] = RSIT_VERSION;
  j["subcommand"] = sub;
  j["eigen"] = std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) +
               "." + std::to_string(EIGEN_MINOR_VERSION);
  j["compiler"] = __VERSION__;
  return j;
}

void write_common(const fs::path& dir, const RunConfig& c, const std::string& sub) {
  io::write_json(dir / "config.json", to_json(c));
  io::write_json(dir / "provenance.json", provenance(sub));
}

json medium_json(const Medium& m) {
  return {{"wavenumber_1_m", m.wavenumber},
          {"density_m3", m.density},
          {"length_m", m.length},
          {"temperature_K", m.temperature},
          {"v_thermal_m_s", m.v_thermal},
          {"doppler_rad_s", m.doppler},
          {"sigma_m2", m.sigma},
          {"gamma_c_rad_s", m.gamma_c},
          {"Gamma_rad_s", m.Gamma},
          {"dipole_C_m", m.dipole},
          {"kappa_rad_s_m", m.kappa},
          {"c6_rad_s_m6", m.c6},
          {"u_rad_s", m.u},
          {"u_quadrature_rad_s", m.u_quadrature},
          {"z_m_m", m.z_m}};
}

int cmd_cross_section(const RunConfig& c) {
  const fs::path dir = output_dir(c, "cross-section");
  write_common(dir, c, "cross-section");
  io::CsvWriter csv(dir / "cross_section.csv", {"n", "T", "sigma_m2", "gamma_rad_s"});
  for (double T : c.cross_section.temperatures)
    for (int n = c.cross_section.n_min; n <= c.cross_section.n_max; ++n) {
      const double sigma = inelastic_cross_section(n, T, c.species);
      csv << n << T << sigma << collisional_decay_rate(c.gas.density, T, sigma, c.species);
      csv.end_row();
    }
  io::write_json(dir / "summary.json", {{"density_m3", c.gas.density},
                                        {"n_min", c.cross_section.n_min},
                                        {"n_max", c.cross_section.n_max},
                                        {"rows", static_cast<long>(c.cross_section.temperatures.size()) *
                                                     (c.cross_section.n_max - c.cross_section.n_min + 1)}});
  return 0;
}

int cmd_transient(const RunConfig& c) {
  const fs::path dir = output_dir(c, "transient");
  write_common(dir, c, "transient");
  const Medium m = make_medium(c.species, c.gas, c.pulse, c.run.spontaneous_decay);
  const auto vg = velocity_grid(m.v_thermal, c.numerics.n_v);
  TransientSettings ts;
  ts.dt = c.numerics.dt;
  ts.dt_out = c.numerics.dt_out;
  const TransientResult tr =
      transient_dynamics(c.pulse, make_mf_params(vg, m.wavenumber, m.u, m.gamma_c, m.Gamma), ts);

  const double theta_t = optimal_area_self_consistent(m.density, m.c6, c.pulse.shape, c.pulse.tau);
  const AnsatzParams ap = ansatz_params(theta_t, m.u, c.pulse.tau);
  const Eigen::VectorXd tc = tr.t.array() - c.pulse.t0;
  const AnsatzTrajectory an = ansatz_trajectory(ap, c.pulse.tau, tc);

  io::CsvWriter csv(dir / "transient.csv",
                    {"t_s", "re_R21", "im_R21", "rho22", "w", "ansatz_rho22", "ansatz_re_rho21",
                     "ansatz_im_rho21"});
  for (Eigen::Index i = 0; i < tr.t.size(); ++i) {
    csv << tr.t(i) << tr.coherence(i).real() << tr.coherence(i).imag() << tr.excitation(i)
        << tr.inversion(i) << an.excitation(i) << an.coherence(i).real() << an.coherence(i).imag();
    csv.end_row();
  }
  const Eigen::Index last = tr.t.size() - 1;
  const Eigen::VectorXd im = tr.coherence.imag();
  io::write_json(dir / "summary.json",
                 {{"theta_rad", c.pulse.area()},
                  {"theta_over_pi", c.pulse.area() / constants::pi},
                  {"rho22_end", tr.excitation(last)},
                  {"abs_R21_end", std::abs(tr.coherence(last))},
                  {"rho22_max", tr.excitation.maxCoeff()},
                  {"im_R21_antisymmetry_residual", antisymmetry_residual(tr.t, im, c.pulse.t0)},
                  {"optimal_area_mf_rad", theta_t},
                  {"ansatz", {{"A", ap.A}, {"B", ap.B}, {"C", ap.C}, {"theta_tilde", ap.theta_tilde}}},
                  {"ansatz_abs_rho21_end", std::abs(an.coherence(last))},
                  {"ansatz_vs_ode_abs_rho21_end",
                   std::abs(an.coherence(last) - tr.coherence(last))},
                  {"medium", medium_json(m)}});
  return 0;
}

int cmd_propagate(const RunConfig& c, bool marching) {
  const fs::path dir = output_dir(c, "propagate");
  write_common(dir, c, "propagate");
  const Medium m = make_medium(c.species, c.gas, c.pulse, c.run.spontaneous_decay);
  const PropagationResult r = marching ? cross_check_marching(c.pulse, m, c.run.level, c.numerics)
                                       : run_propagation(c.pulse, m, c.run.level, c.numerics);

  io::CsvWriter pulses(dir / "pulses.csv", {"t_s", "re_in", "im_in", "re_out", "im_out",
                                            "abs_in", "abs_out"});
  for (Eigen::Index i = 0; i < r.t.size(); ++i) {
    pulses << r.t(i) << r.input(i).real() << r.input(i).imag() << r.output(i).real()
           << r.output(i).imag() << std::abs(r.input(i)) << std::abs(r.output(i));
    pulses.end_row();
  }
  std::vector<std::string> head{"t_s"};
  for (Eigen::Index j = 0; j < r.z.size(); ++j) head.push_back("z" + std::to_string(j));
  io::CsvWriter field(dir / "field_abs.csv", head);
  for (Eigen::Index k = 0; k < r.t_samples.size(); ++k) {
    field << r.t_samples(k);
    for (Eigen::Index j = 0; j < r.z.size(); ++j) field << std::abs(r.field(j, k));
    field.end_row();
  }
  if (c.run.dump_field) io::write_field_dump(dir / "field.bin", r.field);

  const PulseArea a_in = pulse_area(r.input, r.dt());
  const PulseArea a_out = pulse_area(r.output, r.dt());
  const Eigen::VectorXd ain = r.input.cwiseAbs(), aout = r.output.cwiseAbs();
  const double delay = peak_time(r.t, aout) - peak_time(r.t, ain);
  io::write_json(dir / "summary.json",
                 {{"transmission", r.transmission},
                  {"fidelity", r.fidelity},
                  {"theta_in_rad", a_in.theta},
                  {"theta_out_rad", a_out.theta},
                  {"theta_in_over_pi", a_in.theta / constants::pi},
                  {"theta_out_truncated", a_out.truncated},
                  {"peak_delay_s", delay},
                  {"group_velocity_estimate_m_s",
                   c.pulse.omega_s > 0.0 && m.kappa > 0.0 ? group_velocity_estimate(c.pulse.omega_s, m)
                                                         : 0.0},
                  {"medium", medium_json(m)}});
  io::write_json(dir / "meta.json", io::run_metadata(r));
  return 0;
}

int cmd_sweep_area(const RunConfig& c) {
  const fs::path dir = output_dir(c, "sweep-area");
  write_common(dir, c, "sweep-area");
  ScanOptions opt;
  opt.n_coarse = c.scan.points;
  opt.theta_min = c.scan.theta_min;
  opt.theta_max = c.scan.theta_max;
  opt.refine_evals = c.scan.refine;
  opt.plateau_tol = c.scan.plateau_tol;
  opt.workers = workers(c);
  opt.spontaneous_decay = c.run.spontaneous_decay;
  const ScanResult s =
      optimal_area_scan(c.species, c.gas, c.pulse, c.run.level, c.numerics, opt);

  io::CsvWriter csv(dir / "scan.csv", {"theta_rad", "theta_over_pi", "refined", "ok",
                                       "transmission", "fidelity", "u_rad_s", "error"});
  for (const auto& p : s.points) {
    csv << p.theta << p.theta / constants::pi << (p.refined ? 1 : 0) << (p.ok ? 1 : 0)
        << p.transmission << p.fidelity << p.u << p.error;
    csv.end_row();
  }
  const double theta_mf = optimal_area_self_consistent(
      c.gas.density, rydberg_state(c.gas.n, c.species).c6, c.pulse.shape, c.pulse.tau);
  io::write_json(dir / "summary.json", {{"theta_star_rad", s.theta_star},
                                        {"theta_star_over_pi", s.theta_star / constants::pi},
                                        {"fidelity_star", s.fidelity_star},
                                        {"transmission_star", s.transmission_star},
                                        {"unimodal", s.unimodal},
                                        {"failures", s.failures},
                                        {"optimal_area_mf_rad", theta_mf},
                                        {"optimal_area_mf_over_pi", theta_mf / constants::pi}});
  return 0;
}

int cmd_regime_map(const RunConfig& c) {
  const fs::path dir = output_dir(c, "regime-map");
  write_common(dir, c, "regime-map");
  const auto dens = c.regime.density.values();
  const auto temps = c.regime.temperature.values();
  const std::size_t nd = dens.size();
  const auto pts = parallel_map<RegimePoint>(nd * temps.size(), workers(c), [&](std::size_t k) {
    return regime_classify(dens[k % nd], temps[k / nd], c.gas.n, c.pulse.omega_s, c.species);
  });
  io::CsvWriter csv(dir / "regime.csv", {"density_m3", "temperature_K", "kv_T_rad_s", "u_rad_s",
                                         "gamma_rad_s", "ratio", "label"});
  json counts = {{"doppler_dominant", 0}, {"rydberg_dominant", 0}, {"absorption_dominant", 0}};
  json boundaries = json::array();
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const auto& p = pts[k];
    csv << p.density << p.temperature << p.kv_T << p.u << p.gamma_c << p.ratio
        << std::string(to_string(p.label));
    csv.end_row();
    counts[std::string(to_string(p.label))] = counts[std::string(to_string(p.label))].get<int>() + 1;
    if (k % nd != 0 && pts[k - 1].label != p.label)
      boundaries.push_back({{"temperature_K", p.temperature},
                            {"from", std::string(to_string(pts[k - 1].label))},
                            {"to", std::string(to_string(p.label))},
                            {"density_lo_m3", pts[k - 1].density},
                            {"density_hi_m3", p.density}});
  }
  io::write_json(dir / "summary.json",
                 {{"rows", pts.size()}, {"counts", counts}, {"boundaries", boundaries}});
  return 0;
}

int cmd_steady_chi(const RunConfig& c) {
  const fs::path dir = output_dir(c, "steady-chi");
  write_common(dir, c, "steady-chi");
  const double c6 = c.steady.gate_c6 != 0.0 ? c.steady.gate_c6 : rydberg_state(c.gas.n, c.species).c6;
  const double vd = gate_potential(c6, c.steady.gate_separation);
  const auto temps = c.steady.temperature.values();
  const auto chis = parallel_map<std::pair<Susceptibility, double>>(
      temps.size(), workers(c), [&](std::size_t i) {
        GasConfig g = c.gas;
        g.temperature = temps[i];
        const Medium m = make_medium(c.species, g, c.pulse, true);
        return std::make_pair(steady_state_susceptibility(m, c.steady.omega, vd, c.steady.n_v),
                              m.gamma_c);
      });
  // Normalized to the lowest temperature of the sweep (1 K by default).
  const auto ref = chis.front().first.chi;
  io::CsvWriter csv(dir / "steady_chi.csv", {"T", "re_chi", "im_chi", "re_chi_norm", "im_chi_norm",
                                             "phase", "absorption", "gamma_rad_s"});
  double best = -INFINITY, best_T = 0.0;
  for (std::size_t i = 0; i < temps.size(); ++i) {
    const auto& s = chis[i].first;
    const double im_norm = s.chi.imag() / ref.imag();
    if (im_norm > best) {
      best = im_norm;
      best_T = temps[i];
    }
    csv << temps[i] << s.chi.real() << s.chi.imag() << s.chi.real() / ref.real() << im_norm
        << s.phase << s.absorption << chis[i].second;
    csv.end_row();
  }
  io::write_json(dir / "summary.json", {{"v_d_rad_s", vd},
                                        {"reference_temperature_K", temps.front()},
                                        {"im_chi_norm_max", best},
                                        {"im_chi_norm_argmax_K", best_T}});
  return 0;
}

void print_error(const std::string& type, const std::string& msg, const std::string& path = {}) {
  json e = {{"type", type}, {"message", msg}};
  if (!path.empty()) e["path"] = path;
  std::cerr << json{{"error", e}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pulse propagation in warm Rydberg gases"};
  app.set_version_flag("--version", RSIT_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--config", o.config, "JSON run configuration");
  app.add_option("--out", o.out, std::string("output directory (default $") + kOutputRootEnv +
                                     "/<subcommand>, else out/<subcommand>)");
  app.add_option("--workers", o.workers, "worker threads, 0 = all cores");
  app.add_option("--level", o.level, "mean_field or two_body");

  auto* cs = app.add_subcommand("cross-section", "inelastic cross-section and decay rate vs n, T");
  cs->add_option("--n-range", o.n_range, "lo:hi principal quantum numbers");
  cs->add_option("--temperature", o.temperature, "single temperature in K");

  auto* tr = app.add_subcommand("transient", "single-position Bloch trajectories");
  auto* pr = app.add_subcommand("propagate", "full Maxwell-Bloch propagation");
  pr->add_flag("--dump-field", o.dump_field, "write field.bin");
  pr->add_flag("--marching", o.marching, "use the co-moving marching solver");
  auto* sw = app.add_subcommand("sweep-area", "fidelity vs input area scan");
  sw->add_option("--points", o.points, "coarse scan points");
  auto* rm = app.add_subcommand("regime-map", "regime labels over a density x temperature grid");
  rm->add_option("--density-range", o.density_range, "lo:hi[:count] in cm^-3");
  auto* sc = app.add_subcommand("steady-chi", "steady-state susceptibility vs temperature");
  for (auto* s : {tr, pr, sw, rm}) {
    s->add_option("--theta", o.theta, "input pulse area, e.g. 0.35pi");
  }
  for (auto* s : {tr, pr, sw, rm, sc}) {
    s->add_option("--n", o.n, "Rydberg principal quantum number");
    if (s != rm && s != sc) s->add_option("--temperature", o.temperature, "temperature in K");
  }
  for (auto* s : {rm, sc})
    s->add_option("--temperature-range", o.temperature_range, "lo:hi[:count] in K");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    print_error("usage", e.what());
    return 2;
  }

  try {
    const RunConfig c = load(o);
    if (*cs) return cmd_cross_section(c);
    if (*tr) return cmd_transient(c);
    if (*pr) return cmd_propagate(c, o.marching);
    if (*sw) return cmd_sweep_area(c);
    if (*rm) return cmd_regime_map(c);
    if (*sc) return cmd_steady_chi(c);
  } catch (const ConfigError& e) {
    print_error("config", e.what(), e.path());
    return 2;
  } catch (const SolverError& e) {
    print_error("solver", e.what());
    return 3;
  } catch (const std::exception& e) {
    print_error("runtime", e.what());
    return 1;
  }
  return 1;
}

#include "rsit/analysis/scan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rsit/parallel.hpp"

namespace rsit {

ScanPoint evaluate_area(const SpeciesConstants& species, const GasConfig& gas,
                        const PulseSpec& pulse, double theta, Level level,
                        const NumericsConfig& numerics, bool spontaneous_decay) {
  ScanPoint p;
  p.theta = theta;
  try {
    const PulseSpec ps = PulseSpec::with_area(pulse.shape, theta, pulse.tau, pulse.t0);
    const Medium m = make_medium(species, gas, ps, spontaneous_decay);
    p.u = m.u;
    const PropagationResult r = run_propagation(ps, m, level, numerics);
    p.transmission = r.transmission;
    p.fidelity = r.fidelity;
    p.ok = true;
  } catch (const std::exception& e) {
    p.error = e.what();
  }
  return p;
}

bool is_unimodal(const std::vector<double>& f, double tol) {
  if (f.empty()) return false;
  const double fmax = *std::max_element(f.begin(), f.end());
  const double thr = tol * std::abs(fmax);
  const std::size_t n = f.size();
  int peaks = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const bool left_ok = i == 0 || f[i] >= f[i - 1];
    const bool right_ok = i + 1 == n || f[i] > f[i + 1];
    if (!(left_ok && right_ok)) continue;
    // Prominence: drop to the lowest point before a higher value on each side.
    double lmin = f[i], rmin = f[i];
    bool lhigher = false, rhigher = false;
    for (std::size_t j = i; j-- > 0;) {
      if (f[j] > f[i]) { lhigher = true; break; }
      lmin = std::min(lmin, f[j]);
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (f[j] > f[i]) { rhigher = true; break; }
      rmin = std::min(rmin, f[j]);
    }
    double base;
    if (lhigher && rhigher) base = std::max(lmin, rmin);
    else if (lhigher) base = lmin;
    else if (rhigher) base = rmin;
    else base = -INFINITY;  // global maximum
    if (f[i] - base > thr) ++peaks;
  }
  return peaks == 1;
}

ScanResult optimal_area_scan(const SpeciesConstants& species, const GasConfig& gas,
                             const PulseSpec& pulse, Level level, const NumericsConfig& numerics,
                             const ScanOptions& opt) {
  if (opt.n_coarse < 3) throw std::invalid_argument("scan needs at least 3 coarse points");
  if (!(opt.theta_min >= 0.0 && opt.theta_max > opt.theta_min))
    throw std::invalid_argument("scan theta range must satisfy 0 <= min < max");
  const int n = opt.n_coarse;
  const double span = opt.theta_max - opt.theta_min;
  auto theta_k = [&](int k) { return opt.theta_min + (k + 1) * span / n; };

  auto coarse = parallel_map<ScanPoint>(n, opt.workers, [&](std::size_t k) {
    return evaluate_area(species, gas, pulse, theta_k(static_cast<int>(k)), level, numerics,
                         opt.spontaneous_decay);
  });

  ScanResult res;
  int best = -1;
  std::vector<double> curve;
  for (int k = 0; k < n; ++k) {
    if (!coarse[k].ok) {
      ++res.failures;
      continue;
    }
    curve.push_back(coarse[k].fidelity);
    if (best < 0 || coarse[k].fidelity > coarse[best].fidelity) best = k;
  }
  res.points = coarse;
  if (best < 0) return res;
  res.unimodal = is_unimodal(curve, opt.plateau_tol);

  ScanPoint top = coarse[best];
  double a = best > 0 ? theta_k(best - 1) : opt.theta_min;
  double b = best + 1 < n ? theta_k(best + 1) : theta_k(best);
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  auto eval = [&](double th) {
    ScanPoint p = evaluate_area(species, gas, pulse, th, level, numerics, opt.spontaneous_decay);
    p.refined = true;
    if (!p.ok) ++res.failures;
    res.points.push_back(p);
    if (p.ok && p.fidelity > top.fidelity) top = p;
    return p.ok ? p.fidelity : -1.0;
  };
  if (opt.refine_evals >= 2 && b > a) {
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = eval(c), fd = eval(d);
    for (int it = 2; it < opt.refine_evals; ++it) {
      if (fc >= fd) {
        b = d; d = c; fd = fc;
        c = b - g * (b - a);
        fc = eval(c);
      } else {
        a = c; c = d; fc = fd;
        d = a + g * (b - a);
        fd = eval(d);
      }
    }
  }
  std::stable_sort(res.points.begin(), res.points.end(),
                   [](const ScanPoint& x, const ScanPoint& y) { return x.theta < y.theta; });
  res.theta_star = top.theta;
  res.fidelity_star = top.fidelity;
  res.transmission_star = top.transmission;
  return res;
}

}  // namespace rsit

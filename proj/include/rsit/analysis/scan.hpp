#pragma once

#include <string>
#include <vector>

#include "rsit/atomdata.hpp"
#include "rsit/propagation/medium.hpp"
#include "rsit/propagation/propagate.hpp"

namespace rsit {

struct ScanOptions {
  int n_coarse = 25;
  double theta_min = 0.05 * 3.14159265358979323846;  // exclusive
  double theta_max = 2.0 * 3.14159265358979323846;
  int refine_evals = 8;        // golden-section evaluations around the coarse maximum
  double plateau_tol = 0.01;   // secondary maxima below this prominence (x F*) are noise
  int workers = 1;
  bool spontaneous_decay = false;
};

struct ScanPoint {
  double theta = 0.0;
  bool refined = false;
  bool ok = false;
  double transmission = 0.0;
  double fidelity = 0.0;
  double u = 0.0;
  std::string error;
};

struct ScanResult {
  std::vector<ScanPoint> points;  // sorted by theta
  double theta_star = 0.0;
  double fidelity_star = 0.0;
  double transmission_star = 0.0;
  bool unimodal = false;
  int failures = 0;
};

/// Coarse grid theta_k = theta_min + (k + 1)(theta_max - theta_min) / n_coarse,
/// run in parallel, then golden-section refinement on the bracket around the
/// coarse maximum. Each point is a full propagation with Omega_s set by theta
/// and u recomputed from Omega_s. Failed points are recorded, not fatal.
ScanResult optimal_area_scan(const SpeciesConstants& species, const GasConfig& gas,
                             const PulseSpec& pulse, Level level, const NumericsConfig& numerics,
                             const ScanOptions& options = {});

/// Single scan point; exposed for the CLI and tests.
ScanPoint evaluate_area(const SpeciesConstants& species, const GasConfig& gas,
                        const PulseSpec& pulse, double theta, Level level,
                        const NumericsConfig& numerics, bool spontaneous_decay);

/// True when F has exactly one local maximum with prominence above tol * max F.
bool is_unimodal(const std::vector<double>& f, double tol);

}  // namespace rsit

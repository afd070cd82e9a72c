#pragma once

#include "json.hpp"
#include <string>
#include <vector>

#include "rsit/atomdata.hpp"
#include "rsit/propagation/medium.hpp"
#include "rsit/propagation/propagate.hpp"
#include "rsit/propagation/pulse.hpp"

namespace rsit {

struct RunSection {
  Level level = Level::mean_field;
  std::string out_dir;          // empty: $RSIT_OUTPUT_ROOT/<subcommand> or out/<subcommand>
  int workers = 0;              // 0: hardware concurrency
  bool spontaneous_decay = false;
  bool dump_field = false;
};

struct ScanSection {
  int points = 25;
  double theta_min = 0.05 * 3.14159265358979323846;
  double theta_max = 2.0 * 3.14159265358979323846;
  int refine = 8;
  double plateau_tol = 0.01;
};

struct RangeSection {
  double min = 0.0;
  double max = 0.0;
  int count = 1;
  bool log = false;
  std::vector<double> values() const;
};

struct RegimeSection {
  RangeSection density{1e18, 1e24, 10, true};     // m^-3
  RangeSection temperature{1.0, 400.0, 10, true};  // K
};

struct CrossSectionSection {
  int n_min = 20;
  int n_max = 60;
  std::vector<double> temperatures{100.0, 300.0};  // K
};

struct SteadySection {
  double omega = 2.0 * 3.14159265358979323846 * 1.6e6;  // rad/s
  double gate_separation = 4.3e-6;                      // m
  double gate_c6 = 0.0;                                 // rad/s m^6; 0 uses the Rydberg-state C6
  RangeSection temperature{1.0, 400.0, 61, true};
  int n_v = 256;
};

struct RunConfig {
  SpeciesConstants species = cesium();
  GasConfig gas;
  PulseSpec pulse = PulseSpec::with_area(PulseShape::sech, 0.35 * 3.14159265358979323846, 1e-9,
                                         5e-9);
  NumericsConfig numerics;
  RunSection run;
  ScanSection scan;
  RegimeSection regime;
  CrossSectionSection cross_section;
  SteadySection steady;
};

bool operator==(const RunConfig& a, const RunConfig& b);

/// Strict parse: unknown keys, unit mismatches and invalid values raise
/// ConfigError naming the offending key. Quantities are numbers in the
/// documented config unit or strings "<value> <unit>".
RunConfig parse_config(const nlohmann::ordered_json& j);
RunConfig parse_config_file(const std::string& path);

/// Fully-resolved config in SI units; parse_config(to_json(c)) == c.
nlohmann::ordered_json to_json(const RunConfig& c);

/// Quantity parsing, exposed for the CLI overrides. `dim` is one of
/// time, length, wavelength, density, temperature, frequency, c6, dipole,
/// mass, area.
double parse_quantity(const nlohmann::ordered_json& v, const std::string& dim,
                      const std::string& path);

}  // namespace rsit

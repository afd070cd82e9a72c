#pragma once

#include <string_view>

#include "rsit/atomdata.hpp"

namespace rsit {

enum class Regime { doppler_dominant, rydberg_dominant, absorption_dominant };

std::string_view to_string(Regime r);

struct RegimePoint {
  double density = 0.0;      // m^-3
  double temperature = 0.0;  // K
  double kv_T = 0.0;         // rad/s
  double u = 0.0;            // rad/s
  double gamma_c = 0.0;      // 1/s
  Regime label = Regime::doppler_dominant;
  double ratio = 0.0;        // (kv_T + u) / gamma_c; +inf when gamma_c = 0
};

/// rydberg_dominant:    u >= 10 kv_T and kv_T + u >= 100 gamma
/// absorption_dominant: kv_T + u < 100 gamma
/// doppler_dominant:    otherwise
Regime classify(double kv_T, double u, double gamma_c);

RegimePoint regime_classify(double density, double temperature, int n, double omega_s,
                            const SpeciesConstants& species);

}  // namespace rsit

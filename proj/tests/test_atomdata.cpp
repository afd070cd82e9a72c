#include <cmath>

#include "doctest.h"
#include "rsit/atomdata.hpp"
#include "rsit/constants.hpp"

using namespace rsit;

TEST_CASE("thermal velocity and doppler width") {
  const auto cs = cesium();
  CHECK(thermal_velocity(0.0, cs) == 0.0);
  const double v = thermal_velocity(300.0, cs);
  CHECK(v == doctest::Approx(194.0).epsilon(0.01));
  CHECK(thermal_velocity(1200.0, cs) == doctest::Approx(2.0 * v).epsilon(1e-14));
  CHECK_THROWS(thermal_velocity(-1.0, cs));

  CHECK(doppler_width(cs, 0.0) == 0.0);
  const double hot = doppler_width(cs, v) / (2 * constants::pi);
  CHECK(hot > 1e8);
  CHECK(hot < 1e10);
  const double cold = doppler_width(cs, thermal_velocity(1e-6, cs)) / (2 * constants::pi);
  CHECK(cold > 1e4);
  CHECK(cold < 1e6);
}

TEST_CASE("cross-section bracket") {
  for (double lam : {1e-3, 0.1, 0.5, 1.0, 3.9, 4.1, 10.0, 100.0, 1e4}) {
    const double b = cross_section_bracket(lam);
    CHECK(std::isfinite(b));
    CHECK(b >= 0.0);
  }
  // Decays as 4 / (3 lambda^3).
  for (double lam : {50.0, 500.0, 5000.0})
    CHECK(cross_section_bracket(lam) == doctest::Approx(4.0 / (3.0 * lam * lam * lam)).epsilon(1e-3));
  // Series and closed form agree across the switch.
  CHECK(cross_section_bracket(3.999) == doctest::Approx(cross_section_bracket(4.001)).epsilon(1e-3));
  CHECK(cross_section_bracket(1e7) < 1e-20);
}

TEST_CASE("inelastic cross-section trends") {
  const auto cs = cesium();
  for (double T : {100.0, 300.0}) {
    double prev = 0.0;
    for (int n = 20; n <= 60; ++n) {
      const double s = inelastic_cross_section(n, T, cs);
      CHECK(s > prev);
      prev = s;
    }
  }
  double prev = 0.0;
  for (double T = 50.0; T <= 400.0; T += 25.0) {
    const double s = inelastic_cross_section(40, T, cs);
    CHECK(s > prev);
    prev = s;
  }
  CHECK_THROWS(inelastic_cross_section(30, 0.0, cs));
  CHECK_THROWS(inelastic_cross_section(9, 300.0, cs));
}

TEST_CASE("cross-section truncation is stable") {
  const auto cs = cesium();
  CrossSectionOptions loose, tight;
  tight.shell_tolerance = 1e-10;
  const auto a = inelastic_cross_section_detail(40, 300.0, cs, loose);
  const auto b = inelastic_cross_section_detail(40, 300.0, cs, tight);
  CHECK(b.window >= a.window);
  CHECK(std::abs(a.sigma - b.sigma) / b.sigma < 1e-6);
}

TEST_CASE("collisional decay rate") {
  const auto cs = cesium();
  const double sigma = inelastic_cross_section(50, 300.0, cs);
  CHECK(collisional_decay_rate(0.0, 300.0, sigma, cs) == 0.0);
  const double g = collisional_decay_rate(5e21, 300.0, sigma, cs);
  CHECK(collisional_decay_rate(1e22, 300.0, sigma, cs) == doctest::Approx(2 * g).epsilon(1e-14));
  CHECK(g / 1e9 > 0.3);
  CHECK(g / 1e9 < 10.0);
  double prev = 0.0;
  for (double T = 50.0; T <= 400.0; T += 50.0) {
    const double gt = collisional_decay_rate(5e21, T, inelastic_cross_section(30, T, cs), cs);
    CHECK(gt > prev);
    prev = gt;
  }
}

TEST_CASE("rydberg state scalings") {
  auto cs = cesium();
  const auto ref = rydberg_state(cs.n_ref, cs);
  CHECK(ref.c6 == cs.c6_ref);
  CHECK(ref.dipole == cs.dipole_ref);
  CHECK(ref.lifetime == doctest::Approx(27.79e-6));
  CHECK(ref.n_star == doctest::Approx(30 - 3.56));

  const auto s45 = rydberg_state(45, cs);
  CHECK(s45.c6 / ref.c6 == doctest::Approx(std::pow(s45.n_star / ref.n_star, 11)).epsilon(1e-12));
  CHECK(s45.dipole / ref.dipole == doctest::Approx(std::pow(s45.n_star / ref.n_star, -1.5)).epsilon(1e-12));
  CHECK(s45.lifetime / ref.lifetime == doctest::Approx(std::pow(s45.n_star / ref.n_star, 3)).epsilon(1e-12));

  cs.dipole_table[45] = 1e-31;
  cs.lifetime_table[45] = 1e-4;
  const auto t45 = rydberg_state(45, cs);
  CHECK(t45.dipole == 1e-31);
  CHECK(t45.lifetime == 1e-4);
  CHECK(t45.decay_rate() == doctest::Approx(1e4));

  // Negative C6 keeps its sign.
  cs.c6_ref = -cs.c6_ref;
  CHECK(rydberg_state(40, cs).c6 < 0.0);
  CHECK_THROWS(rydberg_state(9, cs));
}

TEST_CASE("species validation") {
  auto cs = cesium();
  CHECK_NOTHROW(cs.validate());
  cs.quantum_defect_P = 5.0;
  CHECK_THROWS(cs.validate());
  cs = cesium();
  cs.mass = 0.0;
  CHECK_THROWS(cs.validate());
  cs = cesium();
  cs.scattering_length = -5.0;
  CHECK_NOTHROW(cs.validate());
}

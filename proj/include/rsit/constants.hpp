#pragma once

#include <numbers>

// CODATA 2018 values, SI units.
namespace rsit::constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double c = 299792458.0;
inline constexpr double hbar = 1.054571817e-34;
inline constexpr double k_B = 1.380649e-23;
inline constexpr double eps0 = 8.8541878128e-12;
inline constexpr double e = 1.602176634e-19;
inline constexpr double m_e = 9.1093837015e-31;
inline constexpr double amu = 1.66053906660e-27;
inline constexpr double a_B = 5.29177210903e-11;

/// Orbital velocity of a hydrogenic ground-state electron, hbar / (m_e a_B).
inline constexpr double v_orbital = hbar / (m_e * a_B);

/// Atomic unit of dipole moment, e * a_B.
inline constexpr double ea0 = e * a_B;

}  // namespace rsit::constants

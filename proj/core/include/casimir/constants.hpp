#pragma once

#include <numbers>

namespace casimir::constants {

/// Reduced Planck constant [J s] (CODATA 2018, exact).
inline constexpr double hbar = 1.054571817e-34;
/// Speed of light in vacuum [m/s] (exact).
inline constexpr double c = 299792458.0;
inline constexpr double pi = std::numbers::pi;

/// Ideal-mirror Casimir pressure pi^2 hbar c / (240 d^4) [Pa].
constexpr double ideal_pressure(double d) {
  return pi * pi * hbar * c / (240.0 * d * d * d * d);
}

/// Ideal-mirror Casimir energy per area -pi^2 hbar c / (720 d^3) [J/m^2].
constexpr double ideal_energy(double d) {
  return -pi * pi * hbar * c / (720.0 * d * d * d);
}

}  // namespace casimir::constants

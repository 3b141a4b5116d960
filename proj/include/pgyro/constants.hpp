#pragma once

namespace pgyro::constants {

inline constexpr double c_light = 2.99792458e8;      // m/s
inline constexpr double hbar = 1.054571817e-34;      // J s
inline constexpr double planck_h = 6.62607015e-34;   // J s
inline constexpr double meV_joule = 1.602176634e-22; // J per meV
inline constexpr double electron_mass = 9.1093837015e-31; // kg

} // namespace pgyro::constants

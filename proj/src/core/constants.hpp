#pragma once

namespace psr {

// Natural-unit conversion constants.
inline constexpr double hbar_c_eV_cm = 197.327e-7;  // hbar*c in eV*cm
inline constexpr double c_cm_per_ns = 29.979;       // light speed in cm/ns
inline constexpr double eV_per_W_ns = 6.2415091e9;  // 1 W = this many eV/ns
inline constexpr double J_per_eV = 1.602176634e-19;

}  // namespace psr

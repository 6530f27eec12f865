// units.hpp — unit conventions and physical constants.
//
// All energies and rates are stored internally as angular frequencies
// (rad/s), i.e. hbar == 1.  Configs and CSV outputs quote frequencies
// as nu = omega/2pi ("/2pi Hz"); the conversion happens exactly once
// at the I/O boundary.
#pragma once

#include <cmath>

namespace rydlat {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// hbar in J*s, needed only where a real mass (kg) meets rad/s energies.
inline constexpr double kHbar = 1.054571817e-34;

// 88Sr atomic mass in kg (87.9056122571 u).
inline constexpr double kSr88MassKg = 1.459862839e-25;

inline double hz_to_rad(double hz) { return kTwoPi * hz; }
inline double rad_to_hz(double rad) { return rad / kTwoPi; }

// Mass in the hbar==1 unit system (s/m^2): kinetic energy k^2/(2m) is rad/s.
inline double natural_mass(double mass_kg) { return mass_kg / kHbar; }

}  // namespace rydlat

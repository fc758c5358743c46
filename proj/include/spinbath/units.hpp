#pragma once

#include <numbers>

namespace spinbath {

// Unit conventions used across module boundaries:
//   frequency  : linear MHz (two-sided spectra, signed line frequencies)
//   time       : ns
//   field      : tesla for the external field, millitesla for Overhauser values
//   gamma_e    : GHz/T, which is numerically identical to MHz/mT
//   PSD        : mT^2/MHz for field components, MHz^2/MHz for splitting noise
//
// The only cross-unit constant needed is the phase accumulated by a 1-MHz
// detuning over 1 ns: 2*pi*1e-3 radians.
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kRadPerMHzNs = 2.0 * std::numbers::pi * 1e-3;

}  // namespace spinbath

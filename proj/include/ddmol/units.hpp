#pragma once

#include <numbers>

// Internal unit system: energies in µeV, lengths in nm, times in ns,
// magnetic fields in mT.
namespace ddmol::units {

/// Reduced Planck constant [µeV·ns].
inline constexpr double hbar = 0.6582119569;

/// Bohr magneton [µeV/T].
inline constexpr double bohr_magneton = 57.8838;

/// e²/(4π ε0) [µeV·nm].
inline constexpr double coulomb_constant = 1.43996e6;

/// Static relative permittivity of GaAs.
inline constexpr double gaas_permittivity = 12.9;

inline constexpr double pi = std::numbers::pi;

} // namespace ddmol::units

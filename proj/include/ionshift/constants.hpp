#ifndef IONSHIFT_CONSTANTS_HPP
#define IONSHIFT_CONSTANTS_HPP

#include <numbers>

// Physical constants (CODATA 2018), SI units.
// Internal unit conventions used throughout the library:
//   frequencies in MHz, distances in um, wavenumbers in rad/um.
namespace ionshift::constants {

inline constexpr double pi = std::numbers::pi;

// e [C] (exact since the 2019 SI redefinition)
inline constexpr double elementary_charge = 1.602176634e-19;

// epsilon_0 [F/m]
inline constexpr double vacuum_permittivity = 8.8541878128e-12;

// unified atomic mass unit [kg]
inline constexpr double atomic_mass = 1.66053906660e-27;

}  // namespace ionshift::constants

#endif

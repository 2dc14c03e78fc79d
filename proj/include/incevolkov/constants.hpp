#pragma once

// CODATA 2018 recommended values, SI units.
namespace incevolkov::constants {

inline constexpr double pi = 3.141592653589793238462643383279502884;

inline constexpr double speed_of_light = 299792458.0;            // m/s (exact)
inline constexpr double elementary_charge = 1.602176634e-19;     // C (exact)
inline constexpr double hbar = 1.054571817e-34;                  // J s
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m
inline constexpr double electron_mass = 9.1093837015e-31;        // kg
inline constexpr double proton_mass = 1.67262192369e-27;         // kg

inline constexpr double electron_volt = elementary_charge;  // J
inline constexpr double watt_per_cm2 = 1.0e4;               // W/m^2
inline constexpr double per_cm3 = 1.0e6;                    // 1/m^3

}  // namespace incevolkov::constants

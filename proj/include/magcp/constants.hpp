// Copyright 2026 The magcp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAGCP_CONSTANTS_HPP_
#define MAGCP_CONSTANTS_HPP_

#include <numbers>

#include "magcp/errors.hpp"

namespace magcp {

/// CODATA 2018 values, SI units.
struct PhysicalConstants
{
    static constexpr double mu0 = 1.25663706212e-6;         // N/A^2
    static constexpr double hbar = 1.054571817e-34;         // J s
    static constexpr double kB = 1.380649e-23;              // J/K
    static constexpr double c = 299792458.0;                // m/s
    static constexpr double muB = 9.2740100783e-24;         // J/T
    static constexpr double gS = 2.00231930436256;          // electron spin g-factor
    static constexpr double alpha_fs = 7.2973525693e-3;
    static constexpr double eps0 = 1.0 / (mu0 * c * c);     // F/m
};

using phys = PhysicalConstants;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Converts an ordinary frequency f = Omega/2pi (Hz) to angular frequency (rad/s).
constexpr double hz_to_rad_per_s(double hz) { return two_pi * hz; }

/// Temperature whose thermal energy equals hbar*omega.
constexpr double frequency_to_temperature(double omega) { return phys::hbar * omega / phys::kB; }

constexpr double temperature_to_frequency(double T) { return phys::kB * T / phys::hbar; }

/// Thermal wavelength hbar c / (4 pi kB T); half the wavelength of the
/// first Matsubara frequency.
inline double thermal_wavelength(double T)
{
    if (!(T > 0.0)) {
        throw DomainError("thermal_wavelength: temperature must be positive");
    }
    return phys::hbar * phys::c / (4.0 * pi * phys::kB * T);
}

/// First Matsubara frequency 2 pi kB T / hbar.
constexpr double matsubara_spacing(double T) { return two_pi * phys::kB * T / phys::hbar; }

} // namespace magcp

#endif // MAGCP_CONSTANTS_HPP_

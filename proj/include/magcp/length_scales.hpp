// Copyright 2026 The magcp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAGCP_LENGTH_SCALES_HPP_
#define MAGCP_LENGTH_SCALES_HPP_

#include <cmath>
#include <optional>

#include "magcp/constants.hpp"
#include "magcp/materials.hpp"

namespace magcp {

/// Length scales that delimit the distance regimes of a conductor at one
/// frequency. `skin_depth` is empty for dissipationless responses.
struct LengthScales
{
    std::optional<double> skin_depth;
    double photon_wavelength;
    double plasma_wavelength;
    double resonance_wavelength;
};

inline double plasma_wavelength(double omega_p) { return two_pi * phys::c / omega_p; }

inline double photon_wavelength(double omega) { return two_pi * phys::c / omega; }

/// Hagen-Rubens skin depth (lambda_p / 2pi) sqrt(2 gamma / omega).
inline double skin_depth(double omega_p, double gamma, double omega)
{
    return plasma_wavelength(omega_p) / two_pi * std::sqrt(2.0 * gamma / omega);
}

/// Scales at frequency `omega`; `resonance_omega` (defaults to `omega`) sets
/// the atomic resonance wavelength.
inline LengthScales length_scales(const MaterialModel& model, double omega, double T,
                                  std::optional<double> resonance_omega = std::nullopt)
{
    if (!(omega > 0.0)) {
        throw DomainError("length_scales: omega must be positive");
    }
    const auto r = response_at(model, T);
    if (r.perfect) {
        throw DomainError("length_scales: model has no plasma frequency");
    }
    LengthScales out;
    out.photon_wavelength = photon_wavelength(omega);
    out.plasma_wavelength = plasma_wavelength(r.omega_p);
    out.resonance_wavelength = photon_wavelength(resonance_omega.value_or(omega));
    if (!r.lossless()) {
        out.skin_depth = skin_depth(r.omega_p, r.gamma, omega);
    }
    return out;
}

} // namespace magcp

#endif // MAGCP_LENGTH_SCALES_HPP_

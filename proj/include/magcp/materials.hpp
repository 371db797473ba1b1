// Copyright 2026 The magcp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAGCP_MATERIALS_HPP_
#define MAGCP_MATERIALS_HPP_

#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <type_traits>
#include <variant>

#include "magcp/constants.hpp"
#include "magcp/errors.hpp"

namespace magcp {

using cdouble = std::complex<double>;

// ---------------------------------------------------------------------------
// Surface models
// ---------------------------------------------------------------------------

/// Normal metal with a temperature-independent scattering rate.
struct Drude
{
    double omega_p; // rad/s
    double gamma;   // rad/s
    bool operator==(const Drude&) const = default;
};

/// Dissipationless electron gas (Drude with gamma = 0).
struct Plasma
{
    double omega_p;
    bool operator==(const Plasma&) const = default;
};

/// Two-fluid superconductor: supercurrent fraction eta(T) responds like a
/// plasma, the rest like a Drude metal.
struct TwoFluidSC
{
    double omega_p;
    double gamma;
    double Tc; // K
    bool operator==(const TwoFluidSC&) const = default;
};

/// Clean metal whose scattering rate grows as T^n up to T_ref and is
/// constant above.
struct PerfectCrystal
{
    double omega_p;
    double gamma_ref; // rad/s, value reached at T_ref
    double T_ref;     // K
    double exponent;  // n > 1
    bool operator==(const PerfectCrystal&) const = default;
};

/// Ideal mirror: r_TE = -1, r_TM = +1 at every frequency and wavevector.
struct PerfectConductor
{
    bool operator==(const PerfectConductor&) const = default;
};

using MaterialModel = std::variant<Drude, Plasma, TwoFluidSC, PerfectCrystal, PerfectConductor>;

inline std::string model_name(const MaterialModel& m)
{
    constexpr const char* names[] = {"drude", "plasma", "two_fluid", "perfect_crystal", "perfect_conductor"};
    return names[m.index()];
}

/// Throws DomainError unless every parameter is in range.
inline void validate(const MaterialModel& model)
{
    auto require = [](bool ok, const char* what) {
        if (!ok) {
            throw DomainError(std::string("material model: ") + what);
        }
    };
    std::visit(
        [&](const auto& m) {
            using M = std::decay_t<decltype(m)>;
            if constexpr (!std::is_same_v<M, PerfectConductor>) {
                require(m.omega_p > 0.0, "omega_p must be positive");
            }
            if constexpr (std::is_same_v<M, Drude> || std::is_same_v<M, TwoFluidSC>) {
                require(m.gamma > 0.0, "gamma must be positive");
            }
            if constexpr (std::is_same_v<M, TwoFluidSC>) {
                require(m.Tc > 0.0, "Tc must be positive");
            }
            if constexpr (std::is_same_v<M, PerfectCrystal>) {
                require(m.gamma_ref > 0.0, "gamma_ref must be positive");
                require(m.T_ref > 0.0, "T_ref must be positive");
                require(m.exponent > 1.0, "exponent must exceed 1");
            }
        },
        model);
}

// ---------------------------------------------------------------------------
// Spectral points
// ---------------------------------------------------------------------------

enum class Axis { Imaginary, Real };

/// A frequency on the positive imaginary axis (omega = i*xi) or the positive
/// real axis, in rad/s.
struct SpectralPoint
{
    Axis axis;
    double value;

    static SpectralPoint imaginary(double xi) { return {Axis::Imaginary, xi}; }
    static SpectralPoint real(double omega) { return {Axis::Real, omega}; }

    /// Complex angular frequency.
    cdouble omega() const { return axis == Axis::Imaginary ? cdouble(0.0, value) : cdouble(value, 0.0); }

    /// omega^2 / c^2 (negative real on the imaginary axis).
    cdouble omega2_over_c2() const
    {
        const double v2 = value * value / (phys::c * phys::c);
        return axis == Axis::Imaginary ? cdouble(-v2, 0.0) : cdouble(v2, 0.0);
    }
};

inline void require_positive(const SpectralPoint& s)
{
    if (!(s.value > 0.0)) {
        throw DomainError("spectral point must have a positive frequency");
    }
}

// ---------------------------------------------------------------------------
// Temperature dependence
// ---------------------------------------------------------------------------

/// Gorter-Casimir superfluid fraction [1 - (T/Tc)^4] Theta(Tc - T), with
/// Theta(0) = 0.
inline double order_parameter(double T, double Tc)
{
    if (!(T >= 0.0) || !(Tc > 0.0)) {
        throw DomainError("order_parameter: need T >= 0 and Tc > 0");
    }
    if (T >= Tc) {
        return 0.0;
    }
    const double t2 = (T / Tc) * (T / Tc);
    return 1.0 - t2 * t2;
}

/// Scattering rate of the perfect crystal: power law below T_ref, saturated above.
inline double gamma_of_T(const PerfectCrystal& m, double T)
{
    if (!(T >= 0.0)) {
        throw DomainError("gamma_of_T: temperature must be non-negative");
    }
    if (T >= m.T_ref) {
        return m.gamma_ref;
    }
    return m.gamma_ref * std::pow(T / m.T_ref, m.exponent);
}

/// Every finite-epsilon model reduces to
///   eps - 1 = -omega_p^2 [ eta / omega^2 + (1 - eta) / (omega (omega + i gamma)) ]
/// at a given temperature.
struct ConductorResponse
{
    double omega_p = 0.0;
    double eta = 0.0;   // dissipationless fraction
    double gamma = 0.0; // scattering rate of the normal fraction
    bool perfect = false;

    bool lossless() const { return perfect || eta >= 1.0 || gamma == 0.0; }
};

inline ConductorResponse response_at(const MaterialModel& model, double T)
{
    if (!(T >= 0.0)) {
        throw DomainError("temperature must be non-negative");
    }
    return std::visit(
        [T](const auto& m) -> ConductorResponse {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, Drude>) {
                return {m.omega_p, 0.0, m.gamma, false};
            } else if constexpr (std::is_same_v<M, Plasma>) {
                return {m.omega_p, 1.0, 0.0, false};
            } else if constexpr (std::is_same_v<M, TwoFluidSC>) {
                // The pure phases reduce to exactly the Plasma and Drude responses.
                const double eta = order_parameter(T, m.Tc);
                return {m.omega_p, eta, eta == 1.0 ? 0.0 : m.gamma, false};
            } else if constexpr (std::is_same_v<M, PerfectCrystal>) {
                return {m.omega_p, 0.0, gamma_of_T(m, T), false};
            } else {
                return {0.0, 0.0, 0.0, true};
            }
        },
        model);
}

/// (eps - 1) omega^2 / c^2 at a complex frequency. Finite at omega = 0, where it
/// carries the static screening wavevector squared (with a minus sign).
inline cdouble polarization_wavenumber2(const ConductorResponse& r, cdouble omega)
{
    const double kp2 = r.omega_p * r.omega_p / (phys::c * phys::c);
    cdouble normal;
    if (r.gamma == 0.0) {
        normal = 1.0;
    } else if (omega == cdouble(0.0)) {
        normal = 0.0;
    } else {
        normal = omega / (omega + cdouble(0.0, r.gamma));
    }
    return -kp2 * (r.eta + (1.0 - r.eta) * normal);
}

/// Imaginary-axis specialization: q^2 = (eps(i xi) - 1) xi^2 / c^2 >= 0.
inline double screening_wavenumber2(const ConductorResponse& r, double xi)
{
    const double kp2 = r.omega_p * r.omega_p / (phys::c * phys::c);
    double normal;
    if (r.gamma == 0.0) {
        normal = 1.0;
    } else {
        normal = xi / (xi + r.gamma);
    }
    return kp2 * (r.eta + (1.0 - r.eta) * normal);
}

// ---------------------------------------------------------------------------
// Dielectric function
// ---------------------------------------------------------------------------

/// Dielectric function at a spectral point. The perfect conductor reports the
/// formal limit eps = +inf.
inline cdouble permittivity(const MaterialModel& model, const SpectralPoint& s, double T)
{
    require_positive(s);
    const auto r = response_at(model, T);
    if (r.perfect) {
        return {std::numeric_limits<double>::infinity(), 0.0};
    }
    if (s.axis == Axis::Imaginary) {
        const double a2 = s.value * s.value / (phys::c * phys::c);
        return {1.0 + screening_wavenumber2(r, s.value) / a2, 0.0};
    }
    return 1.0 + polarization_wavenumber2(r, s.omega()) / s.omega2_over_c2();
}

// ---------------------------------------------------------------------------
// Fresnel coefficients
// ---------------------------------------------------------------------------

struct ReflectionPair
{
    cdouble r_TE;
    cdouble r_TM;
};

/// Square root on the branch Im <= 0, and Re >= 0 when Im == 0.
inline cdouble propagation_root(cdouble z)
{
    cdouble r = std::sqrt(z);
    if (r.imag() > 0.0 || (r.imag() == 0.0 && r.real() < 0.0)) {
        r = -r;
    }
    return r;
}

namespace detail {

/// Reflection coefficients from the vacuum propagation constant kappa and
/// w = (eps - 1) omega^2 / c^2. r_TE uses the cancellation-free form
/// (kappa - kappa_m)/(kappa + kappa_m) = w / (kappa + kappa_m)^2.
inline ReflectionPair reflect(cdouble kappa, cdouble w, cdouble eps)
{
    const cdouble kappa_m = propagation_root(kappa * kappa - w);
    const cdouble sum = kappa + kappa_m;
    const cdouble r_te = w / (sum * sum);
    const cdouble den = eps * kappa + kappa_m;
    if (std::abs(eps - 1.0) < 0.5) {
        // eps kappa - kappa_m = (eps - 1)[(eps + 1) kappa^2 + omega^2/c^2] / den, with
        // omega^2/c^2 = w / (eps - 1); avoids cancellation for weak reflectors.
        const cdouble a2 = eps == 1.0 ? cdouble(0.0) : w / (eps - 1.0);
        return {r_te, (eps - 1.0) * ((eps + 1.0) * kappa * kappa + a2) / (den * den)};
    }
    return {r_te, (eps * kappa - kappa_m) / den};
}

} // namespace detail

/// Planar Fresnel coefficients at in-plane wavevector k (1/m).
inline ReflectionPair fresnel(const MaterialModel& model, const SpectralPoint& s, double k, double T)
{
    if (!(k >= 0.0)) {
        throw DomainError("fresnel: wavevector must be non-negative");
    }
    require_positive(s);
    const auto resp = response_at(model, T);
    if (resp.perfect) {
        return {-1.0, 1.0};
    }
    const cdouble a2 = s.omega2_over_c2();
    const cdouble kappa = propagation_root(k * k - a2);
    const cdouble w = polarization_wavenumber2(resp, s.omega());
    const cdouble eps = 1.0 + w / a2;
    return detail::reflect(kappa, w, eps);
}

/// Zero-frequency limit of the reflection coefficients. r_TM(0, k) = 1 for every
/// conductor; r_TE(0, k) vanishes for a dissipative normal fraction and is set
/// by the static screening wavevector otherwise.
inline ReflectionPair fresnel_static(const MaterialModel& model, double k, double T)
{
    if (!(k >= 0.0)) {
        throw DomainError("fresnel_static: wavevector must be non-negative");
    }
    const auto resp = response_at(model, T);
    if (resp.perfect) {
        return {-1.0, 1.0};
    }
    const double q2 = -polarization_wavenumber2(resp, 0.0).real();
    const double root = std::sqrt(k * k + q2);
    if (k == 0.0 && q2 == 0.0) {
        return {0.0, 1.0};
    }
    return {(k - root) / (k + root), 1.0};
}

enum class FresnelRegime { SubSkinDepth, NonRetarded, Retarded };

/// Closed-form reflection coefficients valid for |eps| >> 1 in the three
/// wavevector regimes k >> 1/delta, 1/lambda << k << 1/delta, k << 1/lambda.
inline ReflectionPair fresnel_asymptote(FresnelRegime regime, cdouble eps, const SpectralPoint& s, double k)
{
    const cdouble omega = s.omega();
    const cdouble a2 = s.omega2_over_c2();
    const cdouble sqrt_eps = std::sqrt(eps);
    const cdouble I(0.0, 1.0);
    switch (regime) {
    case FresnelRegime::SubSkinDepth: {
        const cdouble r_te = (eps - 1.0) * a2 / (4.0 * k * k);
        const cdouble r_tm = (eps - 1.0) / (eps + 1.0) * (1.0 + eps / (eps + 1.0) * a2 / (k * k));
        return {r_te, r_tm};
    }
    case FresnelRegime::NonRetarded: {
        const cdouble ratio = phys::c * k / omega;
        return {-1.0 + I * 2.0 / sqrt_eps * ratio, 1.0 + I * 2.0 / sqrt_eps / ratio};
    }
    case FresnelRegime::Retarded:
        return {-1.0 + 2.0 / sqrt_eps, 1.0 - 2.0 / sqrt_eps};
    }
    return {};
}

} // namespace magcp

#endif // MAGCP_MATERIALS_HPP_

// Copyright 2026 The magcp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAGCP_ASYMPTOTES_HPP_
#define MAGCP_ASYMPTOTES_HPP_

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "magcp/constants.hpp"
#include "magcp/errors.hpp"
#include "magcp/greens.hpp"
#include "magcp/length_scales.hpp"
#include "magcp/scenario.hpp"

namespace magcp {

enum class AsymptoteKind {
    SubSkinDepthDrude,       // L << skin depth, dissipative metal
    SubSkinDepthPlasma,      // L << plasma wavelength
    NonRetarded,             // image dipole, T = 0
    Retarded,                // L >> transition wavelength, T = 0
    Keesom,                  // n = 0 Matsubara term only
    PlasmaThermal,           // plasma, L >> thermal wavelength
    DrudeThermal,            // Drude, L >> thermal wavelength
    DrudeNonRetardedThermal, // Drude, T_m << T << T_D
    StatePlasmaNonRetarded,  // ground state, plasma, high T
    StatePlasmaRetarded,     // ground state, plasma, high T, L ~ transition wavelength
};

inline constexpr AsymptoteKind kAllAsymptotes[] = {
    AsymptoteKind::SubSkinDepthDrude, AsymptoteKind::SubSkinDepthPlasma,     AsymptoteKind::NonRetarded,
    AsymptoteKind::Retarded,          AsymptoteKind::Keesom,                 AsymptoteKind::PlasmaThermal,
    AsymptoteKind::DrudeThermal,      AsymptoteKind::DrudeNonRetardedThermal, AsymptoteKind::StatePlasmaNonRetarded,
    AsymptoteKind::StatePlasmaRetarded,
};

inline std::string_view asymptote_name(AsymptoteKind k)
{
    switch (k) {
    case AsymptoteKind::SubSkinDepthDrude: return "sub_skin_drude";
    case AsymptoteKind::SubSkinDepthPlasma: return "sub_skin_plasma";
    case AsymptoteKind::NonRetarded: return "non_retarded";
    case AsymptoteKind::Retarded: return "retarded";
    case AsymptoteKind::Keesom: return "keesom";
    case AsymptoteKind::PlasmaThermal: return "plasma_thermal";
    case AsymptoteKind::DrudeThermal: return "drude_thermal";
    case AsymptoteKind::DrudeNonRetardedThermal: return "drude_non_retarded_thermal";
    case AsymptoteKind::StatePlasmaNonRetarded: return "state_plasma_non_retarded";
    case AsymptoteKind::StatePlasmaRetarded: return "state_plasma_retarded";
    }
    return "unknown";
}

inline AsymptoteKind asymptote_from_name(std::string_view name)
{
    for (auto k : kAllAsymptotes) {
        if (asymptote_name(k) == name) {
            return k;
        }
    }
    throw DomainError("unknown asymptote '" + std::string(name) + "'");
}

/// Inputs of the closed forms. mu_x2 is |mu_x|^2 of the Larmor transition.
struct AsymptoteParams
{
    double L = 0.0;       // m
    double T = 0.0;       // K
    double mu_x2 = 0.0;   // (J/T)^2
    double Omega_m = 0.0; // rad/s
    double omega_p = 0.0; // rad/s
    double gamma = 0.0;   // rad/s
};

struct AsymptoteValue
{
    double value = 0.0;   // J
    bool in_window = false;
    std::string window;   // validity conditions, 10x margins
};

/// Collects the closed-form inputs for a two-level atom above a conductor.
inline AsymptoteParams asymptote_params(double L, double T, const TwoLevel& atom, const MaterialModel& model)
{
    AsymptoteParams p;
    p.L = L;
    p.T = T;
    p.Omega_m = atom.Omega_m;
    p.mu_x2 = std::norm(transition_table(TwoLevel{atom.Omega_m}).front().mu_x);
    const auto r = response_at(model, T);
    if (!r.perfect) {
        p.omega_p = r.omega_p;
        p.gamma = r.gamma;
    }
    return p;
}

/// Closed-form free-energy asymptotes with their validity windows.
inline AsymptoteValue fe_asymptote(AsymptoteKind kind, const AsymptoteParams& p)
{
    if (!(p.L > 0.0) || !(p.mu_x2 > 0.0) || !(p.Omega_m > 0.0) || !(p.T >= 0.0)) {
        throw DomainError("fe_asymptote: L, |mu_x|^2 and Omega_m must be positive, T non-negative");
    }
    const double mu0 = phys::mu0;
    const double L = p.L;
    const double L3 = L * L * L;
    const double m2 = p.mu_x2;
    const double lambda_m = photon_wavelength(p.Omega_m);
    const double Tm = frequency_to_temperature(p.Omega_m);
    const double kT = phys::kB * p.T;
    const double LT = p.T > 0.0 ? thermal_wavelength(p.T) : INFINITY;
    auto need_plasma = [&] {
        if (!(p.omega_p > 0.0)) {
            throw DomainError("fe_asymptote: this form needs a plasma frequency");
        }
        return plasma_wavelength(p.omega_p);
    };
    auto need_drude = [&] {
        if (!(p.gamma > 0.0)) {
            throw DomainError("fe_asymptote: this form needs a damping rate");
        }
        return skin_depth(p.omega_p, p.gamma, p.Omega_m);
    };
    auto need_T = [&] {
        if (!(p.T > 0.0)) {
            throw DomainError("fe_asymptote: this form needs T > 0");
        }
    };

    AsymptoteValue out;
    switch (kind) {
    case AsymptoteKind::SubSkinDepthDrude: {
        need_plasma();
        const double d = need_drude();
        out.value = m2 * mu0 / (8.0 * pi * pi * d * d) / L * std::log(d / L);
        out.in_window = L < d / 10.0;
        out.window = "L < delta_m/10";
        break;
    }
    case AsymptoteKind::SubSkinDepthPlasma: {
        const double lp = need_plasma();
        out.value = pi * m2 * mu0 / (16.0 * lp * lp * L);
        out.in_window = L < lp / (10.0 * two_pi);
        out.window = "L < lambda_p/(20 pi)";
        break;
    }
    case AsymptoteKind::NonRetarded: {
        double floor = 0.0;
        if (p.omega_p > 0.0) {
            floor = plasma_wavelength(p.omega_p);
            if (p.gamma > 0.0) {
                floor = std::max(floor, need_drude());
            }
        }
        out.value = mu0 * m2 / (32.0 * pi * L3);
        out.in_window = L > 10.0 * floor && L < lambda_m / 10.0 && p.T < Tm / 10.0;
        out.window = "10 max(lambda_p, delta_m) < L < lambda_m/10, T < T_m/10";
        break;
    }
    case AsymptoteKind::Retarded:
        out.value = mu0 * m2 * lambda_m / (16.0 * pi * pi * pi * L3 * L);
        out.in_window = L > 10.0 * lambda_m && p.T < Tm / 10.0;
        out.window = "L > 10 lambda_m, T < T_m/10";
        break;
    case AsymptoteKind::Keesom: {
        need_T();
        const double H0 = p.omega_p > 0.0 ? magnetic_green_imag(L, 0.0, Plasma{p.omega_p}, 0.0).H_xx.real()
                                          : -mu0 / (32.0 * pi * L3);
        const double beta0 = std::tanh(phys::hbar * p.Omega_m / (2.0 * kT)) * 2.0 * m2 / (phys::hbar * p.Omega_m);
        out.value = -kT * beta0 * H0;
        out.in_window = p.T > 10.0 * Tm;
        out.window = "T > 10 T_m";
        break;
    }
    case AsymptoteKind::PlasmaThermal:
        need_T();
        out.value = mu0 * m2 / (32.0 * pi * L3);
        out.in_window = L > 10.0 * LT && p.T > 10.0 * Tm;
        out.window = "L > 10 Lambda_T, T > 10 T_m";
        break;
    case AsymptoteKind::DrudeThermal:
        need_T();
        out.value = pi * mu0 * m2 / (lambda_m * lambda_m * L) * std::exp(-L / LT);
        out.in_window = L > 2.0 * LT && p.T > 10.0 * Tm;
        out.window = "L > 2 Lambda_T, T > 10 T_m";
        break;
    case AsymptoteKind::DrudeNonRetardedThermal: {
        need_T();
        const double lp = need_plasma();
        need_drude();
        const double TD = phys::hbar * p.gamma * std::pow(lp / (two_pi * L), 2) / phys::kB;
        const double r = phys::hbar * p.Omega_m / kT;
        out.value = mu0 * m2 / (384.0 * pi * L3) * r * r;
        out.in_window = p.T > 10.0 * Tm && p.T < TD / 10.0 && L < LT / 10.0;
        out.window = "10 T_m < T < T_D/10, L < Lambda_T/10";
        break;
    }
    case AsymptoteKind::StatePlasmaNonRetarded:
        need_T();
        out.value = mu0 * m2 / (32.0 * pi * L3);
        out.in_window = p.T > 10.0 * Tm && L < lambda_m / 10.0;
        out.window = "T > 10 T_m, L < lambda_m/10";
        break;
    case AsymptoteKind::StatePlasmaRetarded: {
        need_T();
        const double x = 4.0 * pi * L / lambda_m;
        out.value = kT / (phys::hbar * p.Omega_m) * mu0 * pi * m2 / (lambda_m * lambda_m * L) *
                    (std::cos(x) - std::sin(x) / x);
        out.in_window = p.T > 10.0 * Tm && L > lambda_m;
        out.window = "T > 10 T_m, L > lambda_m";
        break;
    }
    }
    return out;
}

/// Asymptotes that describe a scenario's surface model and mode.
inline std::vector<AsymptoteKind> applicable_asymptotes(const Scenario& sc)
{
    if (!std::holds_alternative<TwoLevel>(sc.atom) || sc.geometry != Geometry::Anisotropic) {
        return {};
    }
    const bool drude_like = std::holds_alternative<Drude>(sc.material) ||
                            std::holds_alternative<PerfectCrystal>(sc.material) ||
                            std::holds_alternative<TwoFluidSC>(sc.material);
    const bool plasma_like = std::holds_alternative<Plasma>(sc.material) ||
                             std::holds_alternative<TwoFluidSC>(sc.material);
    std::vector<AsymptoteKind> out;
    if (sc.mode == Mode::StateResolved) {
        if (plasma_like) {
            out = {AsymptoteKind::StatePlasmaNonRetarded, AsymptoteKind::StatePlasmaRetarded};
        }
        return out;
    }
    out = {AsymptoteKind::NonRetarded, AsymptoteKind::Retarded};
    if (std::holds_alternative<PerfectConductor>(sc.material)) {
        return out;
    }
    if (plasma_like) {
        out.push_back(AsymptoteKind::SubSkinDepthPlasma);
        out.push_back(AsymptoteKind::Keesom);
        out.push_back(AsymptoteKind::PlasmaThermal);
    }
    if (drude_like) {
        out.push_back(AsymptoteKind::SubSkinDepthDrude);
        out.push_back(AsymptoteKind::DrudeThermal);
        out.push_back(AsymptoteKind::DrudeNonRetardedThermal);
    }
    return out;
}

} // namespace magcp

#endif // MAGCP_ASYMPTOTES_HPP_

// Copyright 2026 The magcp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAGCP_SCAN_PRESETS_HPP_
#define MAGCP_SCAN_PRESETS_HPP_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "magcp/constants.hpp"
#include "magcp/entropy.hpp"
#include "magcp/errors.hpp"
#include "magcp/scan/config.hpp"

namespace magcp::scan {

/// Reference parameters shared by the figure presets.
namespace reference {
inline constexpr double omega_p = two_pi * 1.42e15;        // rad/s
inline constexpr double gamma = 0.01 * omega_p;            // rad/s
inline constexpr double Omega_m = two_pi * 480e6;          // rad/s
inline constexpr double Omega_hf = two_pi * 6.834682610904e9; // rad/s, Rb-87 ground-state splitting
inline constexpr double F_plasma_1um = 9.79e-37;           // J
inline constexpr double F_drude_state_1um = 2.56e-38;      // J
inline constexpr double F_twofluid_bcs = 1.09e-39;         // J
} // namespace reference

inline constexpr std::array<std::string_view, 11> kPresetNames = {
    "fig1_top", "fig1_bottom", "fig2", "fig3_twofluid", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10",
};

namespace detail {

inline ScanConfig distance_scan(std::string name, Scenario sc, std::vector<double> temperatures)
{
    ScanConfig c;
    c.name = std::move(name);
    c.scenario = std::move(sc);
    c.sweep = {SweepAxis::Distance, 10e-9, 10.0, 37, true};
    c.fixed = std::move(temperatures);
    c.outputs.breakdown = true;
    c.numerics.u = 1e-4;
    return c;
}

inline ScanConfig temperature_scan(std::string name, Scenario sc, double L, double T_min, double T_max)
{
    ScanConfig c;
    c.name = std::move(name);
    c.scenario = std::move(sc);
    c.sweep = {SweepAxis::Temperature, T_min, T_max, 31, true};
    c.fixed = {L};
    c.outputs.breakdown = true;
    c.numerics.u = 1e-4;
    return c;
}

} // namespace detail

/// Scan configuration reproducing one of the published figures.
inline ScanConfig figure_preset(std::string_view name)
{
    using namespace reference;
    const TwoLevel atom{Omega_m};
    const Rb87Hyperfine rb{Omega_hf, Omega_m, {1, -1}};
    const Drude drude{omega_p, gamma};
    const Plasma plasma{omega_p};
    const std::vector<double> T_list{0.0, 0.01, 1.0, 300.0};

    if (name == "fig1_top" || name == "fig1_bottom") {
        const bool top = name == "fig1_top";
        auto c = detail::distance_scan(std::string(name), {atom, top ? MaterialModel{drude} : MaterialModel{plasma}},
                                       T_list);
        c.outputs.asymptotes = true;
        c.normalization.free_energy = F_plasma_1um;
        return c;
    }
    if (name == "fig2") {
        const double Tc = 1.0;
        auto c = detail::distance_scan("fig2", {atom, TwoFluidSC{omega_p, gamma, Tc}},
                                       {0.0, 0.7 * Tc, 0.9 * Tc, 0.99 * Tc, 0.9999 * Tc, 1.0 * Tc});
        c.outputs.asymptotes = true;
        c.normalization.free_energy = F_plasma_1um;
        return c;
    }
    if (name == "fig3_twofluid") {
        const double Tc = 12.0;
        auto c = detail::temperature_scan("fig3_twofluid", {atom, TwoFluidSC{omega_p, 5e-4 * omega_p, Tc}}, 1e-6,
                                          0.1, 20.0);
        c.normalization.free_energy = F_twofluid_bcs;
        return c;
    }
    if (name == "fig4") {
        auto c = detail::temperature_scan("fig4", {atom, drude}, 1e-6, 1e-3, 10.0);
        c.outputs.entropy = true;
        c.normalization.entropy = entropy_defect(1e-6, atom, omega_p, DefectForm::ClosedForm);
        return c;
    }
    if (name == "fig5") {
        auto c = detail::temperature_scan("fig5", {atom, plasma}, 1e-3, 1e-3, 1.0);
        c.outputs.entropy = true;
        c.normalization.entropy = entropy_defect(1e-3, atom, omega_p, DefectForm::ClosedForm);
        return c;
    }
    if (name == "fig6") {
        return detail::distance_scan("fig6", {atom, drude, Mode::StateResolved}, T_list);
    }
    if (name == "fig7") {
        auto c = detail::temperature_scan("fig7", {atom, drude, Mode::StateResolved}, 1e-6, 1e-3, 300.0);
        c.normalization.free_energy = F_drude_state_1um;
        return c;
    }
    if (name == "fig8") {
        auto c = detail::distance_scan("fig8", {atom, plasma, Mode::StateResolved}, T_list);
        c.outputs.asymptotes = true;
        c.normalization.free_energy = F_plasma_1um;
        return c;
    }
    if (name == "fig9" || name == "fig10") {
        const bool d = name == "fig9";
        return detail::temperature_scan(std::string(name),
                                        {rb, d ? MaterialModel{drude} : MaterialModel{plasma}, Mode::StateResolved},
                                        1e-6, 1e-3, 300.0);
    }
    throw ConfigError("unknown preset '" + std::string(name) + "'");
}

} // namespace magcp::scan

#endif // MAGCP_SCAN_PRESETS_HPP_

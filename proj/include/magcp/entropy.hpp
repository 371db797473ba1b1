// Copyright 2026 The magcp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAGCP_ENTROPY_HPP_
#define MAGCP_ENTROPY_HPP_

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#include "magcp/constants.hpp"
#include "magcp/errors.hpp"
#include "magcp/free_energy.hpp"

namespace magcp {

struct EntropyOptions
{
    double rel_step = 1e-3;
    double tolerance = 1e-3; // relative agreement of the step-halved estimates
    int max_halvings = 8;    // further step reductions before giving up
};

struct EntropyResult
{
    double value = 0.0;              // J/K
    std::optional<double> left;      // one-sided values near a phase transition
    std::optional<double> right;
    double step_change = 0.0;        // |S(h) - S(h/2)| at the accepted step
    double step = 0.0;               // accepted step h, K
    bool one_sided = false;
};

namespace detail {

inline std::optional<double> critical_temperature(const MaterialModel& m)
{
    if (const auto* sc = std::get_if<TwoFluidSC>(&m)) {
        return sc->Tc;
    }
    return std::nullopt;
}

} // namespace detail

/// S = -dF/dT from central differences with one Richardson step; the step is
/// halved until S(h) and S(h/2) agree. Within five
/// steps of a superconducting Tc both one-sided derivatives are formed and the
/// one on the phase of T is returned (T = Tc counts as normal). All stencil
/// points share the term count of the lowest temperature.
inline EntropyResult entropy(double L, double T, const Scenario& sc, const FreeEnergyOptions& fe = {},
                             const EntropyOptions& opts = {})
{
    if (!(T > 0.0)) {
        throw DomainError("entropy: temperature must be positive");
    }
    if (sc.mode != Mode::Equilibrium) {
        throw DomainError("entropy: scenario must be in equilibrium mode");
    }
    if (!(opts.rel_step > 0.0) || opts.rel_step >= 0.1) {
        throw DomainError("entropy: relative step must lie in (0, 0.1)");
    }
    const double h = opts.rel_step * T;
    const auto Tc = detail::critical_temperature(sc.material);
    const bool one_sided = Tc && std::abs(T - *Tc) < 5.0 * h;

    FreeEnergyOptions fixed = fe;
    const double T_low = one_sided ? T - 2.0 * h : T - h;
    if (!fixed.forced_terms) {
        const auto probe = free_energy_equilibrium(L, T_low, sc, fe);
        if (!probe.zero_temperature_path) {
            fixed.forced_terms = probe.N_terms;
        }
    }
    std::map<double, double> cache;
    auto F = [&](double t) {
        auto it = cache.find(t);
        if (it == cache.end()) {
            it = cache.emplace(t, free_energy_equilibrium(L, t, sc, fixed).value).first;
        }
        return it->second;
    };
    auto richardson = [](double coarse, double fine) { return (4.0 * fine - coarse) / 3.0; };

    EntropyResult r;
    r.one_sided = one_sided;
    double step = h;
    for (int halving = 0;; ++halving) {
        double coarse = 0.0;
        double fine = 0.0;
        if (!one_sided) {
            auto central = [&](double s) { return -(F(T + s) - F(T - s)) / (2.0 * s); };
            coarse = central(step);
            fine = central(0.5 * step);
            r.value = richardson(coarse, fine);
        } else {
            auto left = [&](double s) { return -(3.0 * F(T) - 4.0 * F(T - s) + F(T - 2.0 * s)) / (2.0 * s); };
            auto right = [&](double s) { return -(-3.0 * F(T) + 4.0 * F(T + s) - F(T + 2.0 * s)) / (2.0 * s); };
            const double lc = left(step);
            const double lf = left(0.5 * step);
            const double rc = right(step);
            const double rf = right(0.5 * step);
            r.left = richardson(lc, lf);
            r.right = richardson(rc, rf);
            const bool normal = T >= *Tc;
            coarse = normal ? rc : lc;
            fine = normal ? rf : lf;
            r.value = normal ? *r.right : *r.left;
        }
        r.step_change = std::abs(fine - coarse);
        r.step = step;

        double F_scale = 0.0;
        for (const auto& [t, f] : cache) {
            F_scale = std::max(F_scale, std::abs(f));
        }
        const double noise_floor = 8.0 * std::max(fe.rel_tol, fe.greens.rel_tol) * F_scale / step;
        if (r.step_change <= 10.0 * opts.tolerance * std::abs(r.value) + noise_floor) {
            break;
        }
        if (halving == opts.max_halvings) {
            throw NonConvergenceError("entropy: step-halved estimates disagree",
                                      r.step_change / std::max(std::abs(r.value), 1e-300));
        }
        step *= 0.5;
    }
    return r;
}

enum class DefectForm { Exact, ClosedForm };

/// Residual entropy at T -> 0 of a metal whose static TE response is lost at
/// any T > 0: Delta S = -k_B beta_an(0) H_xx(L, 0) with the plasma static
/// Green's tensor. The closed form uses the perfect-mirror value of H_xx.
inline double entropy_defect(double L, const AtomSpec& atom, double omega_p, DefectForm form = DefectForm::Exact)
{
    if (!(L > 0.0)) {
        throw DomainError("entropy_defect: distance must be positive");
    }
    if (!(omega_p > 0.0)) {
        throw DomainError("entropy_defect: plasma frequency must be positive");
    }
    validate(atom);
    const double beta0 = AtomResponse::thermal(atom, 0.0).at_imag(0.0).xx.real();
    const double H = form == DefectForm::Exact
                         ? magnetic_green_imag(L, 0.0, Plasma{omega_p}, 0.0).H_xx.real()
                         : -phys::mu0 / (32.0 * pi * L * L * L);
    return -phys::kB * beta0 * H;
}

} // namespace magcp

#endif // MAGCP_ENTROPY_HPP_

// Copyright 2026 The magcp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAGCP_FREE_ENERGY_HPP_
#define MAGCP_FREE_ENERGY_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "magcp/constants.hpp"
#include "magcp/errors.hpp"
#include "magcp/greens.hpp"
#include "magcp/matsubara.hpp"
#include "magcp/quadrature.hpp"
#include "magcp/scenario.hpp"

namespace magcp {

struct FreeEnergyOptions
{
    double u = 1e-6;
    std::size_t max_terms = 1'000'000;
    std::optional<std::size_t> forced_terms;
    GreensOptions greens{};
    double rel_tol = 1e-8; // frequency integrals and the Matsubara remainder
    bool delegate_zero_temperature = true;
};

struct FreeEnergyResult
{
    double value = 0.0;       // J
    double nonresonant = 0.0; // J
    double resonant = 0.0;    // J
    std::size_t N_terms = 0;
    double remainder = 0.0;   // J
    double truncation_u = 0.0;
    bool zero_temperature_path = false;
};

namespace detail {

inline void check_point(double L, double T)
{
    if (!(L > 0.0)) {
        throw DomainError("free energy: distance must be positive");
    }
    if (!(T >= 0.0) || !std::isfinite(T)) {
        throw DomainError("free energy: temperature must be non-negative");
    }
}

// Frequencies where the integrand changes character.
inline std::vector<double> spectral_scales(double L, double T, const MaterialModel& model, const AtomResponse& atom)
{
    std::vector<double> s = atom.frequencies();
    s.push_back(phys::c / L);
    const auto r = response_at(model, T);
    if (!r.perfect) {
        s.push_back(r.omega_p);
        if (r.gamma > 0.0) {
            s.push_back(r.gamma);
            s.push_back(2.0 * r.gamma * phys::c * phys::c / std::pow(r.omega_p * L, 2));
        }
    }
    std::erase_if(s, [](double v) { return !(v > 0.0) || !std::isfinite(v); });
    std::sort(s.begin(), s.end());
    return s;
}

// Re beta_ij(i xi) H_ji(L, i xi).
inline double imaginary_axis_density(double L, double xi, double T, const Scenario& sc, const AtomResponse& atom,
                                     const GreensOptions& g)
{
    const auto H = magnetic_green_imag(L, xi, sc.material, T, g);
    return contract(atom.at_imag(xi), H, sc.geometry).real();
}

// -(hbar / 2 pi) times the integral over xi in (0, inf), taken in log xi.
inline double zero_temperature_integral(double L, double T, const Scenario& sc, const AtomResponse& atom,
                                        const FreeEnergyOptions& opts)
{
    const auto scales = spectral_scales(L, T, sc.material, atom);
    const double lo = 1e-9 * scales.front();
    const double hi = 30.0 * phys::c / L;
    std::vector<double> breaks;
    for (double s : scales) {
        breaks.push_back(std::log(s));
    }
    auto f = [&](double s) {
        const double xi = std::exp(s);
        return xi * imaginary_axis_density(L, xi, T, sc, atom, opts.greens);
    };
    QuadratureOptions q{opts.rel_tol, 0.0, 2'000'000};
    auto r = integrate(f, std::log(lo), std::log(std::max(hi, 1e3 * lo)), q, breaks);
    const double below = lo * imaginary_axis_density(L, lo, T, sc, atom, opts.greens);
    return -phys::hbar / two_pi * (r.value + below);
}

inline bool delegates_to_zero_temperature(double L, double T, const AtomResponse& atom, const FreeEnergyOptions& opts)
{
    if (T == 0.0) {
        return true;
    }
    if (!opts.delegate_zero_temperature) {
        return false;
    }
    const auto f = atom.frequencies();
    double scale = phys::c / L;
    for (double w : f) {
        if (w > 0.0) {
            scale = std::min(scale, w);
        }
    }
    return matsubara_spacing(T) < 1e-3 * scale;
}

inline MatsubaraSum thermal_sum(double L, double T, const Scenario& sc, const AtomResponse& atom,
                                const FreeEnergyOptions& opts, bool include_zero)
{
    const double xi1 = matsubara_spacing(T);
    const double kT = phys::kB * T;
    auto g = [&](double nu) { return -kT * imaginary_axis_density(L, nu * xi1, T, sc, atom, opts.greens); };
    TruncationOptions t;
    t.u = opts.u;
    t.max_terms = opts.max_terms;
    t.forced_terms = opts.forced_terms;
    t.include_zero = include_zero;
    t.remainder.rel_tol = opts.rel_tol;
    const double LT = thermal_wavelength(T);
    return matsubara_sum(g, L / LT, LT / L, t);
}

inline double bose(double omega, double T)
{
    if (T == 0.0) {
        return omega < 0.0 ? -1.0 : 0.0;
    }
    const double x = phys::hbar * std::abs(omega) / (phys::kB * T);
    const double n = 1.0 / std::expm1(x);
    return omega < 0.0 ? -1.0 - n : n;
}

// Diagonal |mu_i|^2 of one transition, shaped like a polarizability tensor.
inline PolarizabilityTensor dipole_weights(const TransitionDipole& t)
{
    return {std::norm(t.mu_x), std::norm(t.mu_y), std::norm(t.mu_z)};
}

inline FreeEnergyResult finish(FreeEnergyResult r)
{
    r.value = r.nonresonant + r.resonant;
    return r;
}

} // namespace detail

/// Zero-temperature free energy -(hbar/2 pi) int dxi beta_ij(i xi) H_ji(L, i xi).
/// Uses the ground-state (Equilibrium) or prepared-state (StateResolved)
/// polarizability; the resonant part of an excited state is not included.
inline double free_energy_zero_temperature(double L, const Scenario& sc, const FreeEnergyOptions& opts = {})
{
    detail::check_point(L, 0.0);
    validate(sc);
    const auto atom = sc.mode == Mode::Equilibrium ? AtomResponse::thermal(sc.atom, 0.0) : AtomResponse::state(sc.atom);
    return detail::zero_temperature_integral(L, 0.0, sc, atom, opts);
}

/// Equilibrium free energy as a Matsubara sum with a remainder integral.
/// T = 0, or a Matsubara spacing far below every spectral scale, switches to
/// the zero-temperature frequency integral.
inline FreeEnergyResult free_energy_equilibrium(double L, double T, const Scenario& sc,
                                                const FreeEnergyOptions& opts = {})
{
    detail::check_point(L, T);
    validate(sc);
    if (sc.mode != Mode::Equilibrium) {
        throw DomainError("free_energy_equilibrium: scenario is state-resolved");
    }
    const auto atom = AtomResponse::thermal(sc.atom, T);
    FreeEnergyResult r;
    r.truncation_u = opts.u;
    if (detail::delegates_to_zero_temperature(L, T, atom, opts)) {
        r.nonresonant = detail::zero_temperature_integral(L, T, sc, atom, opts);
        r.zero_temperature_path = true;
        return detail::finish(r);
    }
    const auto s = detail::thermal_sum(L, T, sc, atom, opts, true);
    r.nonresonant = s.value;
    r.N_terms = s.terms;
    r.remainder = s.remainder;
    return detail::finish(r);
}

/// Free energy of an atom held in its prepared state above a surface at
/// temperature T: non-resonant Matsubara sum plus the resonant term
/// sum_b n(omega_ba) |mu^ab_i|^2 Re H_ii(L, omega_ba).
inline FreeEnergyResult free_energy_state(double L, double T, const Scenario& sc, const FreeEnergyOptions& opts = {})
{
    detail::check_point(L, T);
    validate(sc);
    if (sc.mode != Mode::StateResolved) {
        throw DomainError("free_energy_state: scenario is not state-resolved");
    }
    const auto atom = AtomResponse::state(sc.atom);
    FreeEnergyResult r;
    r.truncation_u = opts.u;
    if (detail::delegates_to_zero_temperature(L, T, atom, opts)) {
        r.nonresonant = detail::zero_temperature_integral(L, T, sc, atom, opts);
        r.zero_temperature_path = true;
    } else {
        const auto s = detail::thermal_sum(L, T, sc, atom, opts, true);
        r.nonresonant = s.value;
        r.N_terms = s.terms;
        r.remainder = s.remainder;
    }
    for (const auto& t : transition_table(sc.atom)) {
        const double n = detail::bose(t.omega_ba, T);
        if (n == 0.0) {
            continue;
        }
        const auto H = magnetic_green_real(L, std::abs(t.omega_ba), sc.material, T, opts.greens);
        r.resonant += n * contract(detail::dipole_weights(t), H, sc.geometry).real();
    }
    return detail::finish(r);
}

/// One transition's share of the high-temperature resonant line.
struct ResonantTerm
{
    std::string to_state;
    double omega_ba = 0.0;
    double prefactor = 0.0; // k_B T / (hbar omega_ba), signed
    double value = 0.0;     // J
};

inline std::vector<ResonantTerm> resonant_terms_highT(double L, double T, const Scenario& sc,
                                                      const FreeEnergyOptions& opts = {})
{
    detail::check_point(L, T);
    if (!(T > 0.0)) {
        throw DomainError("resonant_terms_highT: temperature must be positive");
    }
    validate(sc);
    const auto H0 = magnetic_green_imag(L, 0.0, sc.material, T, opts.greens);
    std::vector<ResonantTerm> out;
    for (const auto& t : transition_table(sc.atom)) {
        const auto H = magnetic_green_real(L, std::abs(t.omega_ba), sc.material, T, opts.greens);
        ResonantTerm term;
        term.to_state = t.to_state;
        term.omega_ba = t.omega_ba;
        term.prefactor = phys::kB * T / (phys::hbar * t.omega_ba);
        term.value = term.prefactor * contract(detail::dipole_weights(t), H.H_xx.real() - H0.H_xx,
                                               H.H_zz.real() - H0.H_zz, sc.geometry).real();
        out.push_back(term);
    }
    return out;
}

/// High-temperature form of the state-resolved free energy:
///   -k_B T sum_{n>=1} beta^a(i xi_n) H(i xi_n)
///   + k_B T sum_b |mu^ab|^2 / (hbar omega_ba) [Re H(omega_ba) - H(0)].
/// The first line is reported as non-resonant, the second as resonant.
inline FreeEnergyResult free_energy_state_highT(double L, double T, const Scenario& sc,
                                                const FreeEnergyOptions& opts = {})
{
    detail::check_point(L, T);
    if (!(T > 0.0)) {
        throw DomainError("free_energy_state_highT: temperature must be positive");
    }
    validate(sc);
    const auto atom = AtomResponse::state(sc.atom);
    FreeEnergyResult r;
    r.truncation_u = opts.u;
    const auto s = detail::thermal_sum(L, T, sc, atom, opts, false);
    r.nonresonant = s.value;
    r.N_terms = s.terms;
    r.remainder = s.remainder;
    for (const auto& term : resonant_terms_highT(L, T, sc, opts)) {
        r.resonant += term.value;
    }
    return detail::finish(r);
}

/// Dispatches on the scenario mode.
inline FreeEnergyResult free_energy(double L, double T, const Scenario& sc, const FreeEnergyOptions& opts = {})
{
    return sc.mode == Mode::Equilibrium ? free_energy_equilibrium(L, T, sc, opts) : free_energy_state(L, T, sc, opts);
}

} // namespace magcp

#endif // MAGCP_FREE_ENERGY_HPP_

// Copyright 2026 The magcp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAGCP_ATOM_HPP_
#define MAGCP_ATOM_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "magcp/angular_momentum.hpp"
#include "magcp/constants.hpp"
#include "magcp/errors.hpp"
#include "magcp/materials.hpp"

namespace magcp {

/// Spin-1/2 in a static field along z, with Larmor frequency Omega_m.
struct TwoLevel
{
    double Omega_m;        // rad/s
    bool excited = false;  // prepared state for state-resolved energies
    bool operator==(const TwoLevel&) const = default;
};

struct HyperfineState
{
    int F;
    int mF;
    bool operator==(const HyperfineState&) const = default;
};

/// Rb-87 5s ground manifold (I = 3/2, S = 1/2) in a weak field.
struct Rb87Hyperfine
{
    double Omega_hf;                  // rad/s
    double Omega_L;                   // rad/s
    HyperfineState prepared{1, -1};
    bool operator==(const Rb87Hyperfine&) const = default;
};

using AtomSpec = std::variant<TwoLevel, Rb87Hyperfine>;

/// One virtual transition a -> b. omega_ba < 0 for a lower final level.
struct TransitionDipole
{
    std::string from_state;
    std::string to_state;
    double omega_ba; // rad/s
    cdouble mu_x;    // J/T
    cdouble mu_y;
    cdouble mu_z;
};

/// Diagonal polarizability tensor (J/T^2).
struct PolarizabilityTensor
{
    cdouble xx;
    cdouble yy;
    cdouble zz;

    PolarizabilityTensor operator*(double s) const { return {xx * s, yy * s, zz * s}; }
    PolarizabilityTensor operator+(const PolarizabilityTensor& o) const { return {xx + o.xx, yy + o.yy, zz + o.zz}; }
};

/// Energy levels (as angular frequencies) and the magnetic dipole operator
/// g_S mu_B S in the level basis.
struct LevelSystem
{
    std::vector<std::string> labels;
    std::vector<double> omega;
    std::array<std::vector<cdouble>, 3> mu; // row-major n x n, components x, y, z
    std::size_t prepared = 0;

    std::size_t size() const { return labels.size(); }
    cdouble dipole(int axis, std::size_t a, std::size_t b) const { return mu[axis][a * size() + b]; }
};

inline void validate(const AtomSpec& atom)
{
    std::visit(
        [](const auto& a) {
            using A = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<A, TwoLevel>) {
                if (!(a.Omega_m > 0.0)) {
                    throw DomainError("two-level atom: Omega_m must be positive");
                }
            } else {
                if (!(a.Omega_hf > 0.0) || !(a.Omega_L > 0.0)) {
                    throw DomainError("Rb-87: Omega_hf and Omega_L must be positive");
                }
                const bool ok = (a.prepared.F == 1 || a.prepared.F == 2) && std::abs(a.prepared.mF) <= a.prepared.F;
                if (!ok) {
                    throw DomainError("Rb-87: prepared state must have F in {1, 2} and |mF| <= F");
                }
            }
        },
        atom);
}

/// Warns when the Zeeman splitting is no longer small against the hyperfine
/// splitting and the linear ladder becomes unreliable.
inline std::optional<std::string> weak_field_advisory(const AtomSpec& atom)
{
    if (const auto* rb = std::get_if<Rb87Hyperfine>(&atom)) {
        if (rb->Omega_L / rb->Omega_hf > 0.2) {
            return "Omega_L / Omega_hf exceeds 0.2; the linear Zeeman ladder is outside its weak-field range";
        }
    }
    return std::nullopt;
}

/// Linear Zeeman ladder with g_F = -1/2 (F = 1) and +1/2 (F = 2):
/// E(1, m) = -m hbar Omega_L / 2, E(2, m) = hbar Omega_hf + m hbar Omega_L / 2.
inline double rb87_level_omega(const Rb87Hyperfine& rb, int F, int mF)
{
    return F == 1 ? -0.5 * mF * rb.Omega_L : rb.Omega_hf + 0.5 * mF * rb.Omega_L;
}

inline std::string rb87_label(int F, int mF) { return "|" + std::to_string(F) + "," + std::to_string(mF) + ">"; }

inline LevelSystem level_system(const AtomSpec& atom)
{
    validate(atom);
    const double mu0 = phys::gS * phys::muB;
    LevelSystem sys;
    if (const auto* tl = std::get_if<TwoLevel>(&atom)) {
        // Basis (g, e) = (spin down, spin up).
        sys.labels = {"g", "e"};
        sys.omega = {0.0, tl->Omega_m};
        const double h = 0.5 * mu0;
        const cdouble I(0.0, 1.0);
        sys.mu[0] = {0.0, h, h, 0.0};
        sys.mu[1] = {0.0, I * h, -I * h, 0.0};
        sys.mu[2] = {-h, 0.0, 0.0, h};
        sys.prepared = tl->excited ? 1 : 0;
        return sys;
    }
    const auto& rb = std::get<Rb87Hyperfine>(atom);
    const HalfInt I = HalfInt::from(1.5);
    const HalfInt S = HalfInt::from(0.5);

    struct Coupled
    {
        int F, mF;
    };
    std::vector<Coupled> states;
    for (int F : {1, 2}) {
        for (int m = -F; m <= F; ++m) {
            states.push_back({F, m});
        }
    }
    const std::size_t n = states.size();
    // Expansion coefficients in the uncoupled basis |m_I, m_S>, indexed by
    // (2 m_I + 3) / 2 * 2 + (2 m_S + 1) / 2.
    std::vector<std::array<double, 8>> coeff(n);
    for (std::size_t a = 0; a < n; ++a) {
        coeff[a].fill(0.0);
        for (int tmi = -3; tmi <= 3; tmi += 2) {
            for (int tms = -1; tms <= 1; tms += 2) {
                const double cg = clebsch_gordan(I, S, HalfInt{tmi}, HalfInt{tms}, HalfInt{2 * states[a].F},
                                                 HalfInt{2 * states[a].mF});
                coeff[a][((tmi + 3) / 2) * 2 + (tms + 1) / 2] = cg;
            }
        }
    }
    // Spin matrices in the uncoupled basis act on m_S only.
    auto spin_element = [](int axis, int tms_a, int tms_b) -> cdouble {
        const cdouble I1(0.0, 1.0);
        if (axis == 2) {
            return tms_a == tms_b ? cdouble(0.5 * tms_a) : cdouble(0.0);
        }
        if (tms_a == tms_b) {
            return 0.0;
        }
        // <up|S_x|down> = 1/2, <up|S_y|down> = -i/2.
        if (axis == 0) {
            return 0.5;
        }
        return tms_a > tms_b ? -0.5 * I1 : 0.5 * I1;
    };
    for (int axis = 0; axis < 3; ++axis) {
        sys.mu[axis].assign(n * n, 0.0);
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (int axis = 0; axis < 3; ++axis) {
                cdouble sum = 0.0;
                for (int tmi = -3; tmi <= 3; tmi += 2) {
                    for (int tms_a = -1; tms_a <= 1; tms_a += 2) {
                        for (int tms_b = -1; tms_b <= 1; tms_b += 2) {
                            const double ca = coeff[a][((tmi + 3) / 2) * 2 + (tms_a + 1) / 2];
                            const double cb = coeff[b][((tmi + 3) / 2) * 2 + (tms_b + 1) / 2];
                            if (ca != 0.0 && cb != 0.0) {
                                sum += ca * cb * spin_element(axis, tms_a, tms_b);
                            }
                        }
                    }
                }
                sys.mu[axis][a * n + b] = mu0 * sum;
            }
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        sys.labels.push_back(rb87_label(states[a].F, states[a].mF));
        sys.omega.push_back(rb87_level_omega(rb, states[a].F, states[a].mF));
        if (states[a].F == rb.prepared.F && states[a].mF == rb.prepared.mF) {
            sys.prepared = a;
        }
    }
    return sys;
}

/// Virtual transitions out of level `from`. Degenerate (omega_ba = 0) and
/// dipole-forbidden final states are left out.
inline std::vector<TransitionDipole> transition_table(const LevelSystem& sys, std::size_t from)
{
    const double scale = phys::gS * phys::muB;
    std::vector<TransitionDipole> out;
    for (std::size_t b = 0; b < sys.size(); ++b) {
        const double w = sys.omega[b] - sys.omega[from];
        if (w == 0.0) {
            continue;
        }
        TransitionDipole t{sys.labels[from], sys.labels[b], w, sys.dipole(0, from, b), sys.dipole(1, from, b),
                           sys.dipole(2, from, b)};
        const double strength = std::norm(t.mu_x) + std::norm(t.mu_y) + std::norm(t.mu_z);
        if (strength > 1e-24 * scale * scale) {
            out.push_back(t);
        }
    }
    return out;
}

/// Transitions out of the atom's prepared state.
inline std::vector<TransitionDipole> transition_table(const AtomSpec& atom)
{
    const auto sys = level_system(atom);
    return transition_table(sys, sys.prepared);
}

namespace detail {

// Sum over b of |mu_i|^2 / hbar * 2 w_ba / (w_ba^2 - omega^2) for a given omega^2.
inline PolarizabilityTensor polarizability_sum(const std::vector<TransitionDipole>& transitions, cdouble omega2)
{
    PolarizabilityTensor beta{};
    for (const auto& t : transitions) {
        const cdouble f = 2.0 * t.omega_ba / (phys::hbar * (t.omega_ba * t.omega_ba - omega2));
        beta.xx += std::norm(t.mu_x) * f;
        beta.yy += std::norm(t.mu_y) * f;
        beta.zz += std::norm(t.mu_z) * f;
    }
    return beta;
}

} // namespace detail

/// State polarizability on the imaginary axis, omega = i xi with xi >= 0
/// (xi = 0 gives the static value).
inline PolarizabilityTensor state_polarizability_imag(const std::vector<TransitionDipole>& transitions, double xi)
{
    if (!(xi >= 0.0)) {
        throw DomainError("state_polarizability: xi must be non-negative");
    }
    return detail::polarizability_sum(transitions, -xi * xi);
}

/// State polarizability at a spectral point. Real frequencies closer than
/// `pole_window` (relative) to a transition frequency are rejected.
inline PolarizabilityTensor state_polarizability(const std::vector<TransitionDipole>& transitions,
                                                 const SpectralPoint& s, double pole_window = 1e-6)
{
    if (transitions.empty()) {
        throw DomainError("state_polarizability: empty transition list");
    }
    require_positive(s);
    if (s.axis == Axis::Imaginary) {
        return state_polarizability_imag(transitions, s.value);
    }
    for (const auto& t : transitions) {
        const double w = std::abs(t.omega_ba);
        if (std::abs(s.value - w) <= pole_window * w) {
            throw PoleError("state_polarizability: frequency within the pole window of " + t.to_state);
        }
    }
    return detail::polarizability_sum(transitions, s.value * s.value);
}

/// Boltzmann populations of the levels at temperature T (T = 0 puts all
/// weight on the lowest level).
inline std::vector<double> boltzmann_weights(const LevelSystem& sys, double T)
{
    if (!(T >= 0.0)) {
        throw DomainError("temperature must be non-negative");
    }
    const double w_min = *std::min_element(sys.omega.begin(), sys.omega.end());
    std::vector<double> p(sys.size(), 0.0);
    if (T == 0.0) {
        std::size_t count = 0;
        for (std::size_t a = 0; a < sys.size(); ++a) {
            count += sys.omega[a] == w_min;
        }
        for (std::size_t a = 0; a < sys.size(); ++a) {
            p[a] = sys.omega[a] == w_min ? 1.0 / count : 0.0;
        }
        return p;
    }
    double Z = 0.0;
    for (std::size_t a = 0; a < sys.size(); ++a) {
        p[a] = std::exp(-phys::hbar * (sys.omega[a] - w_min) / (phys::kB * T));
        Z += p[a];
    }
    for (double& v : p) {
        v /= Z;
    }
    return p;
}

/// Thermal polarizability at omega = i xi, xi >= 0.
inline PolarizabilityTensor thermal_polarizability_imag(const AtomSpec& atom, double T, double xi)
{
    if (!(T >= 0.0)) {
        throw DomainError("thermal_polarizability: temperature must be non-negative");
    }
    if (const auto* tl = std::get_if<TwoLevel>(&atom)) {
        TwoLevel ground = *tl;
        ground.excited = false;
        const auto beta_g = state_polarizability_imag(transition_table(ground), xi);
        const double factor = T == 0.0 ? 1.0 : std::tanh(phys::hbar * tl->Omega_m / (2.0 * phys::kB * T));
        return beta_g * factor;
    }
    const auto sys = level_system(atom);
    const auto p = boltzmann_weights(sys, T);
    PolarizabilityTensor beta{};
    for (std::size_t a = 0; a < sys.size(); ++a) {
        if (p[a] > 0.0) {
            beta = beta + state_polarizability_imag(transition_table(sys, a), xi) * p[a];
        }
    }
    return beta;
}

/// Thermal (Boltzmann-averaged) polarizability at a spectral point.
inline PolarizabilityTensor thermal_polarizability(const AtomSpec& atom, double T, const SpectralPoint& s)
{
    require_positive(s);
    if (s.axis == Axis::Imaginary) {
        return thermal_polarizability_imag(atom, T, s.value);
    }
    if (!(T >= 0.0)) {
        throw DomainError("thermal_polarizability: temperature must be non-negative");
    }
    const auto sys = level_system(atom);
    const auto p = boltzmann_weights(sys, T);
    PolarizabilityTensor beta{};
    for (std::size_t a = 0; a < sys.size(); ++a) {
        if (p[a] > 0.0) {
            beta = beta + state_polarizability(transition_table(sys, a), s) * p[a];
        }
    }
    return beta;
}

/// Magnetic polarizability of a conducting sphere small against the skin
/// depth and the wavelength: (2 pi / 15 mu0) (R omega / c)^2 [eps - 1] R^3.
inline cdouble nanosphere_polarizability(double R, const MaterialModel& model, const SpectralPoint& s, double T)
{
    if (!(R > 0.0)) {
        throw DomainError("nanosphere_polarizability: radius must be positive");
    }
    require_positive(s);
    const auto resp = response_at(model, T);
    if (resp.perfect) {
        throw DomainError("nanosphere_polarizability: the small-sphere form needs a finite permittivity");
    }
    const cdouble w = s.axis == Axis::Imaginary ? cdouble(-screening_wavenumber2(resp, s.value))
                                                : polarization_wavenumber2(resp, s.omega());
    return 2.0 * pi / (15.0 * phys::mu0) * std::pow(R, 5) * w;
}

} // namespace magcp

#endif // MAGCP_ATOM_HPP_

// Copyright 2026 The magcp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAGCP_SCENARIO_HPP_
#define MAGCP_SCENARIO_HPP_

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "magcp/atom.hpp"
#include "magcp/errors.hpp"
#include "magcp/greens.hpp"
#include "magcp/materials.hpp"

namespace magcp {

/// Anisotropic: magnetic trap, dipole components as given by the atom.
/// Isotropic: optical trap, polarizability averaged over orientations.
enum class Geometry { Anisotropic, Isotropic };

/// Equilibrium: atom thermalised with the surface. StateResolved: atom held
/// in its prepared state while the surface sits at temperature T.
enum class Mode { Equilibrium, StateResolved };

struct Scenario
{
    AtomSpec atom;
    MaterialModel material;
    Mode mode = Mode::Equilibrium;
    Geometry geometry = Geometry::Anisotropic;
    bool operator==(const Scenario&) const = default;
};

inline void validate(const Scenario& sc)
{
    validate(sc.atom);
    validate(sc.material);
    if (sc.geometry == Geometry::Isotropic && !std::holds_alternative<TwoLevel>(sc.atom)) {
        throw DomainError("isotropic geometry is only defined for the two-level atom");
    }
}

/// beta_ij H_ji for a diagonal tensor and the planar Green's tensor
/// (H_yy = H_xx). The isotropic form uses beta_iso = trace(beta).
inline cdouble contract(const PolarizabilityTensor& b, cdouble H_xx, cdouble H_zz, Geometry g)
{
    if (g == Geometry::Anisotropic) {
        return (b.xx + b.yy) * H_xx + b.zz * H_zz;
    }
    return (b.xx + b.yy + b.zz) * (2.0 * H_xx + H_zz) / 3.0;
}

inline cdouble contract(const PolarizabilityTensor& b, const GreensComponents& H, Geometry g)
{
    return contract(b, H.H_xx, H.H_zz, g);
}

/// Polarizability as a weighted mixture of state polarizabilities; cheap to
/// evaluate repeatedly along the imaginary axis.
class AtomResponse
{
public:
    /// Boltzmann mixture at temperature T (two-level: the tanh closed form).
    static AtomResponse thermal(const AtomSpec& atom, double T)
    {
        AtomResponse r;
        if (const auto* tl = std::get_if<TwoLevel>(&atom)) {
            TwoLevel ground = *tl;
            ground.excited = false;
            const double f = T == 0.0 ? 1.0 : std::tanh(phys::hbar * tl->Omega_m / (2.0 * phys::kB * T));
            r.parts_.emplace_back(f, transition_table(ground));
            return r;
        }
        const auto sys = level_system(atom);
        const auto p = boltzmann_weights(sys, T);
        for (std::size_t a = 0; a < sys.size(); ++a) {
            if (p[a] > 0.0) {
                r.parts_.emplace_back(p[a], transition_table(sys, a));
            }
        }
        return r;
    }

    /// The atom's prepared state.
    static AtomResponse state(const AtomSpec& atom)
    {
        AtomResponse r;
        r.parts_.emplace_back(1.0, transition_table(atom));
        return r;
    }

    PolarizabilityTensor at_imag(double xi) const
    {
        PolarizabilityTensor b{};
        for (const auto& [w, t] : parts_) {
            b = b + state_polarizability_imag(t, xi) * w;
        }
        return b;
    }

    /// Transition frequencies |omega_ba| that set the spectral scales.
    std::vector<double> frequencies() const
    {
        std::vector<double> out;
        for (const auto& part : parts_) {
            for (const auto& t : part.second) {
                out.push_back(std::abs(t.omega_ba));
            }
        }
        return out;
    }

private:
    std::vector<std::pair<double, std::vector<TransitionDipole>>> parts_;
};

} // namespace magcp

#endif // MAGCP_SCENARIO_HPP_

// Copyright 2026 The magcp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAGCP_GREENS_HPP_
#define MAGCP_GREENS_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>

#include "magcp/constants.hpp"
#include "magcp/errors.hpp"
#include "magcp/materials.hpp"
#include "magcp/quadrature.hpp"

namespace magcp {

enum class Field { Magnetic, Electric };

/// Reflected Green's tensor at the dipole position. H_yy = H_xx and the
/// off-diagonal entries vanish, so only two numbers are kept. Magnetic units
/// are N/A^2/m^3 (mu0 / length^3); electric units are 1/(eps0 m^3).
struct GreensComponents
{
    cdouble H_xx;
    cdouble H_zz;
    struct Meta
    {
        std::size_t nodes_used = 0;
        double est_error = 0.0; // relative
    } meta;
};

struct GreensOptions
{
    double rel_tol = 1e-8;
    std::size_t node_cap = 1'000'000;
};

namespace detail {

template <typename T>
struct TensorPair
{
    T xx{};
    T zz{};
    TensorPair operator+(const TensorPair& o) const { return {xx + o.xx, zz + o.zz}; }
    TensorPair operator-(const TensorPair& o) const { return {xx - o.xx, zz - o.zz}; }
    TensorPair operator*(double s) const { return {xx * s, zz * s}; }
    TensorPair operator*(cdouble s) const { return {xx * s, zz * s}; }
};

template <typename T>
double magnitude(const TensorPair<T>& v)
{
    return std::max(std::abs(v.xx), std::abs(v.zz));
}

inline double prefactor(Field field)
{
    return field == Field::Magnetic ? phys::mu0 / (8.0 * pi) : 1.0 / (8.0 * pi * phys::eps0);
}

inline void check_distance(double L)
{
    if (!(L > 0.0)) {
        throw DomainError("Green's tensor: distance must be positive");
    }
}

// Integrand along the kappa contour, written as
//   xx: kappa^2 r_a + (omega^2/c^2) r_b,   zz: 2 k^2 r_a,
// with (r_a, r_b) = (r_TE, r_TM) for the magnetic tensor and swapped for the
// electric one; k^2 = kappa^2 + omega^2/c^2.
template <typename T>
TensorPair<T> contour_integrand(Field field, T kappa, T a2, T r_te, T r_tm)
{
    const T ra = field == Field::Magnetic ? r_te : r_tm;
    const T rb = field == Field::Magnetic ? r_tm : r_te;
    const T k2 = kappa * kappa + a2;
    return {kappa * kappa * ra + a2 * rb, 2.0 * k2 * ra};
}

inline GreensComponents finish(const QuadratureResult<TensorPair<cdouble>>& r, double scale, std::size_t nodes)
{
    GreensComponents g;
    g.H_xx = r.value.xx * scale;
    g.H_zz = r.value.zz * scale;
    g.meta.nodes_used = nodes;
    const double mag = magnitude(r.value);
    g.meta.est_error = mag > 0.0 ? r.error / mag : 0.0;
    return g;
}

// Imaginary axis, omega = i xi with xi >= 0: everything is real.
inline GreensComponents green_imag(Field field, double L, double xi, const MaterialModel& model, double T,
                                   const GreensOptions& opts)
{
    check_distance(L);
    if (!(xi >= 0.0)) {
        throw DomainError("Green's tensor: xi must be non-negative");
    }
    const auto resp = response_at(model, T);
    const double a = xi / phys::c;
    const double a2 = a * a;
    const double u0 = 2.0 * a * L;
    GreensComponents out{};
    if (u0 > 1400.0) {
        return out; // e^{-u0} underflows
    }
    const double q2 = resp.perfect ? 0.0 : screening_wavenumber2(resp, xi);
    if (field == Field::Magnetic && xi == 0.0 && !resp.perfect && q2 == 0.0) {
        // Dissipative conductor: r_TE(0, k) = 0 and the TM term carries omega^2.
        return out;
    }
    const double inv_eps = (a2 > 0.0 && !resp.perfect) ? a2 / (a2 + q2) : 0.0;
    const double two_L = 2.0 * L;

    auto f = [&](double u) -> TensorPair<double> {
        const double kappa = u / two_L;
        double r_te;
        double r_tm;
        if (resp.perfect) {
            r_te = -1.0;
            r_tm = 1.0;
        } else {
            const double kappa_m = std::sqrt(kappa * kappa + q2);
            const double s = kappa + kappa_m;
            r_te = -q2 / (s * s);
            if (xi == 0.0) {
                r_tm = 1.0;
            } else if (inv_eps > 0.5) {
                // Weak reflector: eps kappa - kappa_m = (eps - 1)[(eps + 1) kappa^2 - a^2] / (eps kappa + kappa_m).
                const double eps_m1 = q2 / a2;
                const double d = (eps_m1 + 1.0) * kappa + kappa_m;
                r_tm = eps_m1 * ((eps_m1 + 2.0) * kappa * kappa - a2) / (d * d);
            } else {
                r_tm = (kappa - kappa_m * inv_eps) / (kappa + kappa_m * inv_eps);
            }
        }
        auto v = contour_integrand<double>(field, kappa, -a2, r_te, r_tm);
        return v * std::exp(-(u - u0));
    };

    QuadratureOptions q{opts.rel_tol, 0.0, opts.node_cap};
    const auto r = integrate_to_infinity(f, u0, 2.0, q);
    const double scale = prefactor(field) / two_L * std::exp(-u0);
    out.H_xx = r.value.xx * scale;
    out.H_zz = r.value.zz * scale;
    out.meta.nodes_used = r.evaluations;
    const double mag = magnitude(r.value);
    out.meta.est_error = mag > 0.0 ? r.error / mag : 0.0;
    return out;
}

// Real axis: the kappa contour runs from -i omega/c (k = 0) to 0 along the
// propagating sector, then along the positive real axis (evanescent sector).
inline GreensComponents green_real(Field field, double L, double omega, const MaterialModel& model, double T,
                                   const GreensOptions& opts)
{
    check_distance(L);
    if (!(omega > 0.0)) {
        throw DomainError("Green's tensor: real frequency must be positive");
    }
    const auto resp = response_at(model, T);
    const double a = omega / phys::c;
    const cdouble a2 = a * a;
    const cdouble w = resp.perfect ? cdouble(0.0) : polarization_wavenumber2(resp, omega);
    const cdouble eps = 1.0 + w / a2;
    const cdouble I(0.0, 1.0);

    auto kernel = [&](cdouble kappa) -> TensorPair<cdouble> {
        ReflectionPair r = resp.perfect ? ReflectionPair{-1.0, 1.0} : reflect(kappa, w, eps);
        return contour_integrand<cdouble>(field, kappa, a2, r.r_TE, r.r_TM);
    };

    QuadratureOptions q{opts.rel_tol, 0.0, opts.node_cap};
    std::size_t nodes = 0;
    TensorPair<cdouble> total{};
    double error = 0.0;

    // Propagating sector, kappa = -i p, p in [0, a]; oscillates as e^{2 i p L}.
    {
        auto f = [&](double p) -> TensorPair<cdouble> {
            const cdouble kappa(0.0, -p);
            return kernel(kappa) * (I * std::exp(cdouble(0.0, 2.0 * p * L)));
        };
        const double phase = 2.0 * a * L;
        const int panels = std::max(2, static_cast<int>(std::ceil(16.0 * phase / two_pi)));
        for (int i = 0; i < panels; ++i) {
            q.max_evaluations = opts.node_cap - std::min(nodes, opts.node_cap);
            auto r = integrate(f, a * i / panels, a * (i + 1) / panels, q);
            total = total + r.value;
            error += r.error;
            nodes += r.evaluations;
        }
    }

    // Evanescent sector in u = 2 kappa L.
    const double two_L = 2.0 * L;
    auto g = [&](double u) -> TensorPair<cdouble> { return kernel(u / two_L) * std::exp(-u); };
    double u_start = 0.0;
    const bool sharp_pole = !resp.perfect && eps.imag() == 0.0 && eps.real() < -1.0;
    if (sharp_pole) {
        // Lossless TM surface mode: kappa_p^2 = a^2 / (|eps| - 1). Principal value
        // by symmetric pairing plus i*pi times the residue (pole sits above the
        // contour for omega + i0).
        const double e = eps.real();
        const double kappa_p = a / std::sqrt(-e - 1.0);
        const double u_p = two_L * kappa_p;
        auto pv = [&](double t) { return g(u_p + t) + g(u_p - t); };
        q.max_evaluations = opts.node_cap - std::min(nodes, opts.node_cap);
        auto r = integrate(pv, 0.0, u_p, q);
        total = total + r.value * (1.0 / two_L);
        error += r.error / two_L;
        nodes += r.evaluations;
        const double tm_weight = field == Field::Magnetic ? a * a : kappa_p * kappa_p;
        const double tm_weight_zz = field == Field::Magnetic ? 0.0 : 2.0 * (kappa_p * kappa_p + a * a);
        const double res_rtm = 2.0 * e * kappa_p / (e - 1.0 / e);
        const double decay = std::exp(-two_L * kappa_p);
        total.xx += I * pi * tm_weight * res_rtm * decay;
        total.zz += I * pi * tm_weight_zz * res_rtm * decay;
        u_start = 2.0 * u_p;
    }
    q.max_evaluations = opts.node_cap - std::min(nodes, opts.node_cap);
    auto r = integrate_to_infinity(g, u_start, 2.0, q);
    total = total + r.value * (1.0 / two_L);
    error += r.error / two_L;
    nodes += r.evaluations;

    QuadratureResult<TensorPair<cdouble>> combined;
    combined.value = total;
    combined.error = error;
    return finish(combined, prefactor(field), nodes);
}

} // namespace detail

/// Magnetic Green's tensor at omega = i xi. xi = 0 uses the static reflection
/// limits; for a dissipative normal conductor it is exactly zero.
inline GreensComponents magnetic_green_imag(double L, double xi, const MaterialModel& model, double T,
                                            const GreensOptions& opts = {})
{
    return detail::green_imag(Field::Magnetic, L, xi, model, T, opts);
}

/// Magnetic Green's tensor at real omega > 0 (complex result).
inline GreensComponents magnetic_green_real(double L, double omega, const MaterialModel& model, double T,
                                            const GreensOptions& opts = {})
{
    return detail::green_real(Field::Magnetic, L, omega, model, T, opts);
}

/// Electric Green's tensor: same kernel with r_TE and r_TM exchanged, scaled by c^2.
inline GreensComponents electric_green(double L, const SpectralPoint& s, const MaterialModel& model, double T,
                                       const GreensOptions& opts = {})
{
    if (s.axis == Axis::Imaginary) {
        return detail::green_imag(Field::Electric, L, s.value, model, T, opts);
    }
    return detail::green_real(Field::Electric, L, s.value, model, T, opts);
}

enum class GreenRegime { SubSkinDepthDrude, SubSkinDepthPlasma, NonRetarded, Retarded };

/// Material data used by the closed-form asymptotes. `eta` scales the plasma
/// frequency for the superconducting fraction.
struct AsymptoteMaterial
{
    double omega_p = 0.0;
    double gamma = 0.0;
    double eta = 1.0;
};

/// Tabulated asymptotes of the reflected Green's tensor. In the sub-skin-depth
/// and non-retarded columns H_zz = 2 H_xx; the retarded column is the perfect
/// mirror, whose zz entry is -(mu0/16 pi L^3)(1 - 2 i w L/c) e^{2 i w L/c}.
inline GreensComponents green_asymptote(GreenRegime regime, double L, const SpectralPoint& s,
                                        const AsymptoteMaterial& mat, Field field = Field::Magnetic)
{
    if (!(L > 0.0)) {
        throw DomainError("green_asymptote: distance must be positive");
    }
    const cdouble I(0.0, 1.0);
    const cdouble omega = s.omega();
    const double L3 = L * L * L;
    const double sign = field == Field::Magnetic ? -1.0 : 1.0;
    const double unit = field == Field::Magnetic ? phys::mu0 : 1.0 / phys::eps0;
    GreensComponents g{};
    switch (regime) {
    case GreenRegime::SubSkinDepthDrude: {
        if (field == Field::Electric) {
            throw DomainError("green_asymptote: no sub-skin-depth electric entry");
        }
        const cdouble inv_delta2 = mat.omega_p * mat.omega_p * omega / (2.0 * mat.gamma * phys::c * phys::c);
        g.H_xx = I * phys::mu0 * inv_delta2 / (32.0 * pi * L);
        g.H_zz = 2.0 * g.H_xx;
        break;
    }
    case GreenRegime::SubSkinDepthPlasma: {
        if (field == Field::Electric) {
            throw DomainError("green_asymptote: no sub-skin-depth electric entry");
        }
        const double lambda_p2 = std::pow(two_pi * phys::c / mat.omega_p, 2) / mat.eta;
        g.H_xx = -phys::mu0 * pi / (16.0 * lambda_p2 * L);
        g.H_zz = 2.0 * g.H_xx;
        break;
    }
    case GreenRegime::NonRetarded:
        g.H_xx = sign * unit / (32.0 * pi * L3);
        g.H_zz = 2.0 * g.H_xx;
        break;
    case GreenRegime::Retarded: {
        const cdouble x = omega * L / phys::c;
        const cdouble phase = std::exp(2.0 * I * x);
        g.H_xx = sign * unit / (32.0 * pi * L3) * (1.0 - 2.0 * I * x - 4.0 * x * x) * phase;
        g.H_zz = sign * unit / (16.0 * pi * L3) * (1.0 - 2.0 * I * x) * phase;
        break;
    }
    }
    return g;
}

} // namespace magcp

#endif // MAGCP_GREENS_HPP_

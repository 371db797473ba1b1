// Copyright 2026 The magcp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAGCP_QUADRATURE_HPP_
#define MAGCP_QUADRATURE_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <type_traits>
#include <vector>

#include "magcp/errors.hpp"

namespace magcp {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

struct QuadratureOptions
{
    double rel_tol = 1e-8;
    double abs_tol = 0.0;
    std::size_t max_evaluations = 1'000'000;
};

template <typename V>
struct QuadratureResult
{
    V value{};
    double error = 0.0;     // absolute error estimate
    double abs_integral = 0.0; // integral of |f|, used for roundoff floors
    std::size_t evaluations = 0;
};

namespace detail {

// Gauss-Kronrod 7/15 abscissae and weights (QUADPACK qk15).
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename V>
struct Panel
{
    double a, b;
    V value;
    double error;
    double abs_integral;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <typename V, typename F>
Panel<V> gauss_kronrod_15(F& f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const V fc = f(center);
    V result_k = fc * kWgk[7];
    V result_g = fc * kWg[3];
    double resabs = magnitude(fc) * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const V f1 = f(center - dx);
        const V f2 = f(center + dx);
        result_k = result_k + (f1 + f2) * kWgk[j];
        resabs += (magnitude(f1) + magnitude(f2)) * kWgk[j];
        if (j % 2 == 1) {
            result_g = result_g + (f1 + f2) * kWg[j / 2];
        }
    }
    const V value = result_k * half;
    double err = magnitude((result_k - result_g) * half);
    // QUADPACK-style sharpening of the raw Gauss/Kronrod difference.
    const double scale = std::abs(half) * resabs;
    if (scale > 0.0 && err > 0.0) {
        err = std::min(err, scale * std::pow(200.0 * err / scale, 1.5));
    }
    return {a, b, value, err, std::abs(half) * resabs};
}

} // namespace detail

/// Globally adaptive Gauss-Kronrod quadrature on [a, b].
///
/// The interval with the largest error estimate is bisected until the summed
/// estimate drops below max(abs_tol, rel_tol*|I|) or the roundoff floor set by
/// the integral of |f|. `breakpoints` seed the initial partition. Exceeding
/// `max_evaluations` throws NonConvergenceError.
template <typename F>
auto integrate(F&& f, double a, double b, const QuadratureOptions& opts = {},
               std::span<const double> breakpoints = {})
{
    using V = std::decay_t<decltype(f(a))>;
    QuadratureResult<V> out;
    if (a == b) {
        return out;
    }

    std::vector<double> edges{a};
    for (double x : breakpoints) {
        if (x > std::min(a, b) && x < std::max(a, b)) {
            edges.push_back(x);
        }
    }
    edges.push_back(b);
    if (a < b) {
        std::sort(edges.begin(), edges.end());
    } else {
        std::sort(edges.begin(), edges.end(), std::greater<>());
    }

    std::priority_queue<detail::Panel<V>> heap;
    V total{};
    double total_err = 0.0;
    double total_abs = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        auto p = detail::gauss_kronrod_15<V>(f, edges[i], edges[i + 1]);
        out.evaluations += 15;
        total = total + p.value;
        total_err += p.error;
        total_abs += p.abs_integral;
        heap.push(p);
    }

    constexpr double eps = std::numeric_limits<double>::epsilon();
    auto tolerance = [&] {
        return std::max({opts.abs_tol, opts.rel_tol * magnitude(total), 50.0 * eps * total_abs});
    };

    while (total_err > tolerance()) {
        if (out.evaluations + 30 > opts.max_evaluations) {
            throw NonConvergenceError("adaptive quadrature exceeded its node budget",
                                      total_err / std::max(magnitude(total), 1e-300));
        }
        auto worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (std::abs(worst.b - worst.a) <= 1e3 * eps * std::max(std::abs(mid), 1e-300)) {
            // Interval at machine resolution; the remaining error is roundoff.
            break;
        }
        heap.pop();
        auto left = detail::gauss_kronrod_15<V>(f, worst.a, mid);
        auto right = detail::gauss_kronrod_15<V>(f, mid, worst.b);
        out.evaluations += 30;
        total = total + (left.value + right.value - worst.value);
        total_err += left.error + right.error - worst.error;
        total_abs += left.abs_integral + right.abs_integral - worst.abs_integral;
        heap.push(left);
        heap.push(right);
    }

    // Resum to shed the drift of incremental updates.
    V sum{};
    double err = 0.0;
    double abs_sum = 0.0;
    while (!heap.empty()) {
        sum = sum + heap.top().value;
        err += heap.top().error;
        abs_sum += heap.top().abs_integral;
        heap.pop();
    }
    out.value = sum;
    out.error = err;
    out.abs_integral = abs_sum;
    return out;
}

/// Integrates a decaying integrand over [a, inf) panel by panel.
///
/// Panels start at `first_width` and grow geometrically; marching stops once
/// a panel's integral of |f| falls below `tail_ratio` times the largest panel
/// seen so far.
template <typename F>
auto integrate_to_infinity(F&& f, double a, double first_width, const QuadratureOptions& opts = {},
                           double growth = 2.0, double tail_ratio = 1e-16, int max_panels = 400)
{
    using V = std::decay_t<decltype(f(a))>;
    QuadratureResult<V> out;
    double lo = a;
    double width = first_width;
    double largest = 0.0;
    for (int panel = 0; panel < max_panels; ++panel) {
        QuadratureOptions sub = opts;
        sub.max_evaluations = opts.max_evaluations - std::min(out.evaluations, opts.max_evaluations);
        auto r = integrate(f, lo, lo + width, sub);
        out.value = out.value + r.value;
        out.error += r.error;
        out.abs_integral += r.abs_integral;
        out.evaluations += r.evaluations;
        largest = std::max(largest, r.abs_integral);
        if (panel >= 2 && r.abs_integral <= tail_ratio * largest) {
            return out;
        }
        lo += width;
        width *= growth;
    }
    throw NonConvergenceError("semi-infinite quadrature did not reach its tail cutoff",
                              out.error / std::max(magnitude(out.value), 1e-300));
}

} // namespace magcp

#endif // MAGCP_QUADRATURE_HPP_

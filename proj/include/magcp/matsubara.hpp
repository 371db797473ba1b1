// Copyright 2026 The magcp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAGCP_MATSUBARA_HPP_
#define MAGCP_MATSUBARA_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>

#include "magcp/errors.hpp"
#include "magcp/quadrature.hpp"

namespace magcp {

struct TruncationOptions
{
    double u = 1e-6;                          // relative truncation target
    std::size_t max_terms = 1'000'000;        // hard cap on N
    std::optional<std::size_t> forced_terms;  // sum exactly this many terms
    bool include_zero = true;                 // drop the n = 0 term when false
    QuadratureOptions remainder{1e-8, 0.0, 400'000};
};

struct MatsubaraSum
{
    double value = 0.0;     // partial + remainder
    double partial = 0.0;   // primed sum up to N
    double remainder = 0.0; // tail estimate beyond N
    std::size_t terms = 0;  // N
};

/// Primed sum over n >= 0 of g(n), with the n = 0 term at half weight.
///
/// Terms are added until N |g(N)| / tau < u |sum|. The tail is then estimated
/// as the integral of g from N to infinity minus g(N)/2, so that g(N) is not
/// counted twice. `g` must accept a continuous index. `decay_index` is the
/// index scale of the exponential cutoff and only seeds the tail quadrature.
template <typename G>
MatsubaraSum matsubara_sum(G&& g, double tau, double decay_index, const TruncationOptions& opts = {})
{
    if (!(opts.u > 0.0)) {
        throw DomainError("Matsubara sum: truncation target must be positive");
    }
    if (opts.forced_terms && *opts.forced_terms == 0) {
        throw DomainError("Matsubara sum: forced term count must be at least 1");
    }
    tau = std::max(1.0, tau);
    MatsubaraSum out;
    double sum = opts.include_zero ? 0.5 * g(0.0) : 0.0;
    double gN = 0.0;
    std::size_t n = 0;
    while (true) {
        ++n;
        if (opts.forced_terms) {
            if (n > *opts.forced_terms) {
                --n;
                break;
            }
        } else if (n > opts.max_terms) {
            throw NonConvergenceError("Matsubara sum exceeded the term cap",
                                      static_cast<double>(n) * std::abs(gN) / (tau * std::abs(sum)));
        }
        gN = g(static_cast<double>(n));
        sum += gN;
        if (!opts.forced_terms) {
            if (gN == 0.0) {
                break;
            }
            if (static_cast<double>(n) * std::abs(gN) / tau < opts.u * std::abs(sum)) {
                break;
            }
        }
    }
    out.terms = n;
    out.partial = sum;
    if (gN != 0.0) {
        const double N = static_cast<double>(n);
        QuadratureOptions q = opts.remainder;
        q.abs_tol = std::max(q.abs_tol, 1e-13 * std::abs(sum));
        const double width = std::max(1.0, std::min(N, decay_index));
        const auto tail = integrate_to_infinity(g, N, width, q);
        out.remainder = tail.value - 0.5 * gN;
    }
    out.value = out.partial + out.remainder;
    return out;
}

} // namespace magcp

#endif // MAGCP_MATSUBARA_HPP_

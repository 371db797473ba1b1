// Copyright 2026 The magcp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAGCP_ANGULAR_MOMENTUM_HPP_
#define MAGCP_ANGULAR_MOMENTUM_HPP_

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "magcp/errors.hpp"

namespace magcp {

/// Integer or half-integer quantum number, stored as twice its value.
struct HalfInt
{
    int twice = 0;

    static HalfInt from(double v)
    {
        const double t = 2.0 * v;
        if (std::abs(t - std::round(t)) > 1e-9) {
            throw DomainError("quantum number " + std::to_string(v) + " is not a multiple of 1/2");
        }
        return {static_cast<int>(std::lround(t))};
    }

    double value() const { return 0.5 * twice; }
    friend bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
};

namespace detail {

inline double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

inline double factorial(int n)
{
    double f = 1.0;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

inline void check_projection(HalfInt j, HalfInt m, const char* name)
{
    if (j.twice < 0 || std::abs(m.twice) > j.twice || (j.twice - m.twice) % 2 != 0) {
        throw DomainError(std::string("clebsch_gordan: invalid projection for ") + name);
    }
}

} // namespace detail

/// <j1 m1; j2 m2 | J M> in the Condon-Shortley convention, from the Racah sum.
/// Vanishes when M != m1 + m2 or the triangle rule fails.
inline double clebsch_gordan(HalfInt j1, HalfInt j2, HalfInt m1, HalfInt m2, HalfInt J, HalfInt M)
{
    detail::check_projection(j1, m1, "j1");
    detail::check_projection(j2, m2, "j2");
    detail::check_projection(J, M, "J");
    if (M.twice != m1.twice + m2.twice) {
        return 0.0;
    }
    if (J.twice < std::abs(j1.twice - j2.twice) || J.twice > j1.twice + j2.twice ||
        (j1.twice + j2.twice + J.twice) % 2 != 0) {
        return 0.0;
    }
    // All arguments below are integers.
    const int a = (j1.twice + j2.twice - J.twice) / 2;
    const int b = (j1.twice - m1.twice) / 2;
    const int c = (j2.twice + m2.twice) / 2;
    const int d = (J.twice - j2.twice + m1.twice) / 2;
    const int e = (J.twice - j1.twice - m2.twice) / 2;

    using detail::factorial;
    const bool small = j1.twice + j2.twice + J.twice < 40;
    auto fact = [&](int n) { return small ? factorial(n) : std::exp(detail::log_factorial(n)); };

    const double pre = std::sqrt((J.twice + 1) * fact((J.twice + j1.twice - j2.twice) / 2) *
                                 fact((J.twice - j1.twice + j2.twice) / 2) * fact(a) /
                                 fact((j1.twice + j2.twice + J.twice) / 2 + 1)) *
                       std::sqrt(fact((J.twice + M.twice) / 2) * fact((J.twice - M.twice) / 2) * fact(b) *
                                 fact((j1.twice + m1.twice) / 2) * fact((j2.twice - m2.twice) / 2) * fact(c));

    const int k_min = std::max({0, -d, -e});
    const int k_max = std::min({a, b, c});
    double sum = 0.0;
    for (int k = k_min; k <= k_max; ++k) {
        const double term =
            1.0 / (fact(k) * fact(a - k) * fact(b - k) * fact(c - k) * fact(d + k) * fact(e + k));
        sum += (k % 2 == 0) ? term : -term;
    }
    return pre * sum;
}

inline double clebsch_gordan(double j1, double j2, double m1, double m2, double J, double M)
{
    return clebsch_gordan(HalfInt::from(j1), HalfInt::from(j2), HalfInt::from(m1), HalfInt::from(m2),
                          HalfInt::from(J), HalfInt::from(M));
}

} // namespace magcp

#endif // MAGCP_ANGULAR_MOMENTUM_HPP_

// Copyright 2026 The magcp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAGCP_SCAN_UNITS_HPP_
#define MAGCP_SCAN_UNITS_HPP_

#include <array>
#include <charconv>
#include <string>
#include <string_view>

#include "magcp/constants.hpp"
#include "magcp/errors.hpp"

namespace magcp::scan {

enum class Dimension { Length, Temperature, Frequency, Energy, Entropy };

inline std::string_view dimension_name(Dimension d)
{
    switch (d) {
    case Dimension::Length: return "length";
    case Dimension::Temperature: return "temperature";
    case Dimension::Frequency: return "frequency";
    case Dimension::Energy: return "energy";
    case Dimension::Entropy: return "entropy";
    }
    return "quantity";
}

/// Canonical SI unit written back by format_quantity.
inline std::string_view si_unit(Dimension d)
{
    switch (d) {
    case Dimension::Length: return "m";
    case Dimension::Temperature: return "K";
    case Dimension::Frequency: return "rad/s";
    case Dimension::Energy: return "J";
    case Dimension::Entropy: return "J/K";
    }
    return "";
}

namespace detail {

struct UnitEntry
{
    std::string_view symbol;
    Dimension dimension;
    double factor;
};

// Cyclic frequencies (Hz) enter as Omega/2pi and are scaled by 2pi.
inline constexpr std::array<UnitEntry, 22> kUnits = {{
    {"m", Dimension::Length, 1.0},
    {"cm", Dimension::Length, 1e-2},
    {"mm", Dimension::Length, 1e-3},
    {"um", Dimension::Length, 1e-6},
    {"µm", Dimension::Length, 1e-6},
    {"μm", Dimension::Length, 1e-6},
    {"nm", Dimension::Length, 1e-9},
    {"K", Dimension::Temperature, 1.0},
    {"mK", Dimension::Temperature, 1e-3},
    {"uK", Dimension::Temperature, 1e-6},
    {"µK", Dimension::Temperature, 1e-6},
    {"μK", Dimension::Temperature, 1e-6},
    {"nK", Dimension::Temperature, 1e-9},
    {"rad/s", Dimension::Frequency, 1.0},
    {"Hz", Dimension::Frequency, two_pi},
    {"kHz", Dimension::Frequency, two_pi * 1e3},
    {"MHz", Dimension::Frequency, two_pi * 1e6},
    {"GHz", Dimension::Frequency, two_pi * 1e9},
    {"THz", Dimension::Frequency, two_pi * 1e12},
    {"PHz", Dimension::Frequency, two_pi * 1e15},
    {"J", Dimension::Energy, 1.0},
    {"J/K", Dimension::Entropy, 1.0},
}};

inline std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

} // namespace detail

/// Parses "<number> <unit>" into SI (rad/s for frequencies). The unit is
/// mandatory and must match the expected dimension.
inline double parse_quantity(std::string_view text, Dimension expected)
{
    const std::string_view s = detail::trim(text);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{}) {
        throw ConfigError("cannot read a number from '" + std::string(text) + "'");
    }
    const std::string_view unit = detail::trim(s.substr(static_cast<std::size_t>(end - s.data())));
    if (unit.empty()) {
        throw ConfigError("'" + std::string(text) + "' needs a " + std::string(dimension_name(expected)) + " unit");
    }
    for (const auto& u : detail::kUnits) {
        if (u.symbol == unit) {
            if (u.dimension != expected) {
                throw ConfigError("'" + std::string(text) + "' is not a " + std::string(dimension_name(expected)));
            }
            return value * u.factor;
        }
    }
    throw ConfigError("unknown unit '" + std::string(unit) + "' in '" + std::string(text) + "'");
}

/// Shortest round-trip decimal form of an SI value with its canonical unit.
inline std::string format_quantity(double value, Dimension d)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr) + " " + std::string(si_unit(d));
}

} // namespace magcp::scan

#endif // MAGCP_SCAN_UNITS_HPP_

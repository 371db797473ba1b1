// Copyright 2026 The magcp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAGCP_ERRORS_HPP_
#define MAGCP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace magcp {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Quadrature or series failed to reach its tolerance within the node budget.
class NonConvergenceError : public std::runtime_error
{
public:
    NonConvergenceError(const std::string& what, double last_error_estimate)
        : std::runtime_error(what + " (last error estimate " + std::to_string(last_error_estimate) + ")"),
          last_error_(last_error_estimate)
    {
    }

    double last_error_estimate() const noexcept { return last_error_; }

private:
    double last_error_;
};

/// Real-axis polarizability evaluated too close to an atomic resonance.
class PoleError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Invalid scan configuration or preset name.
class ConfigError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace magcp

#endif // MAGCP_ERRORS_HPP_

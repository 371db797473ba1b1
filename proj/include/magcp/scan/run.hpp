// Copyright 2026 The magcp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAGCP_SCAN_RUN_HPP_
#define MAGCP_SCAN_RUN_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "magcp/asymptotes.hpp"
#include "magcp/entropy.hpp"
#include "magcp/free_energy.hpp"
#include "magcp/scan/config.hpp"

namespace magcp::scan {

struct AsymptoteEntry
{
    std::string name;
    std::optional<double> value; // J; empty where the form is undefined
    bool in_window = false;
    std::string window;
};

struct ScanRecord
{
    double L = 0.0; // m
    double T = 0.0; // K
    std::optional<FreeEnergyResult> F;
    std::optional<double> F_normalized;
    std::optional<EntropyResult> S;
    std::optional<double> S_normalized;
    std::vector<AsymptoteEntry> asymptotes;
    std::string error;

    bool ok() const { return error.empty(); }
};

/// Which optional column groups a table carries.
struct Columns
{
    bool breakdown = false;
    bool entropy = false;
    bool F_normalized = false;
    bool S_normalized = false;
    std::vector<std::string> asymptotes;
};

struct ScanTable
{
    Columns columns;
    std::vector<ScanRecord> records;

    std::size_t failures() const
    {
        return static_cast<std::size_t>(std::count_if(records.begin(), records.end(),
                                                       [](const ScanRecord& r) { return !r.ok(); }));
    }
};

using ProgressCallback = std::function<void(std::size_t done, std::size_t total)>;

namespace detail {

inline std::vector<AsymptoteKind> scan_asymptotes(const ScanConfig& cfg)
{
    if (!cfg.outputs.asymptotes) {
        return {};
    }
    return applicable_asymptotes(cfg.scenario);
}

inline void append_error(std::string& into, const std::string& what, const char* msg)
{
    if (!into.empty()) {
        into += "; ";
    }
    into += what + ": " + msg;
}

inline ScanRecord evaluate_point(const ScanConfig& cfg, double L, double T, const std::vector<AsymptoteKind>& kinds)
{
    ScanRecord r;
    r.L = L;
    r.T = T;
    const auto fe = free_energy_options(cfg.numerics);
    if (cfg.outputs.free_energy) {
        try {
            r.F = free_energy(L, T, cfg.scenario, fe);
            if (cfg.normalization.free_energy) {
                r.F_normalized = r.F->value / *cfg.normalization.free_energy;
            }
        } catch (const std::exception& e) {
            append_error(r.error, "free energy", e.what());
        }
    }
    if (cfg.outputs.entropy && T > 0.0) {
        try {
            r.S = entropy(L, T, cfg.scenario, fe);
            if (cfg.normalization.entropy) {
                r.S_normalized = r.S->value / *cfg.normalization.entropy;
            }
        } catch (const std::exception& e) {
            append_error(r.error, "entropy", e.what());
        }
    }
    if (!kinds.empty()) {
        const auto p = asymptote_params(L, T, std::get<TwoLevel>(cfg.scenario.atom), cfg.scenario.material);
        for (auto k : kinds) {
            AsymptoteEntry e{std::string(asymptote_name(k)), std::nullopt, false, {}};
            try {
                const auto v = fe_asymptote(k, p);
                e.value = v.value;
                e.in_window = v.in_window;
                e.window = v.window;
            } catch (const DomainError&) {
            }
            r.asymptotes.push_back(std::move(e));
        }
    }
    return r;
}

} // namespace detail

/// Grid points in output order: fixed values ascending, sweep ascending within each.
inline std::vector<std::pair<double, double>> scan_grid(const ScanConfig& cfg)
{
    auto fixed = cfg.fixed;
    std::sort(fixed.begin(), fixed.end());
    fixed.erase(std::unique(fixed.begin(), fixed.end()), fixed.end());
    std::vector<std::pair<double, double>> grid; // (L, T)
    for (double f : fixed) {
        for (double s : sweep_values(cfg.sweep)) {
            grid.emplace_back(cfg.sweep.axis == SweepAxis::Distance ? std::pair{s, f} : std::pair{f, s});
        }
    }
    return grid;
}

/// Evaluates every grid point on up to `workers` threads (0: one per core).
/// Failures are recorded per point; records come back in grid order
/// regardless of the worker count.
inline ScanTable run_scan(const ScanConfig& cfg, std::size_t workers = 1, const ProgressCallback& progress = {})
{
    validate(cfg);
    const auto grid = scan_grid(cfg);
    const auto kinds = detail::scan_asymptotes(cfg);

    ScanTable table;
    table.columns.breakdown = cfg.outputs.breakdown && cfg.outputs.free_energy;
    table.columns.entropy = cfg.outputs.entropy;
    table.columns.F_normalized = cfg.outputs.free_energy && cfg.normalization.free_energy.has_value();
    table.columns.S_normalized = cfg.outputs.entropy && cfg.normalization.entropy.has_value();
    for (auto k : kinds) {
        table.columns.asymptotes.emplace_back(asymptote_name(k));
    }
    table.records.resize(grid.size());

    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = std::min(workers, grid.size());
    std::atomic<std::size_t> next{0};
    std::size_t done = 0;
    std::mutex progress_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            table.records[i] = detail::evaluate_point(cfg, grid[i].first, grid[i].second, kinds);
            if (progress) {
                std::lock_guard lock(progress_mutex);
                progress(++done, grid.size());
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }
    return table;
}

} // namespace magcp::scan

#endif // MAGCP_SCAN_RUN_HPP_

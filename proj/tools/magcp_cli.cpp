// Copyright 2026 The magcp Authors
// SPDX-License-Identifier: Apache-2.0
//
// magcp: magnetic Casimir-Polder scans from the command line.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "magcp/magcp.hpp"
#include "magcp/scan.hpp"

namespace {

enum ExitCode : int { kOk = 0, kPointsFailed = 1, kConfigInvalid = 2, kOutputFailed = 3 };

struct RunFlags
{
    std::string config;
    std::string format = "csv";
    std::string out = "-";
    std::size_t workers = 0;
    std::optional<double> tolerance;
    std::optional<double> truncation_u;
};

void add_run_flags(CLI::App* cmd, RunFlags& f, bool with_config)
{
    if (with_config) {
        cmd->add_option("--config", f.config, "Scan configuration (YAML)")->required()->check(CLI::ExistingFile);
    }
    cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", f.out, "Output file, '-' for stdout");
    cmd->add_option("--workers", f.workers, "Worker threads, 0 for one per core");
    cmd->add_option("--tolerance", f.tolerance, "Relative quadrature tolerance");
    cmd->add_option("--truncation-u", f.truncation_u, "Matsubara truncation target u");
}

magcp::scan::ScanConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw magcp::ConfigError("cannot read '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return magcp::scan::parse_config(ss.str());
    } catch (const magcp::ConfigError& e) {
        throw magcp::ConfigError(path + ": " + e.what());
    }
}

int run(magcp::scan::ScanConfig cfg, const RunFlags& f)
{
    using namespace magcp::scan;
    Format format;
    ScanTable table;
    try {
        if (f.tolerance) {
            cfg.numerics.rel_tol = *f.tolerance;
        }
        if (f.truncation_u) {
            cfg.numerics.u = *f.truncation_u;
        }
        format = format_from_name(f.format);
        validate(cfg);
    } catch (const magcp::ConfigError& e) {
        std::cerr << "magcp: invalid configuration: " << e.what() << "\n";
        return kConfigInvalid;
    }

    table = run_scan(cfg, f.workers);
    try {
        emit(table, format, f.out);
    } catch (const OutputError& e) {
        std::cerr << "magcp: " << e.what() << "\n";
        return kOutputFailed;
    }

    const auto failed = table.failures();
    for (const auto& r : table.records) {
        if (!r.ok()) {
            std::fprintf(stderr, "magcp: L = %.6e m, T = %.6e K: %s\n", r.L, r.T, r.error.c_str());
        }
    }
    std::fprintf(stderr, "magcp: %zu points, %zu failed\n", table.records.size(), failed);
    return failed == 0 ? kOk : kPointsFailed;
}

// Quick health check of the installation.
int selftest()
{
    using namespace magcp;
    int failures = 0;
    auto check = [&](const char* name, bool ok, double value) {
        std::printf("%s %-32s %.6g\n", ok ? "PASS" : "FAIL", name, value);
        failures += ok ? 0 : 1;
    };

    const double LT = thermal_wavelength(1.0);
    check("thermal_wavelength_1K", std::abs(LT / 0.18e-3 - 1.0) < 0.02, LT);

    const Scenario pl{TwoLevel{scan::reference::Omega_m}, Plasma{scan::reference::omega_p}};
    const double F = free_energy_zero_temperature(1e-6, pl);
    check("plasma_1um_zero_temperature", std::abs(F / scan::reference::F_plasma_1um - 1.0) < 0.02, F);

    const TwoFluidSC sc{scan::reference::omega_p, scan::reference::gamma, 1.0};
    const auto a = magnetic_green_imag(1e-6, 1e12, sc, 0.0);
    const auto b = magnetic_green_imag(1e-6, 1e12, Plasma{sc.omega_p}, 0.0);
    check("two_fluid_zero_temperature", a.H_xx == b.H_xx && a.H_zz == b.H_zz, a.H_xx.real());

    double norm = 0.0;
    for (double m1 : {-1.5, -0.5, 0.5, 1.5}) {
        for (double m2 : {-0.5, 0.5}) {
            if (m1 + m2 == 0.0) {
                const double cg = clebsch_gordan(1.5, 0.5, m1, m2, 1.0, 0.0);
                norm += cg * cg;
            }
        }
    }
    check("clebsch_gordan_normalisation", std::abs(norm - 1.0) < 1e-12, norm);

    bool roundtrip = true;
    for (auto name : scan::kPresetNames) {
        const auto cfg = scan::figure_preset(name);
        roundtrip = roundtrip && scan::parse_config(scan::serialize_config(cfg)) == cfg;
    }
    check("preset_config_roundtrip", roundtrip, static_cast<double>(scan::kPresetNames.size()));

    return failures == 0 ? kOk : kPointsFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Magnetic Casimir-Polder free energy and entropy of an atom near a planar surface"};
    app.require_subcommand(1);

    RunFlags scan_flags;
    auto* scan_cmd = app.add_subcommand("scan", "Run the scan described by a configuration file");
    add_run_flags(scan_cmd, scan_flags, true);

    RunFlags preset_flags;
    std::string preset_name;
    bool print_config = false;
    bool list_presets = false;
    auto* preset_cmd = app.add_subcommand("preset", "Run or print a figure preset");
    preset_cmd->add_option("name", preset_name, "Preset name");
    preset_cmd->add_flag("--print-config", print_config, "Print the preset as a configuration file and exit");
    preset_cmd->add_flag("--list", list_presets, "List the preset names");
    add_run_flags(preset_cmd, preset_flags, false);

    RunFlags entropy_flags;
    auto* entropy_cmd = app.add_subcommand("entropy", "Run a configuration with the entropy column enabled");
    add_run_flags(entropy_cmd, entropy_flags, true);

    RunFlags asym_flags;
    auto* asym_cmd = app.add_subcommand("asymptote", "Evaluate only the closed-form asymptotes over a configuration's grid");
    add_run_flags(asym_cmd, asym_flags, true);

    app.add_subcommand("selftest", "Run quick consistency checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigInvalid;
    }

    try {
        if (*scan_cmd) {
            return run(load_config(scan_flags.config), scan_flags);
        }
        if (*preset_cmd) {
            if (list_presets) {
                for (auto n : magcp::scan::kPresetNames) {
                    std::cout << n << "\n";
                }
                return kOk;
            }
            if (preset_name.empty()) {
                std::cerr << "magcp: preset: a name is required (see --list)\n";
                return kConfigInvalid;
            }
            const auto cfg = magcp::scan::figure_preset(preset_name);
            if (print_config) {
                std::cout << magcp::scan::serialize_config(cfg);
                return kOk;
            }
            return run(cfg, preset_flags);
        }
        if (*entropy_cmd) {
            auto cfg = load_config(entropy_flags.config);
            cfg.outputs.entropy = true;
            return run(cfg, entropy_flags);
        }
        if (*asym_cmd) {
            auto cfg = load_config(asym_flags.config);
            cfg.outputs = {false, false, false, true};
            return run(cfg, asym_flags);
        }
        return selftest();
    } catch (const magcp::ConfigError& e) {
        std::cerr << "magcp: invalid configuration: " << e.what() << "\n";
        return kConfigInvalid;
    } catch (const std::exception& e) {
        std::cerr << "magcp: " << e.what() << "\n";
        return kOutputFailed;
    }
}

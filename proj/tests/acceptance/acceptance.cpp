// Copyright 2026 The magcp Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "magcp/magcp.hpp"
#include "magcp/scan.hpp"
#include "support/spin_oracle.hpp"

using namespace magcp;

namespace {

const double kOmegaP = scan::reference::omega_p;
const double kGamma = scan::reference::gamma;
const double kOmegaM = scan::reference::Omega_m;
const double kTm = frequency_to_temperature(kOmegaM);
const TwoLevel kAtom{kOmegaM};
const Plasma kPlasma{kOmegaP};
const Drude kDrude{kOmegaP, kGamma};

struct Outcome
{
    bool pass = false;
    std::string detail;
};

int g_failures = 0;

void criterion(int id, const char* name, double time_limit_s, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = time_limit_s <= 0.0 || dt < time_limit_s;
    const bool pass = o.pass && in_time;
    g_failures += pass ? 0 : 1;
    std::string limit = time_limit_s > 0.0 ? " limit " + std::to_string(static_cast<int>(time_limit_s)) + " s" : "";
    std::printf("%s %2d %-34s %s [%.2f s%s%s]\n", pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), dt,
                limit.c_str(), in_time ? "" : ", too slow");
    std::fflush(stdout);
}

std::string fmt(const char* f, double a)
{
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

bool within(double ratio, double tol) { return std::abs(ratio - 1.0) <= tol; }

AsymptoteParams params(double L, double T, const MaterialModel& m) { return asymptote_params(L, T, kAtom, m); }

// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<double> log_grid(double lo, double hi, int n)
{
    std::vector<double> v;
    for (int i = 0; i < n; ++i) {
        v.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    }
    return v;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main()
{
    std::setvbuf(stdout, nullptr, _IOLBF, 0);
    const Scenario plasma{kAtom, kPlasma};
    const Scenario drude{kAtom, kDrude};

    criterion(1, "plasma_reference_energy", 5.0, [&] {
        const double F = free_energy_equilibrium(1e-6, 0.0, plasma).value;
        const double r = F / scan::reference::F_plasma_1um;
        return Outcome{within(r, 0.02), fmt("F = %.4e J", F) + fmt(", ratio %.5f (tol 0.02)", r)};
    });

    criterion(2, "drude_ground_state_reference", 5.0, [&] {
        const Scenario sc{kAtom, kDrude, Mode::StateResolved};
        const double F = free_energy(1e-6, 0.0, sc).value;
        const double r = F / scan::reference::F_drude_state_1um;
        return Outcome{within(r, 0.05), fmt("F = %.4e J", F) + fmt(", ratio %.5f (tol 0.05)", r)};
    });

    criterion(3, "non_retarded_asymptote", 30.0, [&] {
        const double lo = 10.0 * plasma_wavelength(kOmegaP);
        const double hi = photon_wavelength(kOmegaM) / 100.0;
        const double mid = std::sqrt(lo * hi);
        bool ok = true;
        std::string d = "central-decade ratios";
        for (double L : log_grid(lo, hi, 9)) {
            const double r = free_energy_equilibrium(L, 0.0, plasma).value /
                             fe_asymptote(AsymptoteKind::NonRetarded, params(L, 0.0, kPlasma)).value;
            if (std::abs(std::log10(L / mid)) <= 0.5 + 1e-12) {
                ok = ok && r >= 0.95 && r <= 1.05;
                d += fmt(" %.4f", r);
            }
        }
        return Outcome{ok, d + " (range [0.95, 1.05])"};
    });

    criterion(4, "retarded_asymptote", 30.0, [&] {
        const double L = 10.0 * photon_wavelength(kOmegaM);
        const double ref = fe_asymptote(AsymptoteKind::Retarded, params(L, 0.0, kPlasma)).value;
        const double Fp = free_energy_equilibrium(L, 0.0, plasma).value;
        const double Fd = free_energy_equilibrium(L, 0.0, drude).value;
        const double rp = Fp / ref;
        const double rd = Fd / ref;
        const double agree = std::abs(Fp / Fd - 1.0);
        const bool ok = rp >= 0.9 && rp <= 1.1 && rd >= 0.9 && rd <= 1.1 && agree < 0.01;
        return Outcome{ok, fmt("plasma %.5f", rp) + fmt(", drude %.5f", rd) + fmt(", |plasma/drude - 1| %.2e", agree)};
    });

    criterion(5, "drude_inverse_square_temperature", 60.0, [&] {
        std::vector<double> x, y;
        for (double T : log_grid(10.0 * kTm, 100.0 * kTm, 5)) {
            x.push_back(std::log(T));
            y.push_back(std::log(free_energy_equilibrium(1e-6, T, drude).value));
        }
        const double s = fit_slope(x, y);
        return Outcome{std::abs(s + 2.0) <= 0.1, fmt("slope %.4f (target -2.0 +- 0.1)", s)};
    });

    criterion(6, "thermal_decoupling", 60.0, [&] {
        const double T = 300.0;
        const double LT = thermal_wavelength(T);
        std::vector<double> x, y;
        for (int i = 0; i < 5; ++i) {
            const double L = LT * (2.0 + 0.5 * i);
            x.push_back(-L / LT);
            y.push_back(std::log(free_energy_equilibrium(L, T, drude).value));
        }
        const double s = fit_slope(x, y);
        return Outcome{std::abs(s - 1.0) <= 0.15, fmt("slope %.4f (target 1 +- 0.15)", s)};
    });

    criterion(7, "plasma_thermal_plateau", 10.0, [&] {
        const double T = 300.0;
        const double L = 10.0 * thermal_wavelength(T);
        const double r = free_energy_equilibrium(L, T, plasma).value /
                         fe_asymptote(AsymptoteKind::NonRetarded, params(L, T, kPlasma)).value;
        return Outcome{within(r, 0.05), fmt("ratio %.5f (tol 0.05)", r)};
    });

    criterion(8, "two_fluid_limits", 0.0, [&] {
        const double Tc = 1.0;
        const TwoFluidSC sc{kOmegaP, kGamma, Tc};
        const auto r0 = response_at(sc, 0.0);
        const auto rp = response_at(kPlasma, 0.0);
        bool exact = r0.omega_p == rp.omega_p && r0.eta == rp.eta && r0.gamma == rp.gamma && r0.perfect == rp.perfect;
        std::mt19937_64 rng(20260415);
        std::uniform_real_distribution<double> logL(-8.0, -2.0);
        std::uniform_real_distribution<double> logXi(6.0, 17.0);
        double worst = 0.0;
        for (int i = 0; i < 5; ++i) {
            const double L = std::pow(10.0, logL(rng));
            const double xi = std::pow(10.0, logXi(rng));
            const auto a = magnetic_green_imag(L, xi, sc, 0.0);
            const auto b = magnetic_green_imag(L, xi, kPlasma, 0.0);
            exact = exact && a.H_xx == b.H_xx && a.H_zz == b.H_zz;
            const auto c = magnetic_green_imag(L, xi, sc, 1.01 * Tc);
            const auto d = magnetic_green_imag(L, xi, kDrude, 1.01 * Tc);
            worst = std::max({worst, std::abs(c.H_xx / d.H_xx - 1.0), std::abs(c.H_zz / d.H_zz - 1.0)});
        }
        const Scenario s_sc{kAtom, sc};
        const double F0 = free_energy_equilibrium(1e-6, 0.0, s_sc).value;
        exact = exact && F0 == free_energy_equilibrium(1e-6, 0.0, plasma).value;
        const double Fn = free_energy_equilibrium(1e-6, 1.01 * Tc, s_sc).value;
        worst = std::max(worst, std::abs(Fn / free_energy_equilibrium(1e-6, 1.01 * Tc, drude).value - 1.0));
        return Outcome{exact && worst <= 1e-10,
                       std::string(exact ? "T = 0 identical to plasma" : "T = 0 differs from plasma") +
                           fmt(", max |rel diff| vs Drude above Tc %.2e (tol 1e-10)", worst)};
    });

    criterion(9, "entropy_defect", 120.0, [&] {
        const PerfectCrystal crystal{kOmegaP, kGamma, 300.0, 2.0};
        const Scenario sc{kAtom, crystal};
        const double L = 10.0 * plasma_wavelength(kOmegaP);
        FreeEnergyOptions fe;
        fe.u = 1e-3;
        const std::vector<double> T = {kTm / 30.0, kTm / 100.0, kTm / 300.0};
        std::vector<double> S;
        for (double t : T) {
            S.push_back(entropy(L, t, sc, fe).value);
        }
        // Quadratic through the three points, evaluated at T = 0.
        double S0 = 0.0;
        for (int i = 0; i < 3; ++i) {
            double w = 1.0;
            for (int j = 0; j < 3; ++j) {
                if (j != i) {
                    w *= (0.0 - T[j]) / (T[i] - T[j]);
                }
            }
            S0 += w * S[i];
        }
        const double ref = entropy_defect(L, kAtom, kOmegaP, DefectForm::ClosedForm);
        const double r = S0 / ref;
        return Outcome{within(r, 0.05), fmt("S(0) = %.4e J/K", S0) + fmt(", ratio %.5f (tol 0.05)", r)};
    });

    criterion(10, "superconductor_entropy_peak", 120.0, [&] {
        const double Tc = 1.0;
        const Scenario sc{kAtom, TwoFluidSC{kOmegaP, kGamma, Tc}};
        const double base = std::abs(entropy(1e-6, 0.5 * Tc, sc).value);
        double peak = 0.0;
        for (double t : {0.9, 0.95, 0.99, 0.999, 1.0, 1.01, 1.05, 1.1}) {
            peak = std::max(peak, std::abs(entropy(1e-6, t * Tc, sc).value));
        }
        return Outcome{peak > 10.0 * base, fmt("max|S| near Tc %.3e", peak) + fmt(", |S(0.5 Tc)| %.3e", base)};
    });

    criterion(11, "negative_entropy", 120.0, [&] {
        const double L = 1e-3;
        const double TL = phys::hbar * phys::c / (4.0 * pi * phys::kB * L);
        double lowest = INFINITY;
        for (double T : log_grid(1.05 * kTm, 0.95 * TL, 8)) {
            lowest = std::min(lowest, entropy(L, T, plasma).value);
        }
        return Outcome{lowest < 0.0, fmt("min S = %.3e J/K", lowest)};
    });

    criterion(12, "matsubara_brute_force", 120.0, [&] {
        const double L = 1e-6;
        const double T = 300.0;
        const double F = free_energy_equilibrium(L, T, drude).value;
        const auto atom = AtomResponse::thermal(kAtom, T);
        const double xi1 = matsubara_spacing(T);
        double sum = 0.0;
        for (int n = 1000000; n >= 0; --n) {
            const auto H = magnetic_green_imag(L, n * xi1, kDrude, T);
            const double term = contract(atom.at_imag(n * xi1), H, Geometry::Anisotropic).real();
            sum += n == 0 ? 0.5 * term : term;
        }
        const double brute = -phys::kB * T * sum;
        const double d = std::abs(F / brute - 1.0);
        return Outcome{d <= 1e-5, fmt("|truncated / brute - 1| = %.2e (tol 1e-5)", d)};
    });

    criterion(13, "matrix_elements", 0.0, [&] {
        const auto states = oracle::coupled_states(1.5, 0.5);
        double worst = 0.0;
        for (const auto& [key, v] : states) {
            Eigen::VectorXcd cg = Eigen::VectorXcd::Zero(8);
            for (int i1 = 0; i1 < 4; ++i1) {
                for (int i2 = 0; i2 < 2; ++i2) {
                    cg(i1 * 2 + i2) = clebsch_gordan(1.5, 0.5, 1.5 - i1, 0.5 - i2, 0.5 * key.first, 0.5 * key.second);
                }
            }
            const cdouble overlap = v.dot(cg);
            const Eigen::VectorXcd aligned = v * (overlap / std::abs(overlap));
            worst = std::max(worst, (aligned - cg).cwiseAbs().maxCoeff());
        }
        const auto t = transition_table(kAtom).front();
        const double mu2 = std::pow(phys::gS * phys::muB / 2.0, 2);
        const bool exact = std::norm(t.mu_x) == mu2 && std::norm(t.mu_y) == mu2;
        return Outcome{states.size() == 8 && worst <= 1e-12 && exact,
                       fmt("%.0f coupled states", static_cast<double>(states.size())) +
                           fmt(", max |CG - oracle| %.2e", worst) +
                           (exact ? ", two-level |mu|^2 exact" : ", two-level |mu|^2 differs")};
    });

    criterion(14, "non_equilibrium_sign_flip", 30.0, [&] {
        const Scenario sc{kAtom, kDrude, Mode::StateResolved};
        const double F0 = free_energy(1e-6, 0.0, sc).value;
        const double Fh = free_energy(1e-6, 100.0 * kTm, sc).value;
        return Outcome{F0 > 0.0 && Fh < 0.0, fmt("F(0) = %.3e J", F0) + fmt(", F(100 T_m) = %.3e J", Fh)};
    });

    criterion(15, "scan_determinism", 0.0, [&] {
        const auto cfg = scan::figure_preset("fig1_bottom");
        const auto dir = std::filesystem::temp_directory_path();
        const auto a = dir / "magcp_acceptance_w1.csv";
        const auto b = dir / "magcp_acceptance_w8.csv";
        scan::emit(scan::run_scan(cfg, 1), scan::Format::Csv, a.string());
        scan::emit(scan::run_scan(cfg, 8), scan::Format::Csv, b.string());
        const auto ta = slurp(a);
        const auto tb = slurp(b);
        std::filesystem::remove(a);
        std::filesystem::remove(b);
        return Outcome{!ta.empty() && ta == tb,
                       fmt("%.0f bytes", static_cast<double>(ta.size())) + (ta == tb ? ", identical" : ", differ")};
    });

    // Rb-87 |1,-1> signs, reported for reference only.
    const Rb87Hyperfine rb{scan::reference::Omega_hf, kOmegaM, {1, -1}};
    for (const auto& [label, model, T] : {std::tuple{"drude T=0", MaterialModel{kDrude}, 0.0},
                                          std::tuple{"drude T=300K", MaterialModel{kDrude}, 300.0},
                                          std::tuple{"plasma T=300K", MaterialModel{kPlasma}, 300.0}}) {
        const double F = free_energy(1e-6, T, Scenario{rb, model, Mode::StateResolved}).value;
        std::printf("INFO rb87 |1,-1> L=1um %-14s F = %+.3e J (%s)\n", label, F, F > 0.0 ? "repulsive" : "attractive");
    }

    std::printf("%d criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}

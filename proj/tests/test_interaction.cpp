// Copyright 2026 The magcp Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "magcp/asymptotes.hpp"
#include "magcp/entropy.hpp"
#include "magcp/free_energy.hpp"
#include "magcp/length_scales.hpp"
#include "magcp/matsubara.hpp"

using namespace magcp;

namespace {

const double kOmegaP = hz_to_rad_per_s(1.42e15);
const double kGamma = 0.01 * kOmegaP;
const double kOmegaM = hz_to_rad_per_s(480e6);
const double kOmegaHf = hz_to_rad_per_s(6.834682610904e9);
const double kTm = frequency_to_temperature(kOmegaM);
const double kLambdaP = plasma_wavelength(kOmegaP);
const double kLambdaM = photon_wavelength(kOmegaM);
const TwoLevel kAtom{kOmegaM};

const Scenario kPlasma{kAtom, Plasma{kOmegaP}};
const Scenario kDrude{kAtom, Drude{kOmegaP, kGamma}};

Scenario state_resolved(Scenario sc)
{
    sc.mode = Mode::StateResolved;
    return sc;
}

FreeEnergyOptions coarse(double u = 1e-4)
{
    FreeEnergyOptions o;
    o.u = u;
    return o;
}

AsymptoteParams params(double L, double T, const MaterialModel& m) { return asymptote_params(L, T, kAtom, m); }

double mu_x2() { return std::pow(phys::gS * phys::muB / 2.0, 2); }

} // namespace

// ---------------------------------------------------------------------------
// Truncated Matsubara sums
// ---------------------------------------------------------------------------

TEST(MatsubaraSum, LorentzianSeriesWithRemainder)
{
    // sum' 1/(n^2 + a^2) over n >= 0 = (pi / 2a) coth(pi a)
    const double a = 7.5;
    auto g = [&](double n) { return 1.0 / (n * n + a * a); };
    const double exact = pi / (2.0 * a) / std::tanh(pi * a);
    for (double u : {1e-3, 1e-4, 1e-5}) {
        TruncationOptions o;
        o.u = u;
        const auto s = matsubara_sum(g, 1.0, 1e300, o);
        EXPECT_NEAR(s.value / exact, 1.0, 1e-7) << "u = " << u;
        // N g(N) ~ 1/N for this tail.
        EXPECT_NEAR(s.terms * u * exact, 1.0, 0.05);
    }
}

TEST(MatsubaraSum, ExponentialSeries)
{
    const double q = 0.3;
    auto g = [&](double n) { return std::exp(-q * n); };
    const double exact = 1.0 / (1.0 - std::exp(-q)) - 0.5;
    const auto s = matsubara_sum(g, 1.0, 1.0 / q);
    EXPECT_NEAR(s.value / exact, 1.0, 1e-8);
}

TEST(MatsubaraSum, ForcedTermCountAndExactZeroTail)
{
    auto g = [](double n) { return n < 3.5 ? 1.0 / (1.0 + n) : 0.0; };
    TruncationOptions o;
    o.forced_terms = 3;
    const auto s = matsubara_sum(g, 1.0, 1.0, o);
    EXPECT_EQ(s.terms, 3u);
    const auto free = matsubara_sum(g, 1.0, 1.0);
    EXPECT_EQ(free.terms, 4u);
    EXPECT_EQ(free.remainder, 0.0);
    EXPECT_DOUBLE_EQ(free.value, 0.5 + 0.5 + 1.0 / 3.0 + 0.25);
}

TEST(MatsubaraSum, DropsZeroTermOnRequest)
{
    auto g = [](double n) { return std::exp(-n); };
    TruncationOptions o;
    o.include_zero = false;
    const auto s = matsubara_sum(g, 1.0, 1.0, o);
    EXPECT_NEAR(s.value / (1.0 / (std::exp(1.0) - 1.0)), 1.0, 1e-7);
}

TEST(MatsubaraSum, TermCapThrows)
{
    auto g = [](double n) { return 1.0 / (1.0 + n); };
    TruncationOptions o;
    o.max_terms = 100;
    EXPECT_THROW(matsubara_sum(g, 1.0, 1e300, o), NonConvergenceError);
    o.u = 0.0;
    EXPECT_THROW(matsubara_sum(g, 1.0, 1.0, o), DomainError);
}

// ---------------------------------------------------------------------------
// Free energies
// ---------------------------------------------------------------------------

TEST(ZeroTemperature, PlasmaNormalization)
{
    EXPECT_NEAR(free_energy_zero_temperature(1e-6, kPlasma) / 9.79e-37, 1.0, 0.02);
}

TEST(ZeroTemperature, DrudeNormalization)
{
    EXPECT_NEAR(free_energy_zero_temperature(1e-6, kDrude) / 2.56e-38, 1.0, 0.05);
}

TEST(ZeroTemperature, PerfectMirrorMatchesDirectIntegral)
{
    // -(hbar/2pi) int 2 beta(i xi) H_xx(i xi) with H_xx = -(mu0/32 pi L^3)(1 + 2x + 4x^2) e^{-2x},
    // evaluated by composite Simpson in t = atan(xi / Omega).
    const double L = 0.5 * kLambdaM;
    const Scenario sc{kAtom, PerfectConductor{}};
    const double m2 = mu_x2();
    auto f = [&](double t) {
        const double xi = kOmegaM * std::tan(t);
        const double x = xi * L / phys::c;
        const double beta = 2.0 * m2 * kOmegaM / (phys::hbar * (kOmegaM * kOmegaM + xi * xi));
        const double H = -phys::mu0 / (32.0 * pi * L * L * L) * (1.0 + 2.0 * x + 4.0 * x * x) * std::exp(-2.0 * x);
        const double jac = kOmegaM / std::pow(std::cos(t), 2);
        return 2.0 * beta * H * jac;
    };
    const int n = 200000;
    const double b = 0.5 * pi - 1e-9;
    const double h = b / n;
    double s = f(0.0) + f(b);
    for (int i = 1; i < n; ++i) {
        s += (i % 2 ? 4.0 : 2.0) * f(i * h);
    }
    const double oracle = -phys::hbar / two_pi * s * h / 3.0;
    EXPECT_NEAR(free_energy_zero_temperature(L, sc) / oracle, 1.0, 1e-6);
}

TEST(ZeroTemperature, MatchesLowTemperatureSum)
{
    const auto r = free_energy_equilibrium(1e-6, 1e-3, kPlasma, coarse(1e-5));
    EXPECT_FALSE(r.zero_temperature_path);
    EXPECT_NEAR(r.value / free_energy_zero_temperature(1e-6, kPlasma), 1.0, 5e-3);
}

TEST(ZeroTemperature, VeryLowTemperatureDelegates)
{
    const auto r = free_energy_equilibrium(1e-6, 1e-7, kPlasma);
    EXPECT_TRUE(r.zero_temperature_path);
    EXPECT_NEAR(r.value / free_energy_zero_temperature(1e-6, kPlasma), 1.0, 1e-6);
    const auto t0 = free_energy_equilibrium(1e-6, 0.0, kPlasma);
    EXPECT_TRUE(t0.zero_temperature_path);
    EXPECT_EQ(t0.value, free_energy_zero_temperature(1e-6, kPlasma));
}

TEST(Equilibrium, BreakdownFields)
{
    const auto r = free_energy_equilibrium(1e-6, 300.0, kDrude);
    EXPECT_EQ(r.resonant, 0.0);
    EXPECT_EQ(r.value, r.nonresonant + r.resonant);
    EXPECT_GT(r.N_terms, 0u);
    EXPECT_EQ(r.truncation_u, 1e-6);
}

TEST(Equilibrium, BruteForceSummation)
{
    const double L = 1e-6;
    const double T = 300.0;
    const auto r = free_energy_equilibrium(L, T, kDrude);
    const auto atom = AtomResponse::thermal(kAtom, T);
    const double xi1 = matsubara_spacing(T);
    double sum = 0.0;
    for (int n = 1000000; n >= 0; --n) {
        const auto H = magnetic_green_imag(L, n * xi1, kDrude.material, T);
        const double term = contract(atom.at_imag(n * xi1), H, Geometry::Anisotropic).real();
        sum += n == 0 ? 0.5 * term : term;
    }
    const double brute = -phys::kB * T * sum;
    EXPECT_NEAR(r.value / brute, 1.0, 1e-5);
}

TEST(Equilibrium, ThermalDecoupling)
{
    const double T = 300.0;
    const double L = 10.0 * thermal_wavelength(T);
    const double drude = free_energy_equilibrium(L, T, kDrude).value;
    const double plasma = free_energy_equilibrium(L, T, kPlasma).value;
    EXPECT_GT(plasma / std::abs(drude), 1e2);
}

TEST(Equilibrium, PlasmaThermalPlateau)
{
    const double T = 300.0;
    const double L = 10.0 * thermal_wavelength(T);
    const double F = free_energy_equilibrium(L, T, kPlasma).value;
    EXPECT_NEAR(F / fe_asymptote(AsymptoteKind::NonRetarded, params(L, T, kPlasma.material)).value, 1.0, 0.05);
    EXPECT_NEAR(F / fe_asymptote(AsymptoteKind::Keesom, params(L, T, kPlasma.material)).value, 1.0, 0.01);
}

TEST(Equilibrium, RepulsiveOnGrid)
{
    for (const auto& sc : {kPlasma, kDrude}) {
        for (double L : {1e-6, 1e-5, 1e-4}) {
            for (double T : {0.0, kTm, 30.0 * kTm, 300.0}) {
                EXPECT_GE(free_energy_equilibrium(L, T, sc, coarse()).value, 0.0)
                    << model_name(sc.material) << " L=" << L << " T=" << T;
            }
        }
    }
}

TEST(Equilibrium, IsotropicGeometry)
{
    Scenario iso = kPlasma;
    iso.geometry = Geometry::Isotropic;
    const double L = 100.0 * kLambdaP;
    const double aniso = free_energy_zero_temperature(L, kPlasma);
    // Non-retarded: H_zz = 2 H_xx, so (2 beta)(4 H_xx)/3 against 2 beta H_xx.
    EXPECT_NEAR(free_energy_zero_temperature(L, iso) / aniso, 4.0 / 3.0, 0.01);
}

TEST(Equilibrium, TwoFluidLimitsMatchPlasmaAndDrude)
{
    const Scenario sc{kAtom, TwoFluidSC{kOmegaP, kGamma, 1.0}};
    EXPECT_EQ(free_energy_zero_temperature(1e-6, sc), free_energy_zero_temperature(1e-6, kPlasma));
    const double T = 1.01;
    const double a = free_energy_equilibrium(1e-6, T, sc).value;
    const double b = free_energy_equilibrium(1e-6, T, kDrude).value;
    EXPECT_NEAR(a / b, 1.0, 1e-10);
}

TEST(Equilibrium, MatchesBoltzmannAverageOfStates)
{
    // The resonant terms cancel in the thermal average over levels.
    const double L = 1e-6;
    for (double T : {0.5 * kTm, 3.0 * kTm}) {
        Scenario g = state_resolved(kPlasma);
        Scenario e = g;
        e.atom = TwoLevel{kOmegaM, true};
        const double x = phys::hbar * kOmegaM / (phys::kB * T);
        const double pg = 1.0 / (1.0 + std::exp(-x));
        const double avg = pg * free_energy_state(L, T, g, coarse(1e-6)).value +
                           (1.0 - pg) * free_energy_state(L, T, e, coarse(1e-6)).value;
        EXPECT_NEAR(free_energy_equilibrium(L, T, kPlasma, coarse(1e-6)).value / avg, 1.0, 1e-6) << T;
    }
}

TEST(Equilibrium, MatchesBoltzmannAverageOfRb87States)
{
    const double L = 1e-6;
    const double T = 0.2;
    Rb87Hyperfine rb{kOmegaHf, kOmegaM};
    const Scenario eq{rb, Drude{kOmegaP, kGamma}};
    const auto sys = level_system(rb);
    const auto p = boltzmann_weights(sys, T);
    double avg = 0.0;
    for (std::size_t a = 0; a < sys.size(); ++a) {
        const int F = sys.labels[a][1] - '0';
        const int mF = std::stoi(sys.labels[a].substr(3));
        Scenario st = state_resolved(eq);
        st.atom = Rb87Hyperfine{kOmegaHf, kOmegaM, {F, mF}};
        avg += p[a] * free_energy_state(L, T, st, coarse(1e-6)).value;
    }
    EXPECT_NEAR(free_energy_equilibrium(L, T, eq, coarse(1e-6)).value / avg, 1.0, 1e-6);
}

TEST(Equilibrium, Errors)
{
    EXPECT_THROW(free_energy_equilibrium(0.0, 1.0, kPlasma), DomainError);
    EXPECT_THROW(free_energy_equilibrium(1e-6, -1.0, kPlasma), DomainError);
    EXPECT_THROW(free_energy_equilibrium(1e-6, 1.0, state_resolved(kPlasma)), DomainError);
    Scenario iso{Rb87Hyperfine{kOmegaHf, kOmegaM}, Plasma{kOmegaP}, Mode::Equilibrium, Geometry::Isotropic};
    EXPECT_THROW(free_energy_equilibrium(1e-6, 1.0, iso), DomainError);
    FreeEnergyOptions o;
    o.max_terms = 10;
    EXPECT_THROW(free_energy_equilibrium(1e-6, 10.0 * kTm, kDrude, o), NonConvergenceError);
}

// ---------------------------------------------------------------------------
// State-resolved free energies
// ---------------------------------------------------------------------------

TEST(StateResolved, GroundStateHasNoResonantPartAtZeroTemperature)
{
    const auto r = free_energy_state(1e-6, 0.0, state_resolved(kDrude));
    EXPECT_EQ(r.resonant, 0.0);
    EXPECT_NEAR(r.value / free_energy_zero_temperature(1e-6, kDrude), 1.0, 1e-12);
}

TEST(StateResolved, DrudeGroundStateTurnsAttractive)
{
    const auto sc = state_resolved(kDrude);
    EXPECT_GT(free_energy_state(1e-6, 0.0, sc).value, 0.0);
    EXPECT_LT(free_energy_state(1e-6, 100.0 * kTm, sc, coarse()).value, 0.0);
}

TEST(StateResolved, PlasmaHighTemperatureKeepsZeroTemperatureValue)
{
    const double L = 100.0 * kLambdaP;
    const double T = 100.0 * kTm;
    const auto sc = state_resolved(kPlasma);
    const double F = free_energy_state(L, T, sc, coarse()).value;
    const double nr = fe_asymptote(AsymptoteKind::StatePlasmaNonRetarded, params(L, T, kPlasma.material)).value;
    EXPECT_NEAR(F / nr, 1.0, 0.03);
    // The resonant line is a small difference of two large static terms.
    const auto h = free_energy_state_highT(L, T, sc, coarse());
    const double H0 = magnetic_green_imag(L, 0.0, kPlasma.material, T).H_xx.real();
    const double subtracted = phys::kB * T * 2.0 * mu_x2() / (phys::hbar * kOmegaM) * std::abs(H0);
    EXPECT_LT(std::abs(h.resonant), 1e-4 * subtracted);
}

TEST(StateResolved, HighTemperatureFormAgrees)
{
    const double T = frequency_to_temperature(50.0 * kOmegaM);
    const auto sc = state_resolved(kDrude);
    const double full = free_energy_state(1e-6, T, sc, coarse()).value;
    const double high = free_energy_state_highT(1e-6, T, sc, coarse()).value;
    EXPECT_NEAR(high / full, 1.0, 0.03);
}

TEST(StateResolved, RetardedPlasmaOscillation)
{
    const double T = 300.0;
    const auto sc = state_resolved(kPlasma);
    for (double f : {1.0, 1.6, 2.5}) {
        const double L = f * kLambdaM;
        const double r = free_energy_state_highT(L, T, sc, coarse()).resonant;
        const double form = fe_asymptote(AsymptoteKind::StatePlasmaRetarded, params(L, T, kPlasma.material)).value;
        EXPECT_NEAR(r / form, 1.0, 0.05) << f;
    }
}

TEST(StateResolved, Rb87ResonantSignStructure)
{
    Scenario sc{Rb87Hyperfine{kOmegaHf, kOmegaM}, Drude{kOmegaP, kGamma}, Mode::StateResolved};
    const auto terms = resonant_terms_highT(1e-5, 300.0, sc);
    ASSERT_FALSE(terms.empty());
    bool up = false;
    bool down = false;
    for (const auto& t : terms) {
        EXPECT_EQ(t.prefactor > 0.0, t.omega_ba > 0.0);
        up |= t.omega_ba > 0.0;
        down |= t.omega_ba < 0.0;
    }
    EXPECT_TRUE(up);
    EXPECT_TRUE(down);
    const auto h = free_energy_state_highT(1e-5, 300.0, sc);
    double sum = 0.0;
    for (const auto& t : terms) {
        sum += t.value;
    }
    EXPECT_NEAR(h.resonant / sum, 1.0, 1e-12);
}

TEST(StateResolved, Errors)
{
    EXPECT_THROW(free_energy_state(1e-6, 1.0, kPlasma), DomainError);
    EXPECT_THROW(free_energy_state_highT(1e-6, 0.0, state_resolved(kPlasma)), DomainError);
}

// ---------------------------------------------------------------------------
// Asymptotes
// ---------------------------------------------------------------------------

TEST(Asymptotes, ClosedForms)
{
    const double L = 2e-6;
    const auto p = params(L, 0.0, kPlasma.material);
    const double m2 = mu_x2();
    EXPECT_DOUBLE_EQ(fe_asymptote(AsymptoteKind::NonRetarded, p).value, phys::mu0 * m2 / (32.0 * pi * std::pow(L, 3)));
    EXPECT_DOUBLE_EQ(fe_asymptote(AsymptoteKind::Retarded, p).value,
                     phys::mu0 * m2 * kLambdaM / (16.0 * std::pow(pi, 3) * std::pow(L, 4)));
    auto pd = params(L, 5.0 * kTm, kDrude.material);
    EXPECT_DOUBLE_EQ(fe_asymptote(AsymptoteKind::DrudeNonRetardedThermal, pd).value,
                     phys::mu0 * m2 / (384.0 * pi * std::pow(L, 3)) / 25.0);
    EXPECT_THROW(fe_asymptote(AsymptoteKind::SubSkinDepthDrude, p), DomainError);
    EXPECT_THROW(fe_asymptote(AsymptoteKind::Keesom, p), DomainError);
}

TEST(Asymptotes, Names)
{
    for (auto k : kAllAsymptotes) {
        EXPECT_EQ(asymptote_from_name(asymptote_name(k)), k);
    }
    EXPECT_THROW(asymptote_from_name("nope"), DomainError);
}

TEST(Asymptotes, NonRetardedWindow)
{
    // Two decades inside [lambda_p, lambda_m].
    for (double L : {100.0 * kLambdaP, 1e-4, kLambdaM / 100.0}) {
        const auto a = fe_asymptote(AsymptoteKind::NonRetarded, params(L, 0.0, kPlasma.material));
        EXPECT_TRUE(a.in_window);
        const double ratio = free_energy_zero_temperature(L, kPlasma) / a.value;
        EXPECT_GE(ratio, 0.95) << L;
        EXPECT_LE(ratio, 1.05) << L;
    }
}

TEST(Asymptotes, RetardedWindow)
{
    for (double L : {100.0 * kLambdaM}) {
        const auto a = fe_asymptote(AsymptoteKind::Retarded, params(L, 0.0, kPlasma.material));
        EXPECT_TRUE(a.in_window);
        for (const auto& sc : {kPlasma, kDrude}) {
            const double ratio = free_energy_zero_temperature(L, sc) / a.value;
            EXPECT_GE(ratio, 0.95);
            EXPECT_LE(ratio, 1.05);
        }
    }
}

TEST(Asymptotes, SubSkinDepthPlasmaWindow)
{
    const double L = kLambdaP / (two_pi * 100.0);
    const auto a = fe_asymptote(AsymptoteKind::SubSkinDepthPlasma, params(L, 0.0, kPlasma.material));
    EXPECT_TRUE(a.in_window);
    const double ratio = free_energy_zero_temperature(L, kPlasma) / a.value;
    EXPECT_GE(ratio, 0.95);
    EXPECT_LE(ratio, 1.05);
}

TEST(Asymptotes, ApplicableKinds)
{
    EXPECT_TRUE(applicable_asymptotes(Scenario{Rb87Hyperfine{kOmegaHf, kOmegaM}, Plasma{kOmegaP}}).empty());
    const auto d = applicable_asymptotes(kDrude);
    EXPECT_NE(std::find(d.begin(), d.end(), AsymptoteKind::DrudeThermal), d.end());
    EXPECT_EQ(std::find(d.begin(), d.end(), AsymptoteKind::PlasmaThermal), d.end());
    const auto s = applicable_asymptotes(state_resolved(kPlasma));
    EXPECT_EQ(s.size(), 2u);
}

// ---------------------------------------------------------------------------
// Entropy
// ---------------------------------------------------------------------------

TEST(Entropy, DefectClosedForm)
{
    const double L = 10.0 * kLambdaP;
    const double closed = entropy_defect(L, kAtom, kOmegaP, DefectForm::ClosedForm);
    EXPECT_NEAR(closed / phys::kB, phys::mu0 * mu_x2() / (16.0 * pi * phys::hbar * kOmegaM * std::pow(L, 3)),
                1e-12 * closed / phys::kB);
    EXPECT_NEAR(entropy_defect(2.0 * L, kAtom, kOmegaP, DefectForm::ClosedForm) / closed, 0.125, 1e-12);
    const double far = 100.0 * kLambdaP;
    EXPECT_NEAR(entropy_defect(far, kAtom, kOmegaP) / entropy_defect(far, kAtom, kOmegaP, DefectForm::ClosedForm), 1.0,
                0.03);
    EXPECT_GT(entropy_defect(L, kAtom, kOmegaP), 0.0);
    EXPECT_THROW(entropy_defect(0.0, kAtom, kOmegaP), DomainError);
}

TEST(Entropy, PerfectCrystalKeepsDefectAtLowTemperature)
{
    const double L = 10.0 * kLambdaP;
    const Scenario sc{kAtom, PerfectCrystal{kOmegaP, kGamma, 300.0, 2.0}};
    const double S = entropy(L, kTm / 30.0, sc, coarse(1e-3)).value;
    EXPECT_NEAR(S / entropy_defect(L, kAtom, kOmegaP), 1.0, 1e-3);
}

TEST(Entropy, VanishesAtHighTemperature)
{
    const double L = 1e-6;
    for (const auto& sc : {kPlasma, kDrude}) {
        const double T = 1e4;
        const double S = entropy(L, T, sc, coarse()).value;
        const double F = free_energy_equilibrium(L, T, sc, coarse()).value;
        const double S_low = entropy(L, kTm, sc, coarse()).value;
        EXPECT_LT(std::abs(S) * T, 1e-3 * std::max(std::abs(F), std::abs(S_low) * kTm)) << model_name(sc.material);
    }
}

TEST(Entropy, IntegratesToFreeEnergyDifference)
{
    const double L = 1e-6;
    const double T1 = 2.0 * kTm;
    const double T2 = 4.0 * kTm;
    const int n = 8;
    const double h = (T2 - T1) / n;
    double integral = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        integral += w * entropy(L, T1 + i * h, kPlasma, coarse(1e-6)).value;
    }
    integral *= h / 3.0;
    const double dF = free_energy_equilibrium(L, T2, kPlasma, coarse(1e-6)).value -
                      free_energy_equilibrium(L, T1, kPlasma, coarse(1e-6)).value;
    EXPECT_NEAR(-integral / dF, 1.0, 0.01);
}

TEST(Entropy, SuperconductorPeakAndOneSidedValues)
{
    const Scenario sc{kAtom, TwoFluidSC{kOmegaP, kGamma, 1.0}};
    const double low = std::abs(entropy(1e-6, 0.5, sc, coarse()).value);
    const auto near = entropy(1e-6, 0.999, sc, coarse());
    EXPECT_TRUE(near.one_sided);
    ASSERT_TRUE(near.left && near.right);
    EXPECT_EQ(near.value, *near.left);
    EXPECT_GT(std::abs(near.value), 10.0 * low);
    const auto at = entropy(1e-6, 1.0, sc, coarse());
    EXPECT_EQ(at.value, *at.right);
    EXPECT_FALSE(entropy(1e-6, 0.9, sc, coarse()).one_sided);
}

TEST(Entropy, Errors)
{
    EXPECT_THROW(entropy(1e-6, 0.0, kPlasma), DomainError);
    EXPECT_THROW(entropy(1e-6, 1.0, state_resolved(kPlasma)), DomainError);
    EntropyOptions o;
    o.rel_step = 0.5;
    EXPECT_THROW(entropy(1e-6, 1.0, kPlasma, {}, o), DomainError);
}

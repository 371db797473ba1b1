// Copyright 2026 The magcp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAGCP_SCAN_CONFIG_HPP_
#define MAGCP_SCAN_CONFIG_HPP_

#include <charconv>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "magcp/errors.hpp"
#include "magcp/free_energy.hpp"
#include "magcp/scan/units.hpp"
#include "magcp/scenario.hpp"

namespace magcp::scan {

enum class SweepAxis { Distance, Temperature };

struct Sweep
{
    SweepAxis axis = SweepAxis::Distance;
    double min = 0.0; // m or K
    double max = 0.0;
    std::size_t points = 2;
    bool log = true;
    bool operator==(const Sweep&) const = default;
};

struct Outputs
{
    bool free_energy = true;
    bool entropy = false;
    bool breakdown = false;
    bool asymptotes = false;
    bool operator==(const Outputs&) const = default;
};

struct Numerics
{
    double u = 1e-6;
    double rel_tol = 1e-8;
    std::size_t node_cap = 1'000'000;
    std::size_t max_terms = 1'000'000;
    bool operator==(const Numerics&) const = default;
};

struct Normalization
{
    std::optional<double> free_energy; // J
    std::optional<double> entropy;     // J/K
    bool operator==(const Normalization&) const = default;
};

/// One scan: a scenario, a swept coordinate and a list of values for the
/// other one (temperatures for a distance sweep, distances otherwise).
struct ScanConfig
{
    std::string name;
    Scenario scenario{TwoLevel{1.0}, Plasma{1.0}};
    Sweep sweep;
    std::vector<double> fixed;
    Outputs outputs;
    Numerics numerics;
    Normalization normalization;
    bool operator==(const ScanConfig&) const = default;
};

inline FreeEnergyOptions free_energy_options(const Numerics& n)
{
    FreeEnergyOptions o;
    o.u = n.u;
    o.max_terms = n.max_terms;
    o.rel_tol = n.rel_tol;
    o.greens.rel_tol = n.rel_tol;
    o.greens.node_cap = n.node_cap;
    return o;
}

/// Sweep values in ascending order; the end points are hit exactly.
inline std::vector<double> sweep_values(const Sweep& s)
{
    std::vector<double> v(s.points);
    for (std::size_t i = 0; i < s.points; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(s.points - 1);
        v[i] = s.log ? s.min * std::pow(s.max / s.min, t) : s.min + (s.max - s.min) * t;
    }
    v.front() = s.min;
    v.back() = s.max;
    return v;
}

inline void validate(const ScanConfig& cfg)
{
    try {
        validate(cfg.scenario);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    const auto& s = cfg.sweep;
    if (!(s.min > 0.0) || !std::isfinite(s.max)) {
        throw ConfigError("sweep: min and max must be positive and finite");
    }
    if (!(s.min < s.max)) {
        throw ConfigError("sweep: min must be smaller than max");
    }
    if (s.points < 2) {
        throw ConfigError("sweep: at least two points are required");
    }
    if (cfg.fixed.empty()) {
        throw ConfigError("fixed: at least one value is required");
    }
    for (double f : cfg.fixed) {
        const bool ok = s.axis == SweepAxis::Distance ? f >= 0.0 && std::isfinite(f) : f > 0.0 && std::isfinite(f);
        if (!ok) {
            throw ConfigError(s.axis == SweepAxis::Distance ? "fixed: temperatures must be non-negative"
                                                            : "fixed: distances must be positive");
        }
    }
    const auto& n = cfg.numerics;
    if (!(n.u >= 1e-6 && n.u <= 1e-3)) {
        throw ConfigError("numerics: u must lie in [1e-6, 1e-3]");
    }
    if (!(n.rel_tol > 0.0 && n.rel_tol <= 1e-2)) {
        throw ConfigError("numerics: rel_tol must lie in (0, 1e-2]");
    }
    if (n.node_cap < 1000 || n.max_terms < 1) {
        throw ConfigError("numerics: node_cap must be at least 1000 and max_terms at least 1");
    }
    const auto& o = cfg.outputs;
    if (!o.free_energy && !o.entropy && !o.asymptotes) {
        throw ConfigError("outputs: nothing to compute");
    }
    if (o.entropy && cfg.scenario.mode != Mode::Equilibrium) {
        throw ConfigError("outputs: entropy is defined for equilibrium scenarios only");
    }
    for (auto v : {cfg.normalization.free_energy, cfg.normalization.entropy}) {
        if (v && !(*v > 0.0 && std::isfinite(*v))) {
            throw ConfigError("normalization: reference values must be positive");
        }
    }
}

// ---------------------------------------------------------------------------
// YAML
// ---------------------------------------------------------------------------

namespace detail {

inline void check_keys(const YAML::Node& node, std::string_view section, std::initializer_list<std::string_view> allowed)
{
    if (!node.IsMap()) {
        throw ConfigError(std::string(section) + ": expected a mapping");
    }
    for (const auto& kv : node) {
        const auto key = kv.first.as<std::string>();
        bool known = false;
        for (auto a : allowed) {
            known = known || a == key;
        }
        if (!known) {
            throw ConfigError(std::string(section) + ": unknown key '" + key + "'");
        }
    }
}

inline YAML::Node require(const YAML::Node& node, std::string_view section, const std::string& key)
{
    const YAML::Node v = node[key];
    if (!v) {
        throw ConfigError(std::string(section) + ": missing '" + key + "'");
    }
    return v;
}

template <typename T>
T scalar(const YAML::Node& node, std::string_view section, const std::string& key)
{
    try {
        return require(node, section, key).as<T>();
    } catch (const YAML::Exception&) {
        throw ConfigError(std::string(section) + ": bad value for '" + key + "'");
    }
}

inline double quantity(const YAML::Node& node, std::string_view section, const std::string& key, Dimension d)
{
    return parse_quantity(scalar<std::string>(node, section, key), d);
}

inline AtomSpec parse_atom(const YAML::Node& n)
{
    const auto type = scalar<std::string>(n, "atom", "type");
    if (type == "two_level") {
        check_keys(n, "atom", {"type", "Omega_m", "state"});
        TwoLevel a{quantity(n, "atom", "Omega_m", Dimension::Frequency)};
        if (n["state"]) {
            const auto st = scalar<std::string>(n, "atom", "state");
            if (st != "ground" && st != "excited") {
                throw ConfigError("atom: state must be 'ground' or 'excited'");
            }
            a.excited = st == "excited";
        }
        return a;
    }
    if (type == "rb87") {
        check_keys(n, "atom", {"type", "Omega_hf", "Omega_L", "state"});
        Rb87Hyperfine a{quantity(n, "atom", "Omega_hf", Dimension::Frequency),
                        quantity(n, "atom", "Omega_L", Dimension::Frequency)};
        if (n["state"]) {
            const auto st = n["state"];
            check_keys(st, "atom.state", {"F", "mF"});
            a.prepared = {scalar<int>(st, "atom.state", "F"), scalar<int>(st, "atom.state", "mF")};
        }
        return a;
    }
    throw ConfigError("atom: unknown type '" + type + "' (two_level, rb87)");
}

inline MaterialModel parse_material(const YAML::Node& n)
{
    const auto model = scalar<std::string>(n, "material", "model");
    auto f = [&](const char* key) { return quantity(n, "material", key, Dimension::Frequency); };
    if (model == "drude") {
        check_keys(n, "material", {"model", "omega_p", "gamma"});
        return Drude{f("omega_p"), f("gamma")};
    }
    if (model == "plasma") {
        check_keys(n, "material", {"model", "omega_p"});
        return Plasma{f("omega_p")};
    }
    if (model == "two_fluid") {
        check_keys(n, "material", {"model", "omega_p", "gamma", "Tc"});
        return TwoFluidSC{f("omega_p"), f("gamma"), quantity(n, "material", "Tc", Dimension::Temperature)};
    }
    if (model == "perfect_crystal") {
        check_keys(n, "material", {"model", "omega_p", "gamma_ref", "T_ref", "exponent"});
        return PerfectCrystal{f("omega_p"), f("gamma_ref"), quantity(n, "material", "T_ref", Dimension::Temperature),
                              scalar<double>(n, "material", "exponent")};
    }
    if (model == "perfect_conductor") {
        check_keys(n, "material", {"model"});
        return PerfectConductor{};
    }
    throw ConfigError("material: unknown model '" + model +
                      "' (drude, plasma, two_fluid, perfect_crystal, perfect_conductor)");
}

inline std::string number(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline std::string hf(double v) { return format_quantity(v, Dimension::Frequency); }

inline YAML::Node atom_node(const AtomSpec& atom)
{
    YAML::Node n;
    if (const auto* tl = std::get_if<TwoLevel>(&atom)) {
        n["type"] = "two_level";
        n["Omega_m"] = hf(tl->Omega_m);
        n["state"] = tl->excited ? "excited" : "ground";
    } else {
        const auto& rb = std::get<Rb87Hyperfine>(atom);
        n["type"] = "rb87";
        n["Omega_hf"] = hf(rb.Omega_hf);
        n["Omega_L"] = hf(rb.Omega_L);
        n["state"]["F"] = rb.prepared.F;
        n["state"]["mF"] = rb.prepared.mF;
    }
    return n;
}

inline YAML::Node material_node(const MaterialModel& model)
{
    YAML::Node n;
    std::visit(
        [&](const auto& m) {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, Drude>) {
                n["model"] = "drude";
                n["omega_p"] = hf(m.omega_p);
                n["gamma"] = hf(m.gamma);
            } else if constexpr (std::is_same_v<M, Plasma>) {
                n["model"] = "plasma";
                n["omega_p"] = hf(m.omega_p);
            } else if constexpr (std::is_same_v<M, TwoFluidSC>) {
                n["model"] = "two_fluid";
                n["omega_p"] = hf(m.omega_p);
                n["gamma"] = hf(m.gamma);
                n["Tc"] = format_quantity(m.Tc, Dimension::Temperature);
            } else if constexpr (std::is_same_v<M, PerfectCrystal>) {
                n["model"] = "perfect_crystal";
                n["omega_p"] = hf(m.omega_p);
                n["gamma_ref"] = hf(m.gamma_ref);
                n["T_ref"] = format_quantity(m.T_ref, Dimension::Temperature);
                n["exponent"] = number(m.exponent);
            } else {
                n["model"] = "perfect_conductor";
            }
        },
        model);
    return n;
}

inline bool flag(const YAML::Node& n, std::string_view section, const std::string& key, bool fallback)
{
    return n[key] ? scalar<bool>(n, section, key) : fallback;
}

} // namespace detail

/// Builds a ScanConfig from YAML text; every physical value carries a unit.
inline ScanConfig parse_config(const std::string& text)
{
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw ConfigError(std::string("config is not valid YAML: ") + e.what());
    }
    using detail::check_keys;
    using detail::scalar;
    check_keys(root, "config", {"name", "atom", "material", "mode", "geometry", "sweep", "fixed", "outputs", "numerics",
                                "normalization"});
    ScanConfig cfg;
    cfg.name = root["name"] ? scalar<std::string>(root, "config", "name") : "";
    cfg.scenario.atom = detail::parse_atom(detail::require(root, "config", "atom"));
    cfg.scenario.material = detail::parse_material(detail::require(root, "config", "material"));

    const auto mode = root["mode"] ? scalar<std::string>(root, "config", "mode") : "equilibrium";
    if (mode != "equilibrium" && mode != "state_resolved") {
        throw ConfigError("mode must be 'equilibrium' or 'state_resolved'");
    }
    cfg.scenario.mode = mode == "equilibrium" ? Mode::Equilibrium : Mode::StateResolved;
    const auto geometry = root["geometry"] ? scalar<std::string>(root, "config", "geometry") : "anisotropic";
    if (geometry != "anisotropic" && geometry != "isotropic") {
        throw ConfigError("geometry must be 'anisotropic' or 'isotropic'");
    }
    cfg.scenario.geometry = geometry == "anisotropic" ? Geometry::Anisotropic : Geometry::Isotropic;

    const auto sweep = detail::require(root, "config", "sweep");
    check_keys(sweep, "sweep", {"axis", "min", "max", "points", "spacing"});
    const auto axis = scalar<std::string>(sweep, "sweep", "axis");
    if (axis != "distance" && axis != "temperature") {
        throw ConfigError("sweep: axis must be 'distance' or 'temperature'");
    }
    cfg.sweep.axis = axis == "distance" ? SweepAxis::Distance : SweepAxis::Temperature;
    const Dimension swept = cfg.sweep.axis == SweepAxis::Distance ? Dimension::Length : Dimension::Temperature;
    const Dimension other = cfg.sweep.axis == SweepAxis::Distance ? Dimension::Temperature : Dimension::Length;
    cfg.sweep.min = detail::quantity(sweep, "sweep", "min", swept);
    cfg.sweep.max = detail::quantity(sweep, "sweep", "max", swept);
    const long points = scalar<long>(sweep, "sweep", "points");
    if (points < 2) {
        throw ConfigError("sweep: at least two points are required");
    }
    cfg.sweep.points = static_cast<std::size_t>(points);
    const auto spacing = sweep["spacing"] ? scalar<std::string>(sweep, "sweep", "spacing") : "log";
    if (spacing != "log" && spacing != "linear") {
        throw ConfigError("sweep: spacing must be 'log' or 'linear'");
    }
    cfg.sweep.log = spacing == "log";

    const auto fixed = detail::require(root, "config", "fixed");
    try {
        if (fixed.IsSequence()) {
            for (const auto& v : fixed) {
                cfg.fixed.push_back(parse_quantity(v.as<std::string>(), other));
            }
        } else {
            cfg.fixed.push_back(parse_quantity(fixed.as<std::string>(), other));
        }
    } catch (const YAML::Exception&) {
        throw ConfigError("fixed: expected a value or a list of values");
    }

    if (const auto o = root["outputs"]) {
        check_keys(o, "outputs", {"free_energy", "entropy", "breakdown", "asymptotes"});
        cfg.outputs.free_energy = detail::flag(o, "outputs", "free_energy", true);
        cfg.outputs.entropy = detail::flag(o, "outputs", "entropy", false);
        cfg.outputs.breakdown = detail::flag(o, "outputs", "breakdown", false);
        cfg.outputs.asymptotes = detail::flag(o, "outputs", "asymptotes", false);
    }
    if (const auto n = root["numerics"]) {
        check_keys(n, "numerics", {"u", "rel_tol", "node_cap", "max_terms"});
        if (n["u"]) cfg.numerics.u = scalar<double>(n, "numerics", "u");
        if (n["rel_tol"]) cfg.numerics.rel_tol = scalar<double>(n, "numerics", "rel_tol");
        if (n["node_cap"]) cfg.numerics.node_cap = scalar<std::size_t>(n, "numerics", "node_cap");
        if (n["max_terms"]) cfg.numerics.max_terms = scalar<std::size_t>(n, "numerics", "max_terms");
    }
    if (const auto n = root["normalization"]) {
        check_keys(n, "normalization", {"free_energy", "entropy"});
        if (n["free_energy"]) {
            cfg.normalization.free_energy = detail::quantity(n, "normalization", "free_energy", Dimension::Energy);
        }
        if (n["entropy"]) {
            cfg.normalization.entropy = detail::quantity(n, "normalization", "entropy", Dimension::Entropy);
        }
    }
    validate(cfg);
    return cfg;
}

/// YAML text in canonical SI units; parse_config(serialize_config(c)) == c.
inline std::string serialize_config(const ScanConfig& cfg)
{
    YAML::Node root;
    if (!cfg.name.empty()) {
        root["name"] = cfg.name;
    }
    root["atom"] = detail::atom_node(cfg.scenario.atom);
    root["material"] = detail::material_node(cfg.scenario.material);
    root["mode"] = cfg.scenario.mode == Mode::Equilibrium ? "equilibrium" : "state_resolved";
    root["geometry"] = cfg.scenario.geometry == Geometry::Anisotropic ? "anisotropic" : "isotropic";

    const bool distance = cfg.sweep.axis == SweepAxis::Distance;
    const Dimension swept = distance ? Dimension::Length : Dimension::Temperature;
    const Dimension other = distance ? Dimension::Temperature : Dimension::Length;
    root["sweep"]["axis"] = distance ? "distance" : "temperature";
    root["sweep"]["min"] = format_quantity(cfg.sweep.min, swept);
    root["sweep"]["max"] = format_quantity(cfg.sweep.max, swept);
    root["sweep"]["points"] = cfg.sweep.points;
    root["sweep"]["spacing"] = cfg.sweep.log ? "log" : "linear";
    for (double f : cfg.fixed) {
        root["fixed"].push_back(format_quantity(f, other));
    }

    root["outputs"]["free_energy"] = cfg.outputs.free_energy;
    root["outputs"]["entropy"] = cfg.outputs.entropy;
    root["outputs"]["breakdown"] = cfg.outputs.breakdown;
    root["outputs"]["asymptotes"] = cfg.outputs.asymptotes;

    root["numerics"]["u"] = detail::number(cfg.numerics.u);
    root["numerics"]["rel_tol"] = detail::number(cfg.numerics.rel_tol);
    root["numerics"]["node_cap"] = cfg.numerics.node_cap;
    root["numerics"]["max_terms"] = cfg.numerics.max_terms;
    if (cfg.normalization.free_energy) {
        root["normalization"]["free_energy"] = format_quantity(*cfg.normalization.free_energy, Dimension::Energy);
    }
    if (cfg.normalization.entropy) {
        root["normalization"]["entropy"] = format_quantity(*cfg.normalization.entropy, Dimension::Entropy);
    }

    YAML::Emitter out;
    out << root;
    return std::string(out.c_str()) + "\n";
}

} // namespace magcp::scan

#endif // MAGCP_SCAN_CONFIG_HPP_

// Copyright 2026 The magcp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MAGCP_SCAN_EMIT_HPP_
#define MAGCP_SCAN_EMIT_HPP_

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "magcp/errors.hpp"
#include "magcp/scan/run.hpp"

namespace magcp::scan {

enum class Format { Csv, Json };

inline Format format_from_name(std::string_view name)
{
    if (name == "csv") {
        return Format::Csv;
    }
    if (name == "json") {
        return Format::Json;
    }
    throw ConfigError("unknown output format '" + std::string(name) + "' (csv, json)");
}

/// Writing results failed; the message names the destination.
class OutputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

using Cell = std::variant<std::monostate, double, std::size_t, bool, std::string>;
using Row = std::vector<std::pair<std::string, Cell>>;

inline Cell opt(const std::optional<double>& v) { return v ? Cell{*v} : Cell{}; }

inline Row flatten(const Columns& c, const ScanRecord& r)
{
    Row row;
    row.emplace_back("L_m", r.L);
    row.emplace_back("T_K", r.T);
    row.emplace_back("F_J", r.F ? Cell{r.F->value} : Cell{});
    if (c.F_normalized) {
        row.emplace_back("F_over_ref", opt(r.F_normalized));
    }
    if (c.breakdown) {
        const bool has = r.F.has_value();
        row.emplace_back("F_nonresonant_J", has ? Cell{r.F->nonresonant} : Cell{});
        row.emplace_back("F_resonant_J", has ? Cell{r.F->resonant} : Cell{});
        row.emplace_back("N_terms", has ? Cell{r.F->N_terms} : Cell{});
        row.emplace_back("remainder_J", has ? Cell{r.F->remainder} : Cell{});
        row.emplace_back("truncation_u", has ? Cell{r.F->truncation_u} : Cell{});
        row.emplace_back("zero_T_path", has ? Cell{r.F->zero_temperature_path} : Cell{});
    }
    if (c.entropy) {
        const bool has = r.S.has_value();
        row.emplace_back("S_J_per_K", has ? Cell{r.S->value} : Cell{});
        if (c.S_normalized) {
            row.emplace_back("S_over_ref", opt(r.S_normalized));
        }
        row.emplace_back("S_left_J_per_K", has ? opt(r.S->left) : Cell{});
        row.emplace_back("S_right_J_per_K", has ? opt(r.S->right) : Cell{});
    }
    for (std::size_t i = 0; i < c.asymptotes.size(); ++i) {
        const auto* a = i < r.asymptotes.size() ? &r.asymptotes[i] : nullptr;
        const auto& name = c.asymptotes[i];
        row.emplace_back(name + "_J", a ? opt(a->value) : Cell{});
        row.emplace_back(name + "_in_window", a && a->value ? Cell{a->in_window} : Cell{});
        row.emplace_back(name + "_window", a && a->value ? Cell{a->window} : Cell{});
    }
    row.emplace_back("status", std::string(r.ok() ? "ok" : "failed"));
    row.emplace_back("error", r.error);
    return row;
}

inline std::string csv_field(std::string_view s)
{
    if (s.find_first_of(",\"\n\r") == std::string_view::npos) {
        return std::string(s);
    }
    std::string out = "\"";
    for (char ch : s) {
        out += ch;
        if (ch == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

inline std::string csv_cell(const Cell& cell)
{
    struct Visitor
    {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(double v) const
        {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.9e", v);
            return buf;
        }
        std::string operator()(std::size_t v) const { return std::to_string(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const { return csv_field(v); }
    };
    return std::visit(Visitor{}, cell);
}

inline nlohmann::ordered_json json_cell(const Cell& cell)
{
    struct Visitor
    {
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        nlohmann::ordered_json operator()(double v) const { return v; }
        nlohmann::ordered_json operator()(std::size_t v) const { return v; }
        nlohmann::ordered_json operator()(bool v) const { return v; }
        nlohmann::ordered_json operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{}, cell);
}

} // namespace detail

/// CSV: a header naming each column with its unit, then one line per
/// record with 10 significant digits. JSON: an array of flat objects.
inline std::string render(const ScanTable& table, Format format)
{
    if (table.records.empty()) {
        throw OutputError("no records to write");
    }
    if (format == Format::Csv) {
        std::string out;
        bool header = true;
        for (const auto& rec : table.records) {
            const auto row = detail::flatten(table.columns, rec);
            if (header) {
                for (std::size_t i = 0; i < row.size(); ++i) {
                    out += (i ? "," : "") + row[i].first;
                }
                out += '\n';
                header = false;
            }
            for (std::size_t i = 0; i < row.size(); ++i) {
                out += (i ? "," : "") + detail::csv_cell(row[i].second);
            }
            out += '\n';
        }
        return out;
    }
    auto arr = nlohmann::ordered_json::array();
    for (const auto& rec : table.records) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (const auto& [key, cell] : detail::flatten(table.columns, rec)) {
            obj[key] = detail::json_cell(cell);
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

/// Writes the table to `destination` ("-" or empty for stdout). Nothing is
/// created when the table is empty.
inline void emit(const ScanTable& table, Format format, const std::string& destination)
{
    const std::string text = render(table, format);
    if (destination.empty() || destination == "-") {
        std::cout << text << std::flush;
        if (!std::cout) {
            throw OutputError("failed writing to standard output");
        }
        return;
    }
    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw OutputError("cannot open '" + destination + "' for writing");
    }
    out << text;
    out.close();
    if (!out) {
        throw OutputError("failed writing '" + destination + "'");
    }
}

} // namespace magcp::scan

#endif // MAGCP_SCAN_EMIT_HPP_

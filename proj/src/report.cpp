/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The dronetco Authors. All rights reserved.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "dronetco/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

#include "dronetco/errors.hpp"
#include "dronetco/link_capacity.hpp"
#include "dronetco/sensitivity.hpp"
#include "dronetco/version.hpp"

namespace dronetco {

namespace {

std::string non_finite(double value)
{
    if (std::isnan(value)) return "nan";
    return value > 0 ? "inf" : "-inf";
}

// Adds one unit in the last place of a string of decimal digits.
void increment_digits(std::string& digits)
{
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (*it == '9') {
            *it = '0';
        } else {
            ++*it;
            return;
        }
    }
    digits.insert(digits.begin(), '1');
}

std::string csv_escape(const std::string& text)
{
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

void add_standard_provenance(ReportTable& table, const Scenario& scenario, const char* command)
{
    table.add_provenance("command", command);
    table.add_provenance("scenario", scenario.metadata.name);
    table.add_provenance("backhaul_variant", std::string(to_string(scenario.params.backhaul_variant)));
    table.add_provenance("capacity_mapping", std::string(to_string(scenario.params.capacity_mapping)));
    table.add_provenance("tool_version", kVersion);
}

}  // namespace

ReportTable::ReportTable(std::vector<std::string> header) : header_(std::move(header))
{
    for (std::size_t i = 0; i < header_.size(); ++i) {
        for (std::size_t j = i + 1; j < header_.size(); ++j) {
            if (header_[i] == header_[j]) {
                throw std::invalid_argument("duplicate report column \"" + header_[i] + "\"");
            }
        }
    }
}

void ReportTable::add_row(std::vector<ReportCell> row)
{
    if (row.size() != header_.size()) {
        throw std::invalid_argument("report row has " + std::to_string(row.size()) + " cells, expected " +
                                    std::to_string(header_.size()));
    }
    rows_.push_back(std::move(row));
}

void ReportTable::add_provenance(std::string key, std::string value)
{
    provenance_.emplace_back(std::move(key), std::move(value));
}

void ReportTable::add_note(std::string note) { notes_.push_back(std::move(note)); }

std::size_t ReportTable::column(const std::string& name) const
{
    const auto it = std::find(header_.begin(), header_.end(), name);
    if (it == header_.end()) {
        throw std::out_of_range("no report column \"" + name + "\"");
    }
    return static_cast<std::size_t>(it - header_.begin());
}

const ReportCell& ReportTable::cell(std::size_t row, const std::string& column_name) const
{
    return rows_.at(row).at(column(column_name));
}

std::string format_fixed(double value, int decimals)
{
    if (!std::isfinite(value)) {
        return non_finite(value);
    }
    // Exact decimal expansion (a double has at most 1074 fractional digits),
    // then round half-up by hand so ties never go to even.
    static constexpr int kExactDigits = 1080;
    std::string buffer(kExactDigits + 400, '\0');
    const auto res = std::to_chars(buffer.data(), buffer.data() + buffer.size(), std::abs(value),
                                   std::chars_format::fixed, kExactDigits);
    if (res.ec != std::errc{}) {
        throw std::runtime_error("format_fixed: conversion failed");
    }
    buffer.resize(static_cast<std::size_t>(res.ptr - buffer.data()));
    const std::size_t point = buffer.find('.');
    std::string digits = buffer.substr(0, point) + buffer.substr(point + 1, static_cast<std::size_t>(decimals));
    if (buffer[point + 1 + static_cast<std::size_t>(decimals)] >= '5') {
        increment_digits(digits);
    }
    std::string integer = digits.substr(0, digits.size() - static_cast<std::size_t>(decimals));
    std::string fraction = digits.substr(digits.size() - static_cast<std::size_t>(decimals));
    std::string out = decimals > 0 ? integer + "." + fraction : integer;
    const bool zero = std::all_of(digits.begin(), digits.end(), [](char ch) { return ch == '0'; });
    if (std::signbit(value) && !zero) {
        out.insert(out.begin(), '-');
    }
    return out;
}

std::string format_real(double value)
{
    if (!std::isfinite(value)) {
        return non_finite(value);
    }
    if (value == 0.0) {
        return "0";
    }
    char buffer[64];
    const auto res = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, res.ptr);
}

ReportCell euros_cell(double value) { return {format_euros(value), ReportCell::Kind::Number}; }
ReportCell real_cell(double value) { return {format_real(value), ReportCell::Kind::Number}; }
ReportCell int_cell(long long value) { return {std::to_string(value), ReportCell::Kind::Number}; }
ReportCell bool_cell(bool value) { return {value ? "true" : "false", ReportCell::Kind::Boolean}; }
ReportCell text_cell(std::string value) { return {std::move(value), ReportCell::Kind::Text}; }

std::string render_csv(const ReportTable& table)
{
    std::string out;
    auto append_line = [&out](const auto& cells, auto&& text_of) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) out += ',';
            out += csv_escape(text_of(cells[i]));
        }
        out += '\n';
    };
    append_line(table.header(), [](const std::string& s) { return s; });
    for (const auto& row : table.rows()) {
        append_line(row, [](const ReportCell& c) { return c.text; });
    }
    for (const auto& [key, value] : table.provenance()) {
        out += "# " + key + ": " + value + "\n";
    }
    for (const auto& note : table.notes()) {
        out += "# note: " + note + "\n";
    }
    return out;
}

std::string render_json(const ReportTable& table)
{
    using nlohmann::ordered_json;
    ordered_json root;
    root["columns"] = table.header();
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows()) {
        ordered_json object = ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            const ReportCell& cell = row[i];
            switch (cell.kind) {
            case ReportCell::Kind::Number:
                // Cells are already rounded; re-parsing keeps the printed digits.
                object[table.header()[i]] = ordered_json::parse(cell.text, nullptr, false).is_discarded()
                                                ? ordered_json(cell.text)
                                                : ordered_json::parse(cell.text);
                break;
            case ReportCell::Kind::Boolean:
                object[table.header()[i]] = cell.text == "true";
                break;
            case ReportCell::Kind::Text:
                object[table.header()[i]] = cell.text;
                break;
            }
        }
        rows.push_back(std::move(object));
    }
    root["rows"] = std::move(rows);
    ordered_json provenance = ordered_json::object();
    for (const auto& [key, value] : table.provenance()) {
        provenance[key] = value;
    }
    root["provenance"] = std::move(provenance);
    root["notes"] = table.notes();
    return root.dump(2) + "\n";
}

ReportTable cmd_evaluate(const Scenario& scenario, const DesignPoint& point, int horizon_years)
{
    const CostBreakdown b = tco(point, scenario.params, horizon_years);
    ReportTable table({"n_dr", "c_step", "horizon", "C_dr", "C_sc", "C_fh_annual", "C_bh_annual", "CAPEX",
                       "OPEX_total", "TCO"});
    table.add_row({real_cell(point.n_dr), real_cell(point.c_step), int_cell(horizon_years), euros_cell(b.c_dr),
                   euros_cell(b.c_sc), euros_cell(b.c_fh_annual), euros_cell(b.c_bh_annual),
                   euros_cell(b.capex()), euros_cell(b.opex_total()), euros_cell(b.tco)});
    add_standard_provenance(table, scenario, "evaluate");
    const double cells = small_cell_count(point.n_dr, scenario.params);
    table.add_note("small cells upgraded: " + format_fixed(cells, 2) + " (provisioned " +
                   format_real(small_cell_count(point.n_dr, scenario.params, CellRounding::Ceiling)) + ")");
    table.add_note("link capacity: " + format_fixed(capacity_increment(point.c_step, scenario.params), 2) +
                   " Mbps");
    return table;
}

ReportTable cmd_optimize(const Scenario& scenario, int horizon_years, const OptimizeOptions& options)
{
    if (horizon_years < 1) {
        throw DomainError("horizon_years must be >= 1, got " + std::to_string(horizon_years));
    }
    DescentConfig config = options.descent;
    config.bounds.n_max = options.n_range.hi;
    config.bounds.c_max = options.c_range.hi;

    const ObjectiveFunction objective_fn =
        options.objective_override ? *options.objective_override : tco_objective(scenario.params, horizon_years);
    if (!options.objective_override) {
        validate(scenario.params);
    }
    const GridSearchResult oracle = grid_search(objective_fn.value, options.n_range, options.c_range);
    const OptimizationResult descent = coordinate_descent(options.start, objective_fn, config);

    ReportTable table({"horizon", "n_dr_continuous", "c_step_continuous", "objective_continuous", "n_dr_descent",
                       "c_step_descent", "objective_descent", "n_dr_grid", "c_step_grid", "objective_grid",
                       "iterations", "converged", "stop_reason", "agreement"});
    table.add_row({int_cell(horizon_years), {format_fixed(descent.minimizer_continuous.n_dr, 6), ReportCell::Kind::Number},
                   {format_fixed(descent.minimizer_continuous.c_step, 6), ReportCell::Kind::Number},
                   euros_cell(descent.objective_continuous), real_cell(descent.minimizer_integer.n_dr),
                   real_cell(descent.minimizer_integer.c_step), euros_cell(descent.objective_value),
                   real_cell(oracle.argmin.n_dr), real_cell(oracle.argmin.c_step), euros_cell(oracle.value),
                   int_cell(descent.iterations), bool_cell(descent.converged),
                   text_cell(std::string(to_string(descent.stop_reason))),
                   bool_cell(descent.minimizer_integer == oracle.argmin)});
    add_standard_provenance(table, scenario, "optimize");
    table.add_provenance("grid", "n_dr " + std::to_string(options.n_range.lo) + ".." +
                                     std::to_string(options.n_range.hi) + ", c_step " +
                                     std::to_string(options.c_range.lo) + ".." + std::to_string(options.c_range.hi));
    if (options.objective_override) {
        table.add_note("objective replaced by a test hook; scenario costs not used");
    }
    return table;
}

ReportTable cmd_sweep(const Scenario& scenario, SweepMode mode, int horizon_years)
{
    SweepGrid grid;
    if (mode == SweepMode::DroneCost) {
        if (!scenario.sweeps.drone_cost) {
            throw ValidationError("sweeps.drone_cost", "scenario defines no drone-cost axes");
        }
        const auto& axes = *scenario.sweeps.drone_cost;
        grid = sweep_drone_cost(scenario.params, axes.d_values, axes.n_values, horizon_years);
    } else {
        if (!scenario.sweeps.capacity) {
            throw ValidationError("sweeps.capacity", "scenario defines no capacity axes");
        }
        const auto& axes = *scenario.sweeps.capacity;
        grid = sweep_capacity(scenario.params, axes.c_steps, axes.n_values, horizon_years);
    }

    ReportTable table({grid.row_label, grid.column_label, "TCO", "is_row_argmin"});
    for (std::size_t r = 0; r < grid.rows.size(); ++r) {
        for (std::size_t c = 0; c < grid.columns.size(); ++c) {
            table.add_row({mode == SweepMode::DroneCost ? euros_cell(grid.rows[r]) : real_cell(grid.rows[r]),
                           real_cell(grid.columns[c]), euros_cell(grid.cells[r][c]),
                           bool_cell(grid.row_argmin[r] == c)});
        }
    }
    add_standard_provenance(table, scenario, mode == SweepMode::DroneCost ? "sweep drone-cost" : "sweep capacity");
    table.add_provenance("horizon", std::to_string(horizon_years));

    if (mode == SweepMode::Capacity) {
        const auto steps = capacity_step_snr(scenario.params, scenario.sweeps.capacity->c_steps);
        for (const auto& step : steps) {
            table.add_note("c_step " + std::to_string(step.c_step) + ": " + format_fixed(step.capacity_mbps, 2) +
                           " Mbps over 100 MHz needs SNR " + format_fixed(step.required_snr_db, 2) +
                           " dB (+" + format_fixed(step.delta_db, 2) + " dB; nominal 3 dB/step gives " +
                           format_fixed(step.nominal_snr_db, 2) + " dB)");
        }
    }
    return table;
}

ReportTable cmd_compare_splits(const Scenario& scenario, const DesignPoint& point, std::span<const int> horizons)
{
    if (!scenario.splits) {
        throw ValidationError("splits", "scenario defines no split profiles");
    }
    const auto rows = compare_splits(scenario.params, scenario.splits->split2, scenario.splits->split7, point,
                                     horizons);
    ReportTable table({"split", "horizon", "CAPEX", "OPEX_total", "TCO"});
    for (const auto& row : rows) {
        table.add_row({text_cell(std::string(to_string(row.split))), int_cell(row.breakdown.horizon_years),
                       euros_cell(row.breakdown.capex()), euros_cell(row.breakdown.opex_total()),
                       euros_cell(row.breakdown.tco)});
    }
    add_standard_provenance(table, scenario, "compare-splits");
    table.add_provenance("point", "n_dr=" + format_real(point.n_dr) + " c_step=" + format_real(point.c_step));
    return table;
}

}  // namespace dronetco

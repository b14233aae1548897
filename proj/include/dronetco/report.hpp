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

#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dronetco/optimizer.hpp"
#include "dronetco/scenario.hpp"

namespace dronetco {

struct ReportCell {
    enum class Kind { Text, Number, Boolean };

    std::string text;
    Kind kind = Kind::Text;
};

/// Rectangular table with a provenance footer. Cells hold their final
/// textual form so CSV and JSON renderings agree digit for digit.
class ReportTable {
public:
    explicit ReportTable(std::vector<std::string> header);

    const std::vector<std::string>& header() const noexcept { return header_; }
    const std::vector<std::vector<ReportCell>>& rows() const noexcept { return rows_; }
    const std::vector<std::pair<std::string, std::string>>& provenance() const noexcept { return provenance_; }
    const std::vector<std::string>& notes() const noexcept { return notes_; }

    /// Throws std::invalid_argument if the row width differs from the header.
    void add_row(std::vector<ReportCell> row);
    void add_provenance(std::string key, std::string value);
    void add_note(std::string note);

    std::size_t column(const std::string& name) const;
    const ReportCell& cell(std::size_t row, const std::string& column_name) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<ReportCell>> rows_;
    std::vector<std::pair<std::string, std::string>> provenance_;
    std::vector<std::string> notes_;
};

/// Fixed-point, half-up (away from zero) on the exact binary value.
std::string format_fixed(double value, int decimals);
inline std::string format_euros(double value) { return format_fixed(value, 2); }
/// Shortest round-trip representation; integral values print without a point.
std::string format_real(double value);

ReportCell euros_cell(double value);
ReportCell real_cell(double value);
ReportCell int_cell(long long value);
ReportCell bool_cell(bool value);
ReportCell text_cell(std::string value);

/// CSV with '#'-prefixed provenance and note lines after the data.
std::string render_csv(const ReportTable& table);
std::string render_json(const ReportTable& table);

ReportTable cmd_evaluate(const Scenario& scenario, const DesignPoint& point, int horizon_years);

struct OptimizeOptions {
    IntRange n_range{1, 30};
    IntRange c_range{1, 10};
    DesignPoint start{1.0, 1.0};
    DescentConfig descent;  // bounds are overwritten with the grid's upper edges
    std::optional<ObjectiveFunction> objective_override;  // replaces the TCO model (testing)
};

ReportTable cmd_optimize(const Scenario& scenario, int horizon_years, const OptimizeOptions& options = {});

enum class SweepMode { DroneCost, Capacity };

/// Long form, one row per cell, row-major ascending. Axes come from the scenario.
ReportTable cmd_sweep(const Scenario& scenario, SweepMode mode, int horizon_years);

ReportTable cmd_compare_splits(const Scenario& scenario, const DesignPoint& point,
                               std::span<const int> horizons);

}  // namespace dronetco

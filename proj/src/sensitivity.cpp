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

#include "dronetco/sensitivity.hpp"

#include <cmath>
#include <string>

#include "dronetco/errors.hpp"

namespace dronetco {

namespace {

void require_axis_nonempty(std::size_t size, const char* name)
{
    if (size == 0) {
        throw DomainError(std::string(name) + " axis is empty");
    }
}

template <typename T>
void require_ascending(std::span<const T> values, const char* name)
{
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i - 1] < values[i])) {
            throw DomainError(std::string(name) + " axis must be strictly ascending");
        }
    }
}

void require_lattice(std::span<const int> values, const char* name)
{
    require_axis_nonempty(values.size(), name);
    require_ascending(values, name);
    if (values.front() < 1) {
        throw DomainError(std::string(name) + " values must be >= 1");
    }
}

SweepGrid make_grid(std::string row_label, std::vector<double> rows, std::span<const int> n_values)
{
    SweepGrid grid;
    grid.row_label = std::move(row_label);
    grid.rows = std::move(rows);
    grid.column_label = "n_dr";
    grid.columns.assign(n_values.begin(), n_values.end());
    grid.cells.assign(grid.rows.size(), std::vector<double>(grid.columns.size()));
    return grid;
}

}  // namespace

std::string_view to_string(SplitName name) noexcept
{
    return name == SplitName::Split7 ? "split7" : "split2";
}

void validate(const SplitProfile& profile, std::string_view prefix)
{
    const std::string base(prefix);
    if (!(profile.drone_unit_cost >= 0.0) || !std::isfinite(profile.drone_unit_cost)) {
        throw ValidationError(base + ".drone_unit_cost", "must be >= 0");
    }
    if (!(profile.fronthaul_rate_multiplier >= 1.0) || !std::isfinite(profile.fronthaul_rate_multiplier)) {
        throw ValidationError(base + ".fronthaul_rate_multiplier", "must be >= 1");
    }
    if (profile.smc_override && (!(*profile.smc_override >= 0.0) || !std::isfinite(*profile.smc_override))) {
        throw ValidationError(base + ".smc_override", "must be >= 0");
    }
}

void validate(const SplitPair& pair)
{
    validate(pair.split2, "splits.split2");
    validate(pair.split7, "splits.split7");
    if (pair.split7.fronthaul_rate_multiplier < pair.split2.fronthaul_rate_multiplier) {
        throw ValidationError("splits.split7.fronthaul_rate_multiplier",
                              "must be >= splits.split2.fronthaul_rate_multiplier");
    }
    if (pair.split7.drone_unit_cost > pair.split2.drone_unit_cost) {
        throw ValidationError("splits.split7.drone_unit_cost",
                              "must be <= splits.split2.drone_unit_cost");
    }
}

SplitPair default_split_profiles()
{
    SplitPair pair;
    pair.split2 = {SplitName::Split2, 9120.0, 1.0, std::nullopt};
    // Assumed: RF-only drone radio 3000 EUR cheaper, PHY-level fronthaul at
    // three times the link rate, 20% dearer small-cell upgrade.
    pair.split7 = {SplitName::Split7, 6120.0, 3.0, 3060.0};
    return pair;
}

CostParams apply_profile(const CostParams& base, const SplitProfile& profile)
{
    CostParams out = base;
    out.drone_unit_cost = profile.drone_unit_cost;
    out.fronthaul_multiplier = profile.fronthaul_rate_multiplier;
    if (profile.smc_override) {
        out.smc = *profile.smc_override;
    }
    return out;
}

SweepGrid sweep_drone_cost(const CostParams& params, std::span<const double> d_values,
                           std::span<const int> n_values, int horizon_years)
{
    validate(params);
    require_axis_nonempty(d_values.size(), "drone_unit_cost");
    require_ascending(d_values, "drone_unit_cost");
    require_lattice(n_values, "n_dr");

    SweepGrid grid = make_grid("drone_unit_cost", {d_values.begin(), d_values.end()}, n_values);
    for (std::size_t r = 0; r < grid.rows.size(); ++r) {
        CostParams row_params = params;
        row_params.drone_unit_cost = grid.rows[r];
        validate(row_params);
        for (std::size_t c = 0; c < grid.columns.size(); ++c) {
            grid.cells[r][c] = tco({grid.columns[c], 1.0}, row_params, horizon_years).tco;
        }
    }
    grid.compute_row_argmin();
    return grid;
}

SweepGrid sweep_capacity(const CostParams& params, std::span<const int> c_steps,
                         std::span<const int> n_values, int horizon_years)
{
    validate(params);
    require_lattice(c_steps, "c_step");
    require_lattice(n_values, "n_dr");

    SweepGrid grid = make_grid("c_step", {c_steps.begin(), c_steps.end()}, n_values);
    for (std::size_t r = 0; r < grid.rows.size(); ++r) {
        for (std::size_t c = 0; c < grid.columns.size(); ++c) {
            grid.cells[r][c] = tco({grid.columns[c], grid.rows[r]}, params, horizon_years).tco;
        }
    }
    grid.compute_row_argmin();
    return grid;
}

std::vector<SplitComparisonRow> compare_splits(const CostParams& base, const SplitProfile& split2,
                                               const SplitProfile& split7, const DesignPoint& point,
                                               std::span<const int> horizons)
{
    validate(base);
    validate(point);
    if (horizons.empty()) {
        throw DomainError("compare_splits: no horizons given");
    }
    std::vector<SplitComparisonRow> rows;
    for (const SplitProfile* profile : {&split2, &split7}) {
        const CostParams params = apply_profile(base, *profile);
        validate(params);
        for (int horizon : horizons) {
            rows.push_back({profile->name, tco(point, params, horizon)});
        }
    }
    return rows;
}

}  // namespace dronetco

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
#include <string_view>
#include <vector>

#include "dronetco/cost_model.hpp"
#include "dronetco/sweep_grid.hpp"

namespace dronetco {

enum class SplitName { Split2, Split7 };

std::string_view to_string(SplitName name) noexcept;

/// Functional-split specific inputs. Split 7 (PHY) carries a cheaper drone
/// radio but a heavier fronthaul; split 2 (PDCP) the opposite.
struct SplitProfile {
    SplitName name = SplitName::Split2;
    double drone_unit_cost = 9120.0;
    double fronthaul_rate_multiplier = 1.0;
    std::optional<double> smc_override;

    bool operator==(const SplitProfile&) const = default;
};

struct SplitPair {
    SplitProfile split2;
    SplitProfile split7{SplitName::Split7, 9120.0, 1.0, std::nullopt};

    bool operator==(const SplitPair&) const = default;
};

/// Field errors are reported under `prefix` (e.g. "splits.split7").
void validate(const SplitProfile& profile, std::string_view prefix);

/// Per-profile checks plus the cross-profile ordering: split 7 must have a
/// fronthaul multiplier >= split 2's and a drone cost <= split 2's.
void validate(const SplitPair& pair);

/// Assumed split profiles used when a scenario does not supply its own.
SplitPair default_split_profiles();

/// base with the profile's drone cost, fronthaul multiplier and small-cell
/// override applied.
CostParams apply_profile(const CostParams& base, const SplitProfile& profile);

/// TCO over (drone unit cost x n_dr) at c_step = 1.
SweepGrid sweep_drone_cost(const CostParams& params, std::span<const double> d_values,
                           std::span<const int> n_values, int horizon_years);

/// TCO over (c_step x n_dr).
SweepGrid sweep_capacity(const CostParams& params, std::span<const int> c_steps,
                         std::span<const int> n_values, int horizon_years);

struct SplitComparisonRow {
    SplitName split = SplitName::Split2;
    CostBreakdown breakdown;
};

/// One row per (split, horizon), split 2 first, horizons in the given order.
std::vector<SplitComparisonRow> compare_splits(const CostParams& base, const SplitProfile& split2,
                                               const SplitProfile& split7, const DesignPoint& point,
                                               std::span<const int> horizons);

}  // namespace dronetco

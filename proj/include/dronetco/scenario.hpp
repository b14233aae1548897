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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dronetco/cost_model.hpp"
#include "dronetco/sensitivity.hpp"

namespace dronetco {

struct DroneCostAxes {
    std::vector<double> d_values;
    std::vector<int> n_values;

    bool operator==(const DroneCostAxes&) const = default;
};

struct CapacityAxes {
    std::vector<int> c_steps;
    std::vector<int> n_values;

    bool operator==(const CapacityAxes&) const = default;
};

struct SweepAxes {
    std::optional<DroneCostAxes> drone_cost;
    std::optional<CapacityAxes> capacity;

    bool operator==(const SweepAxes&) const = default;
};

struct ScenarioMetadata {
    std::string name;
    std::string description;

    bool operator==(const ScenarioMetadata&) const = default;
};

struct Scenario {
    ScenarioMetadata metadata;
    CostParams params;
    std::optional<SplitPair> splits;
    SweepAxes sweeps;

    bool operator==(const Scenario&) const = default;
};

/// The reference city: 100 km^2, 9120 EUR drones, a = 3840, b = 0.2,
/// 2550 EUR small-cell upgrades, 799/833 Mbps fronthaul/backhaul, 6 BBUs,
/// mux 1.5, 665 Mbps base link, plus the assumed split profiles and the
/// default sweep axes.
Scenario default_scenario();

void validate(const Scenario& scenario);

/// Parses scenario JSON. Absent keys keep their default_scenario() values;
/// "splits": null or "sweeps.<mode>": null removes that section.
/// Throws ParseError, UnknownKeyError or ValidationError.
Scenario load_scenario(std::string_view text);

Scenario load_scenario_file(const std::filesystem::path& path);

/// Complete JSON document; load_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const Scenario& scenario);

}  // namespace dronetco

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

#include "dronetco/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "dronetco/errors.hpp"

namespace dronetco {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& object, const std::string& path,
                         std::initializer_list<std::string_view> allowed)
{
    for (const auto& item : object.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
            throw UnknownKeyError(path.empty() ? item.key() : path + "." + item.key());
        }
    }
}

const json& require_object(const json& value, const std::string& path)
{
    if (!value.is_object()) {
        throw ValidationError(path, "expected an object");
    }
    return value;
}

double read_real(const json& value, const std::string& path)
{
    if (!value.is_number()) {
        throw ValidationError(path, "expected a number");
    }
    const double x = value.get<double>();
    if (!std::isfinite(x)) {
        throw ValidationError(path, "expected a finite number");
    }
    return x;
}

int read_int(const json& value, const std::string& path)
{
    const double x = read_real(value, path);
    if (x != std::floor(x) || std::abs(x) > 1e9) {
        throw ValidationError(path, "expected an integer");
    }
    return static_cast<int>(x);
}

std::string read_string(const json& value, const std::string& path)
{
    if (!value.is_string()) {
        throw ValidationError(path, "expected a string");
    }
    return value.get<std::string>();
}

template <typename T, typename Reader>
std::vector<T> read_list(const json& value, const std::string& path, Reader read)
{
    if (!value.is_array()) {
        throw ValidationError(path, "expected an array");
    }
    std::vector<T> out;
    for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(read(value[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

template <typename T>
void assign_if(const json& object, const char* key, const std::string& prefix, T& target)
{
    const auto it = object.find(key);
    if (it == object.end()) {
        return;
    }
    const std::string path = prefix + "." + key;
    if constexpr (std::is_same_v<T, int>) {
        target = read_int(*it, path);
    } else if constexpr (std::is_same_v<T, double>) {
        target = read_real(*it, path);
    } else {
        target = read_string(*it, path);
    }
}

BackhaulVariant parse_backhaul(const std::string& s, const std::string& path)
{
    for (auto v : {BackhaulVariant::PerLinkShare, BackhaulVariant::PerDroneLinear}) {
        if (s == to_string(v)) return v;
    }
    throw ValidationError(path, "expected \"per-link-share\" or \"per-drone-linear\", got \"" + s + "\"");
}

CapacityMapping parse_mapping(const std::string& s, const std::string& path)
{
    for (auto m : {CapacityMapping::Additive, CapacityMapping::Multiplicative}) {
        if (s == to_string(m)) return m;
    }
    throw ValidationError(path, "expected \"additive\" or \"multiplicative\", got \"" + s + "\"");
}

void read_params(const json& node, CostParams& p)
{
    require_object(node, "params");
    reject_unknown_keys(node, "params",
                        {"city_area", "drone_reach", "drone_unit_cost", "cost_a", "cost_b", "smc",
                         "fhc", "bhc", "bbu", "mux", "c_base", "c_step_size", "fronthaul_multiplier",
                         "backhaul_variant", "capacity_mapping"});
    assign_if(node, "city_area", "params", p.city_area);
    assign_if(node, "drone_reach", "params", p.drone_reach);
    assign_if(node, "drone_unit_cost", "params", p.drone_unit_cost);
    assign_if(node, "cost_a", "params", p.cost_a);
    assign_if(node, "cost_b", "params", p.cost_b);
    assign_if(node, "smc", "params", p.smc);
    assign_if(node, "fhc", "params", p.fhc);
    assign_if(node, "bhc", "params", p.bhc);
    assign_if(node, "bbu", "params", p.bbu);
    assign_if(node, "mux", "params", p.mux);
    assign_if(node, "c_base", "params", p.c_base);
    assign_if(node, "c_step_size", "params", p.c_step_size);
    assign_if(node, "fronthaul_multiplier", "params", p.fronthaul_multiplier);
    if (node.contains("backhaul_variant")) {
        p.backhaul_variant = parse_backhaul(read_string(node["backhaul_variant"], "params.backhaul_variant"),
                                            "params.backhaul_variant");
    }
    if (node.contains("capacity_mapping")) {
        p.capacity_mapping = parse_mapping(read_string(node["capacity_mapping"], "params.capacity_mapping"),
                                           "params.capacity_mapping");
    }
}

void read_profile(const json& node, const std::string& path, SplitProfile& profile)
{
    require_object(node, path);
    reject_unknown_keys(node, path, {"drone_unit_cost", "fronthaul_rate_multiplier", "smc_override"});
    assign_if(node, "drone_unit_cost", path, profile.drone_unit_cost);
    assign_if(node, "fronthaul_rate_multiplier", path, profile.fronthaul_rate_multiplier);
    if (const auto it = node.find("smc_override"); it != node.end()) {
        if (it->is_null()) {
            profile.smc_override.reset();
        } else {
            profile.smc_override = read_real(*it, path + ".smc_override");
        }
    }
}

void read_splits(const json& node, std::optional<SplitPair>& splits)
{
    if (node.is_null()) {
        splits.reset();
        return;
    }
    require_object(node, "splits");
    reject_unknown_keys(node, "splits", {"split2", "split7"});
    if (!splits) {
        splits = default_split_profiles();
    }
    if (node.contains("split2")) read_profile(node["split2"], "splits.split2", splits->split2);
    if (node.contains("split7")) read_profile(node["split7"], "splits.split7", splits->split7);
}

void read_sweeps(const json& node, SweepAxes& sweeps)
{
    require_object(node, "sweeps");
    reject_unknown_keys(node, "sweeps", {"drone_cost", "capacity"});
    const auto as_int = [](const json& v, const std::string& p) { return read_int(v, p); };
    const auto as_real = [](const json& v, const std::string& p) { return read_real(v, p); };

    if (const auto it = node.find("drone_cost"); it != node.end()) {
        if (it->is_null()) {
            sweeps.drone_cost.reset();
        } else {
            require_object(*it, "sweeps.drone_cost");
            reject_unknown_keys(*it, "sweeps.drone_cost", {"d_values", "n_values"});
            DroneCostAxes axes = sweeps.drone_cost.value_or(DroneCostAxes{});
            if (it->contains("d_values"))
                axes.d_values = read_list<double>((*it)["d_values"], "sweeps.drone_cost.d_values", as_real);
            if (it->contains("n_values"))
                axes.n_values = read_list<int>((*it)["n_values"], "sweeps.drone_cost.n_values", as_int);
            sweeps.drone_cost = std::move(axes);
        }
    }
    if (const auto it = node.find("capacity"); it != node.end()) {
        if (it->is_null()) {
            sweeps.capacity.reset();
        } else {
            require_object(*it, "sweeps.capacity");
            reject_unknown_keys(*it, "sweeps.capacity", {"c_steps", "n_values"});
            CapacityAxes axes = sweeps.capacity.value_or(CapacityAxes{});
            if (it->contains("c_steps"))
                axes.c_steps = read_list<int>((*it)["c_steps"], "sweeps.capacity.c_steps", as_int);
            if (it->contains("n_values"))
                axes.n_values = read_list<int>((*it)["n_values"], "sweeps.capacity.n_values", as_int);
            sweeps.capacity = std::move(axes);
        }
    }
}

template <typename T>
void validate_axis(const std::vector<T>& values, const std::string& path, T minimum)
{
    if (values.empty()) {
        throw ValidationError(path, "must not be empty");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] >= minimum)) {
            throw ValidationError(path, "values must be >= " + std::to_string(minimum));
        }
        if (i > 0 && !(values[i - 1] < values[i])) {
            throw ValidationError(path, "values must be strictly ascending");
        }
    }
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte)
{
    // nlohmann reports the 1-based byte index of the offending character.
    const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

nlohmann::ordered_json profile_to_json(const SplitProfile& profile)
{
    using nlohmann::ordered_json;
    ordered_json out = {{"drone_unit_cost", profile.drone_unit_cost},
                {"fronthaul_rate_multiplier", profile.fronthaul_rate_multiplier}};
    out["smc_override"] = profile.smc_override ? ordered_json(*profile.smc_override) : ordered_json(nullptr);
    return out;
}

}  // namespace

Scenario default_scenario()
{
    Scenario s;
    s.metadata.name = "reference-city";
    s.metadata.description =
        "100 km2 metropolitan reference deployment with assumed split 2 / split 7 profiles";
    s.params = CostParams{};
    s.splits = default_split_profiles();
    s.sweeps.drone_cost = DroneCostAxes{{9120.0, 13120.0, 17120.0, 21120.0}, {}};
    for (int n = 1; n <= 15; ++n) s.sweeps.drone_cost->n_values.push_back(n);
    s.sweeps.capacity = CapacityAxes{{1, 2, 3, 4, 5}, {}};
    for (int n = 1; n <= 30; ++n) s.sweeps.capacity->n_values.push_back(n);
    return s;
}

void validate(const Scenario& scenario)
{
    validate(scenario.params);
    if (scenario.splits) {
        validate(*scenario.splits);
    }
    if (const auto& axes = scenario.sweeps.drone_cost) {
        validate_axis(axes->d_values, "sweeps.drone_cost.d_values", 0.0);
        validate_axis(axes->n_values, "sweeps.drone_cost.n_values", 1);
    }
    if (const auto& axes = scenario.sweeps.capacity) {
        validate_axis(axes->c_steps, "sweeps.capacity.c_steps", 1);
        validate_axis(axes->n_values, "sweeps.capacity.n_values", 1);
    }
}

Scenario load_scenario(std::string_view text)
{
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_and_column(text, e.byte);
        throw ParseError("scenario parse error at line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + e.what(),
                         line, column);
    }
    require_object(root, "(root)");
    reject_unknown_keys(root, "", {"metadata", "params", "splits", "sweeps"});

    Scenario s = default_scenario();
    if (const auto it = root.find("metadata"); it != root.end()) {
        require_object(*it, "metadata");
        reject_unknown_keys(*it, "metadata", {"name", "description"});
        assign_if(*it, "name", "metadata", s.metadata.name);
        assign_if(*it, "description", "metadata", s.metadata.description);
    }
    if (const auto it = root.find("params"); it != root.end()) read_params(*it, s.params);
    if (const auto it = root.find("splits"); it != root.end()) read_splits(*it, s.splits);
    if (const auto it = root.find("sweeps"); it != root.end()) read_sweeps(*it, s.sweeps);
    validate(s);
    return s;
}

Scenario load_scenario_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open scenario file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_scenario(buffer.str());
}

std::string serialize_scenario(const Scenario& s)
{
    const CostParams& p = s.params;
    using nlohmann::ordered_json;
    ordered_json root;
    root["metadata"] = {{"name", s.metadata.name}, {"description", s.metadata.description}};
    root["params"] = {
        {"city_area", p.city_area},
        {"drone_reach", p.drone_reach},
        {"drone_unit_cost", p.drone_unit_cost},
        {"cost_a", p.cost_a},
        {"cost_b", p.cost_b},
        {"smc", p.smc},
        {"fhc", p.fhc},
        {"bhc", p.bhc},
        {"bbu", p.bbu},
        {"mux", p.mux},
        {"c_base", p.c_base},
        {"c_step_size", p.c_step_size},
        {"fronthaul_multiplier", p.fronthaul_multiplier},
        {"backhaul_variant", std::string(to_string(p.backhaul_variant))},
        {"capacity_mapping", std::string(to_string(p.capacity_mapping))},
    };
    if (s.splits) {
        root["splits"] = {{"split2", profile_to_json(s.splits->split2)},
                          {"split7", profile_to_json(s.splits->split7)}};
    } else {
        root["splits"] = nullptr;
    }
    ordered_json sweeps = ordered_json::object();
    if (s.sweeps.drone_cost) {
        sweeps["drone_cost"] = {{"d_values", s.sweeps.drone_cost->d_values},
                                {"n_values", s.sweeps.drone_cost->n_values}};
    } else {
        sweeps["drone_cost"] = nullptr;
    }
    if (s.sweeps.capacity) {
        sweeps["capacity"] = {{"c_steps", s.sweeps.capacity->c_steps},
                              {"n_values", s.sweeps.capacity->n_values}};
    } else {
        sweeps["capacity"] = nullptr;
    }
    root["sweeps"] = std::move(sweeps);
    return root.dump(2) + "\n";
}

}  // namespace dronetco

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

// dronetco: batch evaluation, optimization and sensitivity sweeps of the
// drone-link TCO model.
//
// Exit status: 0 success, 1 I/O failure, 2 usage error, 3 scenario
// validation error, 4 model domain error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dronetco/errors.hpp"
#include "dronetco/report.hpp"
#include "dronetco/scenario.hpp"
#include "dronetco/version.hpp"

namespace {

enum ExitCode { kOk = 0, kIoError = 1, kUsageError = 2, kValidationError = 3, kDomainError = 4 };

struct CommonOptions {
    std::string scenario_path;
    std::string format = "csv";
    std::string out_path;
    int horizon = 1;
};

void add_common(CLI::App* cmd, CommonOptions& common)
{
    cmd->add_option("--scenario", common.scenario_path, "Scenario JSON file (default: built-in reference city)");
    cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", common.out_path, "Write the report to PATH instead of stdout");
    cmd->add_option("--horizon", common.horizon, "Years of OPEX accumulated into the TCO")
        ->check(CLI::PositiveNumber);
}

struct SweepOverrides {
    std::optional<double> d_min;
    std::optional<double> d_max;
    std::optional<double> d_step;
    std::optional<int> n_max;
    std::vector<int> c_steps;
};

void apply_overrides(dronetco::Scenario& scenario, const SweepOverrides& o, dronetco::SweepMode mode)
{
    using dronetco::SweepMode;
    std::optional<std::vector<int>> n_values;
    if (o.n_max) {
        n_values.emplace();
        for (int n = 1; n <= *o.n_max; ++n) n_values->push_back(n);
    }
    if (mode == SweepMode::DroneCost) {
        auto axes = scenario.sweeps.drone_cost.value_or(dronetco::DroneCostAxes{});
        if (o.d_min || o.d_max || o.d_step) {
            const double lo = o.d_min.value_or(axes.d_values.empty() ? 9120.0 : axes.d_values.front());
            const double hi = o.d_max.value_or(axes.d_values.empty() ? lo : axes.d_values.back());
            const double step = o.d_step.value_or(4000.0);
            if (!(step > 0.0) || hi < lo) {
                throw CLI::ValidationError("--d-min/--d-max/--d-step", "need d-step > 0 and d-max >= d-min");
            }
            axes.d_values.clear();
            for (int i = 0; lo + i * step <= hi * (1.0 + 1e-12); ++i) {
                axes.d_values.push_back(lo + i * step);
            }
        }
        if (n_values) axes.n_values = *n_values;
        scenario.sweeps.drone_cost = axes;
    } else {
        auto axes = scenario.sweeps.capacity.value_or(dronetco::CapacityAxes{});
        if (!o.c_steps.empty()) axes.c_steps = o.c_steps;
        if (n_values) axes.n_values = *n_values;
        scenario.sweeps.capacity = axes;
    }
    dronetco::validate(scenario);
}

dronetco::ObjectiveFunction quadratic_stub()
{
    return {[](const dronetco::DesignPoint& x) {
                return (x.n_dr - 3.0) * (x.n_dr - 3.0) + (x.c_step - 2.0) * (x.c_step - 2.0);
            },
            [](const dronetco::DesignPoint& x) {
                return dronetco::Gradient{2.0 * (x.n_dr - 3.0), 2.0 * (x.c_step - 2.0)};
            }};
}

int emit(const dronetco::ReportTable& table, const CommonOptions& common)
{
    const std::string text = common.format == "json" ? dronetco::render_json(table) : dronetco::render_csv(table);
    if (common.out_path.empty()) {
        std::cout << text;
        std::cout.flush();
        return std::cout ? kOk : kIoError;
    }
    std::ofstream out(common.out_path, std::ios::binary);
    out << text;
    if (!out) {
        std::cerr << "dronetco: cannot write " << common.out_path << "\n";
        return kIoError;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Drone-based 5G link TCO model: evaluate, optimize, sweep, compare-splits"};
    app.set_version_flag("--version", dronetco::kVersion);
    app.require_subcommand(1);

    CommonOptions common;
    double n_dr = 7.0;
    double c_step = 1.0;

    auto* evaluate = app.add_subcommand("evaluate", "Cost breakdown at one design point");
    add_common(evaluate, common);
    evaluate->add_option("--n-dr", n_dr, "Drones per wireless link (>= 1)");
    evaluate->add_option("--c-step", c_step, "Capacity step index (>= 1)");

    auto* optimize = app.add_subcommand("optimize", "Coordinate descent cross-checked by exhaustive grid search");
    add_common(optimize, common);
    dronetco::OptimizeOptions optimize_options;
    bool stub = false;
    optimize->add_option("--n-min", optimize_options.n_range.lo, "Grid lower edge for n_dr");
    optimize->add_option("--n-max", optimize_options.n_range.hi, "Grid/descent upper edge for n_dr");
    optimize->add_option("--c-min", optimize_options.c_range.lo, "Grid lower edge for c_step");
    optimize->add_option("--c-max", optimize_options.c_range.hi, "Grid/descent upper edge for c_step");
    optimize->add_option("--step", optimize_options.descent.step, "Initial descent step");
    optimize->add_option("--max-iterations", optimize_options.descent.max_iterations, "Descent cycle limit");
    optimize->add_flag("--stub-quadratic", stub, "Replace the cost model by (n-3)^2 + (c-2)^2")
        ->group("");

    auto* sweep = app.add_subcommand("sweep", "Long-form TCO grid over one swept parameter and n_dr");
    add_common(sweep, common);
    std::string mode_name;
    SweepOverrides overrides;
    sweep->add_option("--mode", mode_name, "Swept parameter")
        ->required()
        ->check(CLI::IsMember({"drone-cost", "capacity"}));
    sweep->add_option("--d-min", overrides.d_min, "First drone unit cost (EUR)");
    sweep->add_option("--d-max", overrides.d_max, "Last drone unit cost (EUR)");
    sweep->add_option("--d-step", overrides.d_step, "Drone unit cost increment (EUR, default 4000)");
    sweep->add_option("--n-max", overrides.n_max, "Sweep n_dr over 1..N")->check(CLI::PositiveNumber);
    sweep->add_option("--c-steps", overrides.c_steps, "Capacity steps, comma separated")->delimiter(',');

    auto* compare = app.add_subcommand("compare-splits", "CAPEX/OPEX/TCO of split 2 vs split 7");
    add_common(compare, common);
    std::vector<int> horizons{1, 5};
    compare->add_option("--n-dr", n_dr, "Drones per wireless link (>= 1)");
    compare->add_option("--c-step", c_step, "Capacity step index (>= 1)");
    compare->add_option("--horizons", horizons, "Horizons in years, comma separated")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        dronetco::Scenario scenario = common.scenario_path.empty()
                                          ? dronetco::default_scenario()
                                          : dronetco::load_scenario_file(common.scenario_path);
        if (*evaluate) {
            return emit(dronetco::cmd_evaluate(scenario, {n_dr, c_step}, common.horizon), common);
        }
        if (*optimize) {
            if (stub) {
                optimize_options.objective_override = quadratic_stub();
            }
            return emit(dronetco::cmd_optimize(scenario, common.horizon, optimize_options), common);
        }
        if (*sweep) {
            const auto mode = mode_name == "capacity" ? dronetco::SweepMode::Capacity : dronetco::SweepMode::DroneCost;
            apply_overrides(scenario, overrides, mode);
            return emit(dronetco::cmd_sweep(scenario, mode, common.horizon), common);
        }
        if (*compare) {
            for (int h : horizons) {
                if (h < 1) {
                    std::cerr << "dronetco: --horizons: every horizon must be >= 1\n";
                    return kUsageError;
                }
            }
            return emit(dronetco::cmd_compare_splits(scenario, {n_dr, c_step}, horizons), common);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "dronetco: " << e.what() << "\n";
        return kUsageError;
    } catch (const dronetco::ParseError& e) {
        std::cerr << "dronetco: " << e.what() << "\n";
        return kValidationError;
    } catch (const dronetco::ValidationError& e) {
        std::cerr << "dronetco: invalid scenario field " << e.what() << "\n";
        return kValidationError;
    } catch (const dronetco::DomainError& e) {
        std::cerr << "dronetco: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::exception& e) {
        std::cerr << "dronetco: " << e.what() << "\n";
        return kIoError;
    }
    return kUsageError;
}

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

#include <functional>
#include <limits>
#include <string_view>
#include <vector>

#include "dronetco/cost_model.hpp"
#include "dronetco/sweep_grid.hpp"

namespace dronetco {

struct Gradient {
    double d_n_dr = 0.0;
    double d_c_step = 0.0;
};

/// Exact partial derivatives of CAPEX + horizon * OPEX with respect to
/// (n_dr, c_step), for the active capacity mapping and backhaul variant.
/// Throws DomainError for points outside n_dr >= 1, c_step >= 1.
Gradient analytic_gradient(const DesignPoint& point, const CostParams& params, int horizon_years = 1);

/// Upper edges of the search box. The lower edges are always the model
/// constraints n_dr >= 1 and c_step >= 1.
struct DescentBounds {
    double n_max = std::numeric_limits<double>::infinity();
    double c_max = std::numeric_limits<double>::infinity();
};

struct DescentConfig {
    double step = 0.1;             // initial trial step for every coordinate move
    double grad_tolerance = 1e-8;  // relative to the initial projected gradient norm
    int max_iterations = 10000;    // coordinate cycles
    double fd_epsilon = 1e-5;      // used only when an objective has no gradient
    double min_step = 1e-6;        // backtracking gives up below this
    DescentBounds bounds;
};

void validate(const DescentConfig& config);

/// A scalar objective over design points. gradient may be empty, in which
/// case the optimizer differentiates numerically with fd_epsilon.
struct ObjectiveFunction {
    std::function<double(const DesignPoint&)> value;
    std::function<Gradient(const DesignPoint&)> gradient;
};

ObjectiveFunction tco_objective(const CostParams& params, int horizon_years = 1);

struct TracePoint {
    DesignPoint point;
    double objective = 0.0;
};

enum class StopReason {
    GradientTolerance,
    StepResolution,  // no coordinate could improve with a step >= min_step
    MaxIterations,
};

std::string_view to_string(StopReason reason) noexcept;

struct OptimizationResult {
    DesignPoint minimizer_continuous;
    DesignPoint minimizer_integer;
    double objective_continuous = 0.0;
    double objective_value = 0.0;  // at minimizer_integer
    std::vector<TracePoint> trace; // start point first, then one entry per accepted step
    int iterations = 0;
    bool converged = false;
    StopReason stop_reason = StopReason::MaxIterations;
};

/// Projected cyclic coordinate descent. Each move steps against the sign of
/// the partial derivative, halving the trial step until the objective drops
/// strictly, then clamps to the feasible box. The continuous result is
/// rounded and the 3x3 integer neighbourhood searched for the best lattice
/// point (ties to smaller n_dr, then smaller c_step).
OptimizationResult coordinate_descent(const DesignPoint& start, const ObjectiveFunction& objective,
                                      const DescentConfig& config = {});

OptimizationResult coordinate_descent(const DesignPoint& start, const CostParams& params,
                                      const DescentConfig& config = {}, int horizon_years = 1);

struct IntRange {
    int lo = 1;
    int hi = 1;
};

struct GridSearchResult {
    DesignPoint argmin;
    double value = 0.0;
    SweepGrid grid;  // rows: c_step, columns: n_dr
};

/// Exhaustive lattice search. Throws DomainError on empty or infeasible ranges.
GridSearchResult grid_search(const std::function<double(const DesignPoint&)>& objective,
                             IntRange n_range, IntRange c_range);

GridSearchResult grid_search(const CostParams& params, IntRange n_range, IntRange c_range,
                             int horizon_years);

}  // namespace dronetco

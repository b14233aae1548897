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

#include "dronetco/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dronetco/errors.hpp"

namespace dronetco {

namespace {

// d/dx (x^b) * dx, with the x == 0 singularity resolved one-sidedly.
double chain_power(double x, double b, double dx)
{
    if (dx == 0.0) {
        return 0.0;
    }
    if (x <= 0.0) {
        return std::copysign(std::numeric_limits<double>::infinity(), dx);
    }
    return b * std::pow(x, b - 1.0) * dx;
}

double projected(double g, double x, double lo, double hi)
{
    if (x <= lo && g > 0.0) return 0.0;
    if (x >= hi && g < 0.0) return 0.0;
    return g;
}

double& coordinate(DesignPoint& p, int axis) { return axis == 0 ? p.n_dr : p.c_step; }
double coordinate(const DesignPoint& p, int axis) { return axis == 0 ? p.n_dr : p.c_step; }
double component(const Gradient& g, int axis) { return axis == 0 ? g.d_n_dr : g.d_c_step; }

struct Box {
    double lo[2] = {1.0, 1.0};
    double hi[2];
};

Gradient numeric_gradient(const ObjectiveFunction& f, const DesignPoint& x, const Box& box, double eps)
{
    Gradient g;
    for (int axis = 0; axis < 2; ++axis) {
        DesignPoint plus = x;
        DesignPoint minus = x;
        const double xi = coordinate(x, axis);
        double width = 2.0 * eps;
        if (xi - eps < box.lo[axis]) {
            width = eps;
            coordinate(plus, axis) = xi + eps;
        } else if (xi + eps > box.hi[axis]) {
            width = eps;
            coordinate(minus, axis) = xi - eps;
        } else {
            coordinate(plus, axis) = xi + eps;
            coordinate(minus, axis) = xi - eps;
        }
        const double d = (f.value(plus) - f.value(minus)) / width;
        (axis == 0 ? g.d_n_dr : g.d_c_step) = d;
    }
    return g;
}

}  // namespace

Gradient analytic_gradient(const DesignPoint& point, const CostParams& p, int horizon_years)
{
    validate(point);
    if (horizon_years < 1) {
        throw DomainError("horizon_years must be >= 1, got " + std::to_string(horizon_years));
    }
    const double n = point.n_dr;
    const double s = point.c_step;
    const double a = p.cost_a;
    const double b = p.cost_b;
    const double k = small_cell_constant(p);
    const double c = capacity_increment(s, p);
    const double dc = capacity_increment_slope(p);
    const double m = p.fronthaul_multiplier;
    const double scale = std::exp2(s - 1.0);

    // CAPEX: drones and small-cell upgrades.
    Gradient capex;
    capex.d_n_dr = scale * p.drone_unit_cost - k * p.smc / (n * n);
    capex.d_c_step = std::numbers::ln2 * scale * n * p.drone_unit_cost;

    // Fronthaul: (k / n^2) * a * [(fhc + n c m)^b - fhc^b]
    const double fh_load = p.fhc + n * c * m;
    const double fh_bracket = std::pow(fh_load, b) - std::pow(p.fhc, b);
    Gradient fh;
    fh.d_n_dr = k * a * (-2.0 * fh_bracket / (n * n * n) + chain_power(fh_load, b, c * m) / (n * n));
    fh.d_c_step = k * a * chain_power(fh_load, b, n * m * dc) / (n * n);

    // Backhaul: bbu * a * [(bhc + added)/mux)^b - (bhc/mux)^b]
    Gradient bh;
    if (p.backhaul_variant == BackhaulVariant::PerDroneLinear) {
        const double load = (p.bhc + n * c * k) / p.mux;
        bh.d_n_dr = p.bbu * a * chain_power(load, b, c * k / p.mux);
        bh.d_c_step = p.bbu * a * chain_power(load, b, n * k * dc / p.mux);
    } else {
        const double load = (p.bhc + c * k / n) / p.mux;
        bh.d_n_dr = p.bbu * a * chain_power(load, b, -c * k / (n * n * p.mux));
        bh.d_c_step = p.bbu * a * chain_power(load, b, k * dc / (n * p.mux));
    }

    const double years = horizon_years;
    return {capex.d_n_dr + years * (fh.d_n_dr + bh.d_n_dr),
            capex.d_c_step + years * (fh.d_c_step + bh.d_c_step)};
}

void validate(const DescentConfig& config)
{
    if (!(config.step > 0.0)) throw ValidationError("step", "must be > 0");
    if (!(config.grad_tolerance > 0.0)) throw ValidationError("grad_tolerance", "must be > 0");
    if (config.max_iterations < 1) throw ValidationError("max_iterations", "must be >= 1");
    if (!(config.fd_epsilon > 0.0)) throw ValidationError("fd_epsilon", "must be > 0");
    if (!(config.min_step > 0.0)) throw ValidationError("min_step", "must be > 0");
    if (!(config.bounds.n_max >= 1.0)) throw ValidationError("bounds.n_max", "must be >= 1");
    if (!(config.bounds.c_max >= 1.0)) throw ValidationError("bounds.c_max", "must be >= 1");
}

ObjectiveFunction tco_objective(const CostParams& params, int horizon_years)
{
    return {
        [params, horizon_years](const DesignPoint& x) { return objective(x, params, horizon_years); },
        [params, horizon_years](const DesignPoint& x) {
            return analytic_gradient(x, params, horizon_years);
        },
    };
}

std::string_view to_string(StopReason reason) noexcept
{
    switch (reason) {
    case StopReason::GradientTolerance: return "gradient-tolerance";
    case StopReason::StepResolution: return "step-resolution";
    case StopReason::MaxIterations: return "max-iterations";
    }
    return "unknown";
}

OptimizationResult coordinate_descent(const DesignPoint& start, const ObjectiveFunction& f,
                                      const DescentConfig& config)
{
    validate(config);
    validate(start);
    if (!f.value) {
        throw std::invalid_argument("coordinate_descent: objective has no value function");
    }
    Box box;
    box.hi[0] = config.bounds.n_max;
    box.hi[1] = config.bounds.c_max;
    if (start.n_dr > box.hi[0] || start.c_step > box.hi[1]) {
        throw DomainError("start point lies outside the search bounds");
    }

    auto gradient_at = [&](const DesignPoint& x) {
        return f.gradient ? f.gradient(x) : numeric_gradient(f, x, box, config.fd_epsilon);
    };
    auto projected_norm = [&](const DesignPoint& x, const Gradient& g) {
        const double gn = projected(g.d_n_dr, x.n_dr, box.lo[0], box.hi[0]);
        const double gc = projected(g.d_c_step, x.c_step, box.lo[1], box.hi[1]);
        return std::hypot(gn, gc);
    };

    OptimizationResult result;
    DesignPoint x = start;
    double fx = f.value(x);
    result.trace.push_back({x, fx});

    const double initial_norm = projected_norm(x, gradient_at(x));
    const double threshold = config.grad_tolerance * initial_norm;

    if (initial_norm == 0.0) {
        result.converged = true;
        result.stop_reason = StopReason::GradientTolerance;
    }

    while (!result.converged && result.iterations < config.max_iterations) {
        ++result.iterations;
        bool moved = false;
        for (int axis = 0; axis < 2; ++axis) {
            const double xi = coordinate(x, axis);
            const double g = projected(component(gradient_at(x), axis), xi, box.lo[axis], box.hi[axis]);
            if (g == 0.0 || !std::isfinite(g)) {
                continue;
            }
            const double direction = g > 0.0 ? -1.0 : 1.0;
            for (double step = config.step; step >= config.min_step; step *= 0.5) {
                DesignPoint candidate = x;
                coordinate(candidate, axis) = std::clamp(xi + direction * step, box.lo[axis], box.hi[axis]);
                if (coordinate(candidate, axis) == xi) {
                    break;
                }
                const double fc = f.value(candidate);
                if (fc < fx) {
                    x = candidate;
                    fx = fc;
                    result.trace.push_back({x, fx});
                    moved = true;
                    break;
                }
            }
        }
        if (projected_norm(x, gradient_at(x)) <= threshold) {
            result.converged = true;
            result.stop_reason = StopReason::GradientTolerance;
        } else if (!moved) {
            result.converged = true;
            result.stop_reason = StopReason::StepResolution;
        }
    }

    result.minimizer_continuous = x;
    result.objective_continuous = fx;

    // Integer recovery: round, then scan the 3x3 neighbourhood in (n, c) order.
    const double n_cap = std::floor(box.hi[0]);
    const double c_cap = std::floor(box.hi[1]);
    const double n0 = std::clamp(std::round(x.n_dr), 1.0, n_cap);
    const double c0 = std::clamp(std::round(x.c_step), 1.0, c_cap);
    bool found = false;
    for (double n = n0 - 1.0; n <= n0 + 1.0; n += 1.0) {
        for (double c = c0 - 1.0; c <= c0 + 1.0; c += 1.0) {
            if (n < 1.0 || c < 1.0 || n > n_cap || c > c_cap) {
                continue;
            }
            const DesignPoint lattice{n, c};
            const double value = f.value(lattice);
            if (!found || value < result.objective_value) {
                result.minimizer_integer = lattice;
                result.objective_value = value;
                found = true;
            }
        }
    }
    return result;
}

OptimizationResult coordinate_descent(const DesignPoint& start, const CostParams& params,
                                      const DescentConfig& config, int horizon_years)
{
    validate(params);
    return coordinate_descent(start, tco_objective(params, horizon_years), config);
}

GridSearchResult grid_search(const std::function<double(const DesignPoint&)>& objective_fn,
                             IntRange n_range, IntRange c_range)
{
    if (n_range.hi < n_range.lo || c_range.hi < c_range.lo) {
        throw DomainError("grid_search: empty range");
    }
    if (n_range.lo < 1 || c_range.lo < 1) {
        throw DomainError("grid_search: ranges must start at >= 1");
    }

    GridSearchResult out;
    SweepGrid& grid = out.grid;
    grid.row_label = "c_step";
    grid.column_label = "n_dr";
    for (int c = c_range.lo; c <= c_range.hi; ++c) grid.rows.push_back(c);
    for (int n = n_range.lo; n <= n_range.hi; ++n) grid.columns.push_back(n);
    grid.cells.assign(grid.rows.size(), std::vector<double>(grid.columns.size()));
    for (std::size_t r = 0; r < grid.rows.size(); ++r) {
        for (std::size_t col = 0; col < grid.columns.size(); ++col) {
            grid.cells[r][col] = objective_fn({grid.columns[col], grid.rows[r]});
        }
    }
    grid.compute_row_argmin();

    // Lexicographic scan after the full evaluation: smaller n_dr, then smaller c_step.
    bool found = false;
    for (std::size_t col = 0; col < grid.columns.size(); ++col) {
        for (std::size_t r = 0; r < grid.rows.size(); ++r) {
            if (!found || grid.cells[r][col] < out.value) {
                out.value = grid.cells[r][col];
                out.argmin = {grid.columns[col], grid.rows[r]};
                found = true;
            }
        }
    }
    return out;
}

GridSearchResult grid_search(const CostParams& params, IntRange n_range, IntRange c_range,
                             int horizon_years)
{
    validate(params);
    return grid_search([&](const DesignPoint& x) { return tco(x, params, horizon_years).tco; },
                       n_range, c_range);
}

}  // namespace dronetco

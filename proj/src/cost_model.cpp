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

#include "dronetco/cost_model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dronetco/errors.hpp"

namespace dronetco {

namespace {

void require(bool ok, const char* field, const char* message)
{
    if (!ok) {
        throw ValidationError(std::string("params.") + field, message);
    }
}

// a * [(base + increment)^b - base^b], the incremental lease cost.
double lease_increment(double a, double b, double base, double increment)
{
    return a * (std::pow(base + increment, b) - std::pow(base, b));
}

}  // namespace

std::string_view to_string(BackhaulVariant v) noexcept
{
    switch (v) {
    case BackhaulVariant::PerLinkShare: return "per-link-share";
    case BackhaulVariant::PerDroneLinear: return "per-drone-linear";
    }
    return "unknown";
}

std::string_view to_string(CapacityMapping m) noexcept
{
    switch (m) {
    case CapacityMapping::Additive: return "additive";
    case CapacityMapping::Multiplicative: return "multiplicative";
    }
    return "unknown";
}

void validate(const CostParams& p)
{
    // Negated comparisons so that NaN fails every check.
    require(p.city_area > 0.0 && std::isfinite(p.city_area), "city_area", "must be > 0");
    require(p.drone_reach > 0.0 && std::isfinite(p.drone_reach), "drone_reach", "must be > 0");
    require(p.drone_unit_cost >= 0.0 && std::isfinite(p.drone_unit_cost), "drone_unit_cost", "must be >= 0");
    require(p.cost_a > 0.0 && std::isfinite(p.cost_a), "cost_a", "must be > 0");
    require(p.cost_b > 0.0 && p.cost_b < 1.0, "cost_b", "must lie in (0, 1)");
    require(p.smc >= 0.0 && std::isfinite(p.smc), "smc", "must be >= 0");
    require(p.fhc >= 0.0 && std::isfinite(p.fhc), "fhc", "must be >= 0");
    require(p.bhc >= 0.0 && std::isfinite(p.bhc), "bhc", "must be >= 0");
    require(p.bbu >= 1, "bbu", "must be >= 1");
    require(p.mux >= 1.0 && std::isfinite(p.mux), "mux", "must be >= 1");
    require(p.c_base > 0.0 && std::isfinite(p.c_base), "c_base", "must be > 0");
    require(p.c_step_size > 0.0 && std::isfinite(p.c_step_size), "c_step_size", "must be > 0");
    require(p.fronthaul_multiplier >= 1.0 && std::isfinite(p.fronthaul_multiplier),
            "fronthaul_multiplier", "must be >= 1");
}

void validate(const DesignPoint& point)
{
    if (!(point.n_dr >= 1.0) || !std::isfinite(point.n_dr)) {
        throw DomainError("n_dr must be >= 1, got " + std::to_string(point.n_dr));
    }
    if (!(point.c_step >= 1.0) || !std::isfinite(point.c_step)) {
        throw DomainError("c_step must be >= 1, got " + std::to_string(point.c_step));
    }
}

double small_cell_constant(const CostParams& p)
{
    return p.city_area / (std::numbers::pi * p.drone_reach * p.drone_reach);
}

double capacity_increment(double c_step, const CostParams& p)
{
    if (!(c_step >= 1.0)) {
        throw DomainError("c_step must be >= 1, got " + std::to_string(c_step));
    }
    switch (p.capacity_mapping) {
    case CapacityMapping::Multiplicative:
        return p.c_base * (c_step - 1.0) * 100.0;
    case CapacityMapping::Additive:
        break;
    }
    return p.c_base + (c_step - 1.0) * p.c_step_size;
}

double capacity_increment_slope(const CostParams& p) noexcept
{
    return p.capacity_mapping == CapacityMapping::Multiplicative ? p.c_base * 100.0
                                                                 : p.c_step_size;
}

double small_cell_count(double n_dr, const CostParams& p, CellRounding rounding)
{
    if (!(n_dr >= 1.0)) {
        throw DomainError("n_dr must be >= 1, got " + std::to_string(n_dr));
    }
    const double count = small_cell_constant(p) / (n_dr * n_dr);
    return rounding == CellRounding::Ceiling ? std::ceil(count) : count;
}

double drone_cost(const DesignPoint& point, const CostParams& p)
{
    validate(point);
    return std::exp2(point.c_step - 1.0) * point.n_dr * p.drone_unit_cost;
}

double small_cell_upgrade_cost(const DesignPoint& point, const CostParams& p)
{
    validate(point);
    return small_cell_count(point.n_dr, p) * point.n_dr * p.smc;
}

double fronthaul_cost_annual(const DesignPoint& point, const CostParams& p)
{
    validate(point);
    const double c = capacity_increment(point.c_step, p);
    const double link_load = point.n_dr * c * p.fronthaul_multiplier;
    return small_cell_count(point.n_dr, p) * lease_increment(p.cost_a, p.cost_b, p.fhc, link_load);
}

double backhaul_cost_annual(const DesignPoint& point, const CostParams& p)
{
    validate(point);
    const double c = capacity_increment(point.c_step, p);
    const double k = small_cell_constant(p);
    const double added = p.backhaul_variant == BackhaulVariant::PerDroneLinear
                             ? point.n_dr * c * k
                             : c * k / point.n_dr;
    return p.bbu * p.cost_a *
           (std::pow((p.bhc + added) / p.mux, p.cost_b) - std::pow(p.bhc / p.mux, p.cost_b));
}

CostBreakdown tco(const DesignPoint& point, const CostParams& p, int horizon_years)
{
    if (horizon_years < 1) {
        throw DomainError("horizon_years must be >= 1, got " + std::to_string(horizon_years));
    }
    CostBreakdown out;
    out.c_dr = drone_cost(point, p);
    out.c_sc = small_cell_upgrade_cost(point, p);
    out.c_fh_annual = fronthaul_cost_annual(point, p);
    out.c_bh_annual = backhaul_cost_annual(point, p);
    out.horizon_years = horizon_years;
    out.tco = out.capex() + out.opex_total();
    return out;
}

double objective(const DesignPoint& point, const CostParams& p)
{
    return objective(point, p, 1);
}

double objective(const DesignPoint& point, const CostParams& p, int horizon_years)
{
    return tco(point, p, horizon_years).tco;
}

}  // namespace dronetco

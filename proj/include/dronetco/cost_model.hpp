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

#include <string_view>

namespace dronetco {

enum class BackhaulVariant {
    PerLinkShare,    // increment c*k/n_dr, the form carried into the optimized objective (default)
    PerDroneLinear,  // increment n_dr*c*k
};

enum class CapacityMapping {
    Additive,       // c = c_base + (c_step - 1) * c_step_size (default)
    Multiplicative, // c = c_base * (c_step - 1) * 100, kept for auditing
};

std::string_view to_string(BackhaulVariant v) noexcept;
std::string_view to_string(CapacityMapping m) noexcept;

/// Every constant of the drone-link cost model. Money in euros, capacities in
/// Mbps, areas in km^2.
struct CostParams {
    double city_area = 100.0;
    double drone_reach = 0.2;          // km of coverage radius contributed per drone
    double drone_unit_cost = 9120.0;   // d
    double cost_a = 3840.0;            // lease curve a * x^b
    double cost_b = 0.2;
    double smc = 2550.0;               // per small-cell upgrade
    double fhc = 799.0;                // existing fronthaul capacity per small cell
    double bhc = 833.0;                // existing backhaul capacity per cell
    int bbu = 6;
    double mux = 1.5;
    double c_base = 665.0;
    double c_step_size = 100.0;
    double fronthaul_multiplier = 1.0; // fronthaul burden relative to link capacity (split dependent)
    BackhaulVariant backhaul_variant = BackhaulVariant::PerLinkShare;
    CapacityMapping capacity_mapping = CapacityMapping::Additive;

    bool operator==(const CostParams&) const = default;
};

/// Throws ValidationError naming the first violated field ("params.<name>").
void validate(const CostParams& params);

/// A candidate (n_dr, c_step). Continuous while optimizing, integral on the lattice.
struct DesignPoint {
    double n_dr = 1.0;
    double c_step = 1.0;

    bool operator==(const DesignPoint&) const = default;
};

/// Throws DomainError unless n_dr >= 1 and c_step >= 1.
void validate(const DesignPoint& point);

struct CostBreakdown {
    double c_dr = 0.0;         // CAPEX
    double c_sc = 0.0;         // CAPEX
    double c_fh_annual = 0.0;  // OPEX per year
    double c_bh_annual = 0.0;  // OPEX per year
    int horizon_years = 1;
    double tco = 0.0;

    double capex() const noexcept { return c_dr + c_sc; }
    double opex_annual() const noexcept { return c_fh_annual + c_bh_annual; }
    double opex_total() const noexcept { return horizon_years * opex_annual(); }

    bool operator==(const CostBreakdown&) const = default;
};

enum class CellRounding { Continuous, Ceiling };

/// k = city_area / (pi * drone_reach^2): small cells needed with a single drone.
double small_cell_constant(const CostParams& params);

/// Provisioned link capacity in Mbps for a capacity step.
double capacity_increment(double c_step, const CostParams& params);

/// d c / d c_step under the active mapping (constant in both mappings).
double capacity_increment_slope(const CostParams& params) noexcept;

/// Ground small cells to upgrade, k / n_dr^2. Ceiling rounding is for
/// reporting only; the optimizer always uses the continuous count.
double small_cell_count(double n_dr, const CostParams& params,
                        CellRounding rounding = CellRounding::Continuous);

double drone_cost(const DesignPoint& point, const CostParams& params);
double small_cell_upgrade_cost(const DesignPoint& point, const CostParams& params);
double fronthaul_cost_annual(const DesignPoint& point, const CostParams& params);
double backhaul_cost_annual(const DesignPoint& point, const CostParams& params);

/// CAPEX plus horizon_years of OPEX. Throws DomainError for horizon_years < 1.
CostBreakdown tco(const DesignPoint& point, const CostParams& params, int horizon_years);

/// The minimized objective: one-year TCO, valid for continuous points.
double objective(const DesignPoint& point, const CostParams& params);

/// CAPEX + horizon * OPEX as a smooth function of a continuous point.
double objective(const DesignPoint& point, const CostParams& params, int horizon_years);

}  // namespace dronetco

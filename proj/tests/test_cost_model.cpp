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

#include <doctest.h>

#include <cmath>
#include <random>

#include "dronetco/cost_model.hpp"
#include "dronetco/errors.hpp"
#include "support/oracles.hpp"

using namespace dronetco;
using dronetco::testing::direct_formula;
using dronetco::testing::random_params;
using dronetco::testing::relative_error;

namespace {

// Reference city at (n_dr = 7, c_step = 1), evaluated once in double
// precision by a standalone script from the closed-form expressions.
constexpr double kSmallCellConstant = 795.7747154594766;
constexpr double kFronthaul7 = 111177.77093593392;
constexpr double kBackhaul7 = 119790.5553805167;
constexpr double kTco7 = 584697.6869481171;

CostParams multiplicative_mapping()
{
    CostParams p;
    p.capacity_mapping = CapacityMapping::Multiplicative;
    return p;
}

}  // namespace

TEST_SUITE("cost_model") {

TEST_CASE("capacity increment under both mappings")
{
    const CostParams p;
    CHECK(capacity_increment(1.0, p) == 665.0);
    CHECK(capacity_increment(3.0, p) == 865.0);
    CHECK(capacity_increment(1.0, multiplicative_mapping()) == 0.0);
    CHECK(capacity_increment(2.0, multiplicative_mapping()) == 66500.0);
    CHECK_THROWS_AS(capacity_increment(0.5, p), DomainError);
}

TEST_CASE("small cell count follows the inverse-square law")
{
    const CostParams p;
    CHECK(small_cell_count(1.0, p) == doctest::Approx(kSmallCellConstant).epsilon(1e-12));
    CHECK(small_cell_count(2.0, p) == doctest::Approx(198.94367886486916).epsilon(1e-12));
    for (double n = 1.0; n <= 100.0; n += 0.37) {
        CHECK(relative_error(small_cell_count(n, p) * n * n, small_cell_count(1.0, p)) <= 1e-12);
    }
    CHECK(small_cell_count(7.0, p, CellRounding::Ceiling) == 17.0);
    CHECK_THROWS_AS(small_cell_count(0.99, p), DomainError);
}

TEST_CASE("drone cost doubles per capacity step")
{
    const CostParams p;
    CHECK(drone_cost({7.0, 1.0}, p) == 63840.0);
    CHECK(drone_cost({7.0, 2.0}, p) == 127680.0);
    CHECK_THROWS_AS(drone_cost({0.0, 1.0}, p), DomainError);
    CHECK_THROWS_AS(drone_cost({1.0, 0.0}, p), DomainError);
}

TEST_CASE("small cell upgrade cost")
{
    CostParams p;
    CHECK(small_cell_upgrade_cost({1.0, 1.0}, p) == doctest::Approx(2029225.5244216654).epsilon(1e-12));
    CHECK(small_cell_upgrade_cost({7.0, 1.0}, p) == doctest::Approx(289889.3606316665).epsilon(1e-12));
    const double before = small_cell_upgrade_cost({3.0, 2.0}, p);
    p.smc *= 2.0;
    CHECK(small_cell_upgrade_cost({3.0, 2.0}, p) == doctest::Approx(2.0 * before).epsilon(1e-14));
}

TEST_CASE("fronthaul and backhaul at the reference point")
{
    const CostParams p;
    CHECK(fronthaul_cost_annual({7.0, 1.0}, p) == doctest::Approx(kFronthaul7).epsilon(1e-12));
    CHECK(backhaul_cost_annual({7.0, 1.0}, p) == doctest::Approx(kBackhaul7).epsilon(1e-12));
    CHECK(tco({7.0, 1.0}, p, 1).tco == doctest::Approx(kTco7).epsilon(1e-12));
}

TEST_CASE("zero capacity increment costs nothing on the transport network")
{
    const CostParams p = multiplicative_mapping();
    for (double n : {1.0, 2.5, 7.0, 40.0}) {
        CHECK(fronthaul_cost_annual({n, 1.0}, p) == 0.0);
        CHECK(backhaul_cost_annual({n, 1.0}, p) == 0.0);
        CostParams linear = p;
        linear.backhaul_variant = BackhaulVariant::PerDroneLinear;
        CHECK(backhaul_cost_annual({n, 1.0}, linear) == 0.0);
    }
}

TEST_CASE("fronthaul grows with capacity")
{
    const CostParams p;
    double previous = 0.0;
    for (double s = 1.0; s <= 10.0; s += 0.5) {
        const double v = fronthaul_cost_annual({5.0, s}, p);
        CHECK(v > previous);
        previous = v;
    }
}

TEST_CASE("per-drone-linear backhaul exceeds per-link-share for n_dr >= 2")
{
    CostParams share;
    CostParams linear;
    linear.backhaul_variant = BackhaulVariant::PerDroneLinear;
    for (int n = 1; n <= 12; ++n) {
        for (int s = 1; s <= 5; ++s) {
            const double a = backhaul_cost_annual({double(n), double(s)}, linear);
            const double b = backhaul_cost_annual({double(n), double(s)}, share);
            if (n == 1) {
                CHECK(a == doctest::Approx(b).epsilon(1e-14));
            } else {
                CHECK(a > b);
            }
        }
    }
}

TEST_CASE("horizon accumulates OPEX linearly")
{
    const CostParams p;
    const CostBreakdown one = tco({7.0, 1.0}, p, 1);
    const CostBreakdown five = tco({7.0, 1.0}, p, 5);
    CHECK(five.tco - one.tco == doctest::Approx(4.0 * one.opex_annual()).epsilon(1e-12));
    CHECK(one.capex() + one.opex_total() == one.tco);
    CHECK_THROWS_AS(tco({7.0, 1.0}, p, 0), DomainError);
}

TEST_CASE("objective equals one-year tco on the integer lattice")
{
    const CostParams p;
    for (int n = 1; n <= 20; ++n) {
        for (int s = 1; s <= 10; ++s) {
            const DesignPoint x{double(n), double(s)};
            CHECK(objective(x, p) == tco(x, p, 1).tco);
        }
    }
}

TEST_CASE("objective is finite between lattice points and increases with drone cost")
{
    CostParams p;
    for (double n = 1.0; n <= 30.0; n += 0.73) {
        for (double s = 1.0; s <= 8.0; s += 0.41) {
            CHECK(std::isfinite(objective({n, s}, p)));
        }
    }
    const double base = objective({4.3, 1.7}, p);
    p.drone_unit_cost += 1.0;
    CHECK(objective({4.3, 1.7}, p) > base);
}

TEST_CASE("property: components non-negative, monotone, and match the direct formula")
{
    std::mt19937_64 rng(20260101);
    for (int trial = 0; trial < 2000; ++trial) {
        const CostParams p = random_params(rng);
        REQUIRE_NOTHROW(validate(p));
        const double n = std::uniform_real_distribution<double>(1.0, 40.0)(rng);
        const double s = std::uniform_real_distribution<double>(1.0, 6.0)(rng);
        const int horizon = std::uniform_int_distribution<int>(1, 10)(rng);
        const CostBreakdown b = tco({n, s}, p, horizon);
        CHECK(b.c_dr >= 0.0);
        CHECK(b.c_sc >= 0.0);
        CHECK(b.c_fh_annual >= 0.0);
        CHECK(b.c_bh_annual >= 0.0);
        CHECK(std::abs(b.tco - (b.c_dr + b.c_sc + horizon * (b.c_fh_annual + b.c_bh_annual))) <= 1e-12 * b.tco);

        const auto o = direct_formula(n, s, p);
        CHECK(relative_error(b.c_dr, o.drones) <= 1e-12);
        CHECK(relative_error(b.c_sc, o.small_cells) <= 1e-12);
        if (o.fronthaul > 0.0) CHECK(relative_error(b.c_fh_annual, o.fronthaul) <= 1e-9);
        if (o.backhaul > 0.0) CHECK(relative_error(b.c_bh_annual, o.backhaul) <= 1e-9);

        CHECK(small_cell_upgrade_cost({n + 0.5, s}, p) < b.c_sc);
        CHECK(drone_cost({n + 0.5, s}, p) > b.c_dr);
        CHECK(drone_cost({n, s + 0.5}, p) > b.c_dr);
    }
}

TEST_CASE("parameter validation names the field")
{
    auto field_of = [](CostParams p) -> std::string {
        try {
            validate(p);
        } catch (const ValidationError& e) {
            return e.field();
        }
        return "";
    };
    CHECK(field_of(CostParams{}).empty());
    CostParams p;
    p.mux = 0.5;
    CHECK(field_of(p) == "params.mux");
    p = {};
    p.cost_b = 1.0;
    CHECK(field_of(p) == "params.cost_b");
    p = {};
    p.bbu = 0;
    CHECK(field_of(p) == "params.bbu");
    p = {};
    p.city_area = std::nan("");
    CHECK(field_of(p) == "params.city_area");
    p = {};
    p.fronthaul_multiplier = 0.9;
    CHECK(field_of(p) == "params.fronthaul_multiplier");
}

}

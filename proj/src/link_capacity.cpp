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

#include "dronetco/link_capacity.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "dronetco/errors.hpp"

namespace dronetco {

namespace {

constexpr double kDoublingDb = 3.0102999566398120;  // 10*log10(2)

void require_bandwidth(double bandwidth_hz)
{
    if (!(bandwidth_hz > 0.0)) {
        throw DomainError("bandwidth must be > 0 Hz, got " + std::to_string(bandwidth_hz));
    }
}

}  // namespace

double shannon_capacity(double bandwidth_hz, double snr_db)
{
    require_bandwidth(bandwidth_hz);
    const double snr = std::pow(10.0, snr_db / 10.0);
    // log1p keeps precision at low SNR.
    const double spectral_efficiency = std::log1p(snr) / std::numbers::ln2;
    return bandwidth_hz * spectral_efficiency / 1e6;
}

double required_snr(double capacity_mbps, double bandwidth_hz)
{
    require_bandwidth(bandwidth_hz);
    if (!(capacity_mbps > 0.0)) {
        throw DomainError("capacity must be > 0 Mbps, got " + std::to_string(capacity_mbps));
    }
    const double spectral_efficiency = capacity_mbps * 1e6 / bandwidth_hz;
    return 10.0 * std::log10(std::expm1(spectral_efficiency * std::numbers::ln2));
}

LinkBudget make_link_budget(double bandwidth_hz, double snr_db)
{
    return {bandwidth_hz, snr_db, shannon_capacity(bandwidth_hz, snr_db)};
}

std::vector<CapacityStepSnr> capacity_step_snr(const CostParams& params,
                                               std::span<const int> c_steps,
                                               double bandwidth_hz)
{
    std::vector<CapacityStepSnr> rows;
    rows.reserve(c_steps.size());
    for (int step : c_steps) {
        CapacityStepSnr row;
        row.c_step = step;
        row.capacity_mbps = capacity_increment(step, params);
        row.required_snr_db = row.capacity_mbps > 0.0
                                  ? required_snr(row.capacity_mbps, bandwidth_hz)
                                  : -std::numeric_limits<double>::infinity();
        if (rows.empty()) {
            row.nominal_snr_db = row.required_snr_db;
        } else {
            row.delta_db = row.required_snr_db - rows.back().required_snr_db;
            row.nominal_snr_db = rows.front().nominal_snr_db +
                                 kDoublingDb * (step - rows.front().c_step);
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace dronetco

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

#include <span>
#include <vector>

#include "dronetco/cost_model.hpp"

namespace dronetco {

inline constexpr double kDefaultBandwidthHz = 100e6;

struct LinkBudget {
    double bandwidth_hz = kDefaultBandwidthHz;
    double snr_db = 0.0;
    double capacity_mbps = 0.0;
};

/// Shannon limit B * log2(1 + SNR) in Mbps. Throws DomainError if bandwidth <= 0.
double shannon_capacity(double bandwidth_hz, double snr_db);

/// SNR in dB at which the Shannon limit equals capacity_mbps.
double required_snr(double capacity_mbps, double bandwidth_hz);

LinkBudget make_link_budget(double bandwidth_hz, double snr_db);

// One row of the capacity-step annotation: what SNR each provisioned
// capacity needs, and how far that is from the nominal +3 dB per step.
struct CapacityStepSnr {
    int c_step = 1;
    double capacity_mbps = 0.0;
    double required_snr_db = 0.0;
    double delta_db = 0.0;            // vs previous row, 0 for the first
    double nominal_snr_db = 0.0;      // first row's SNR + 3.0103 dB per step
};

std::vector<CapacityStepSnr> capacity_step_snr(const CostParams& params,
                                               std::span<const int> c_steps,
                                               double bandwidth_hz = kDefaultBandwidthHz);

}  // namespace dronetco

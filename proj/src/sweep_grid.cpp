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

#include "dronetco/sweep_grid.hpp"

#include <stdexcept>

namespace dronetco {

void SweepGrid::compute_row_argmin()
{
    if (cells.size() != rows.size()) {
        throw std::logic_error("SweepGrid: cell rows do not match row axis");
    }
    row_argmin.assign(rows.size(), 0);
    for (std::size_t r = 0; r < cells.size(); ++r) {
        const auto& row = cells[r];
        if (row.size() != columns.size()) {
            throw std::logic_error("SweepGrid: cell columns do not match column axis");
        }
        std::size_t best = 0;
        for (std::size_t c = 1; c < row.size(); ++c) {
            if (row[c] < row[best]) {
                best = c;
            }
        }
        row_argmin[r] = best;
    }
}

}  // namespace dronetco

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

#include <cstddef>
#include <string>
#include <vector>

namespace dronetco {

/// Labeled 2-D table of TCO values. cells[r][c] belongs to rows[r] x columns[c];
/// row_argmin[r] is the first column index attaining the row minimum.
struct SweepGrid {
    std::string row_label;
    std::vector<double> rows;
    std::string column_label;
    std::vector<double> columns;
    std::vector<std::vector<double>> cells;
    std::vector<std::size_t> row_argmin;

    double at(std::size_t row, std::size_t column) const { return cells.at(row).at(column); }

    // Fills row_argmin from cells. Ties go to the smaller column index.
    void compute_row_argmin();

    bool operator==(const SweepGrid&) const = default;
};

}  // namespace dronetco

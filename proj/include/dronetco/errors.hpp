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

#include <stdexcept>
#include <string>

namespace dronetco {

// Input outside the mathematical domain of a model operation (e.g. n_dr < 1).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A scenario or parameter set violates an invariant. field() names the
// offending key using its scenario-file path, e.g. "params.mux".
class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class UnknownKeyError : public ValidationError {
public:
    explicit UnknownKeyError(const std::string& key)
        : ValidationError(key, "unknown key") {}
};

// Malformed scenario text; what() carries line and column.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : std::runtime_error(message), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace dronetco

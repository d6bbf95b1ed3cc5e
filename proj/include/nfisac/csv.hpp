// SPDX-License-Identifier: Apache-2.0
//
// nf-isac: near-field ISAC channel models and rate analysis
// Copyright (C) 2026 The nf-isac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace nfisac
{

/// Shortest decimal string that round-trips to `x`; '.' separator regardless of locale.
/// Non-finite values print as "nan", "inf" and "-inf".
std::string format_double(double x);

/// A named CSV table; the header row is `columns`.
struct Table
{
    std::string name; ///< file stem
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(const std::vector<double> &values);
    void add_row(std::vector<std::string> cells);
};

void write_csv(std::ostream &os, const Table &t);
std::string to_csv(const Table &t);

/// Writes `dir/<name>.csv`, creating `dir` if needed. Returns the path written.
std::filesystem::path write_csv(const std::filesystem::path &dir, const Table &t);

} // namespace nfisac

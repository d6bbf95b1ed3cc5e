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

#include "nfisac/csv.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nfisac
{

struct CriterionResult
{
    int id = 0;
    std::string name;
    bool passed = false;
    double metric = 0.0;    ///< worst measured value of the criterion's headline quantity
    double threshold = 0.0; ///< bound the metric is compared against
    std::string detail;     ///< human-readable sub-check summary (not part of the CSV)
};

struct ValidationOptions
{
    std::uint64_t seed = 42;
    unsigned threads = 0;
};

struct ValidationReport
{
    std::vector<CriterionResult> criteria;
    double seconds = 0.0;

    bool all_passed() const;
    /// Pass/fail table without timings or free text, so identical runs give identical bytes.
    Table table() const;
};

/// Runs acceptance criteria 1-10 (see README). Never throws for a failing check; an exception
/// inside a criterion marks it failed with the message in `detail`.
ValidationReport validate_suite(const ValidationOptions &opts = {});

/// validate_suite twice, then appends criterion 11: both tables must be byte-identical.
ValidationReport validate_with_determinism(const ValidationOptions &opts = {});

} // namespace nfisac

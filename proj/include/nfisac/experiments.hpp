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

#include "nfisac/config.hpp"
#include "nfisac/csv.hpp"

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace nfisac
{

/// Tables and scalars produced by one experiment run.
struct RunResult
{
    std::vector<Table> tables;
    std::vector<std::pair<std::string, double>> derived; ///< e.g. zeta, epsilon_c, C_rho estimates
    std::vector<std::pair<std::string, double>> timings; ///< wall-clock seconds per stage
};

/// Defaults for experiment `e`; dl_r uses a 1001 x 1001 array, everything else the 15 x 15 default.
ExperimentConfig default_config(Experiment e);

/// Validates `cfg` (ConfigError) and runs it. Numerical failures surface as NumericalError or DomainError.
RunResult run_experiment(const ExperimentConfig &cfg);

/// JSON summary: effective configuration, derived constants, timings and written files.
std::string summary_json(const ExperimentConfig &cfg, const RunResult &result,
                         const std::vector<std::filesystem::path> &files);

/// Writes every table to `cfg.out_dir` plus `<experiment>_summary.json`. Returns all paths written.
std::vector<std::filesystem::path> write_outputs(const ExperimentConfig &cfg, const RunResult &result);

} // namespace nfisac

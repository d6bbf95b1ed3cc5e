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

#include "nfisac/channels.hpp"
#include "nfisac/dl_rates.hpp"
#include "nfisac/oracles.hpp"

#include <cstdint>
#include <filesystem>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nfisac
{

enum class Experiment
{
    DlSnr,
    DlN,
    DlR,
    DlRegion,
    UlSnr,
    UlN,
    UlRegion,
    Ccf,
};

std::string_view to_string(Experiment e) noexcept;
std::optional<Experiment> parse_experiment(std::string_view name);

enum class SweepScale
{
    Linear,
    Log,
};

/// `points` values from start to stop, equally spaced on a linear or logarithmic axis.
struct SweepSpec
{
    double start = 0.0;
    double stop = 1.0;
    int points = 2;
    SweepScale scale = SweepScale::Linear;

    std::vector<double> values() const;
};

struct GeometrySpec
{
    int n_y = 15;
    int n_z = 15;
    double wavelength = 0.125;
    std::optional<double> spacing;      ///< default wavelength / 2
    std::optional<double> element_area; ///< default wavelength^2 / (4 pi)

    ArrayGeometry build() const;
    ArrayGeometry build(int n_y, int n_z) const;
};

struct PlacementSpec
{
    double r = 10.0;
    double theta = std::numbers::pi / 4;
    double phi = std::numbers::pi / 6;

    Placement build() const { return {r, theta, phi}; }
};

/// System parameters with powers in dB relative to unit noise power.
struct PowerSpec
{
    double p_db = 90.0;
    double p_c_db = 60.0;
    double p_s_db = 85.0;
    int l_frame = 4;
    double alpha_s = 1.0;
    double kappa = 0.5;
    double iota = 0.5;

    SystemParams build() const;
};

struct ExperimentConfig
{
    Experiment experiment = Experiment::DlSnr;
    GeometrySpec geometry;
    PlacementSpec cu{10.0, std::numbers::pi / 4, std::numbers::pi / 6};
    PlacementSpec target{5.0, std::numbers::pi / 4, -std::numbers::pi / 6};
    PowerSpec powers;
    std::vector<ChannelModel> models; ///< empty selects the experiment default
    std::optional<SweepSpec> sweep;   ///< empty selects the experiment default

    int tau_points = 201;
    int sigma_points = 101;
    int fdsac_points = 101; ///< per axis

    std::vector<int> ccf_ladder{15, 31, 63, 127, 255, 501};
    int ccf_samples = 10000;
    int ccf_last_rung_samples = 1000;
    UniformPlacementBox ccf_box;

    std::filesystem::path out_dir = ".";
    std::uint64_t seed = 42;
    unsigned threads = 0;

    /// Throws ConfigError on any inconsistent value.
    void validate() const;

    SweepSpec effective_sweep() const;
    std::vector<ChannelModel> effective_models() const;
};

/// Sweep used when the configuration does not give one.
SweepSpec default_sweep(Experiment e);

/// Overlays a YAML file onto `cfg`. Unknown keys and malformed values raise ConfigError.
void apply_config_file(ExperimentConfig &cfg, const std::filesystem::path &file);

/// Same for YAML text, for tests and embedding.
void apply_config_text(ExperimentConfig &cfg, std::string_view yaml);

} // namespace nfisac

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

#include "nfisac/geometry.hpp"

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nfisac
{

/// Per-element channel models.
///
/// Accurate  - free-space loss with effective-aperture and polarization loss (y-aligned polarization)
/// NoPolar   - Accurate with the polarization loss removed
/// UPW       - uniform planar wave: common gain, linear phase ramp
/// USW       - uniform spherical wave: common gain, exact phase
/// NUSW      - non-uniform spherical wave: per-element free-space gain, exact phase
enum class ChannelModel
{
    Accurate,
    NoPolar,
    UPW,
    USW,
    NUSW,
};

inline constexpr ChannelModel all_channel_models[] = {
    ChannelModel::Accurate, ChannelModel::NoPolar, ChannelModel::UPW, ChannelModel::USW, ChannelModel::NUSW};

std::string_view to_string(ChannelModel m) noexcept;

/// Accepts "accurate", "nopolar", "upw", "usw", "nusw" (case-insensitive).
std::optional<ChannelModel> parse_channel_model(std::string_view name);

/// True for the models whose squared norm has a closed form.
bool has_closed_form_norm(ChannelModel m) noexcept;

struct ChannelVector
{
    ChannelModel model;
    Placement placement;
    ArrayGeometry geometry;
    std::vector<std::complex<double>> gains;

    std::span<const std::complex<double>> view() const noexcept { return gains; }
    std::size_t size() const noexcept { return gains.size(); }
    double norm_sq() const noexcept;
};

/// Builds the N-element channel vector for one placement and model.
/// Large arrays are filled in parallel; `threads == 0` uses all hardware threads.
ChannelVector build_channel(const ArrayGeometry &g, const Placement &p, ChannelModel m, unsigned threads = 0);

/// Closed-form primitive of the accurate-model power density over [0,y] x [0,z].
double delta(double psi, double y, double z);

/// Closed-form primitive of the polarization-free power density (solid-angle form).
double delta_no_polar(double psi, double y, double z);

/// Closed-form ||h||^2 for Accurate, NoPolar, UPW and USW.
/// Throws UnsupportedModelError for NUSW.
double closed_form_norm_sq(const ArrayGeometry &g, const Placement &p, ChannelModel m);

/// Channel correlation factor |hc^H hs|^2 / (||hc||^2 ||hs||^2).
double ccf(const ChannelVector &hc, const ChannelVector &hs);

} // namespace nfisac

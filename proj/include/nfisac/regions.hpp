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

#include "nfisac/dl_rates.hpp"
#include "nfisac/pareto.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nfisac
{

/// Sampled upper-right frontier of an SR-CR region.
///
/// `points` are sorted by nonincreasing SR and include the max-SR and max-CR
/// extremes. `parameters[i]` holds the sweep value(s) behind `points[i]`; the
/// second entry is NaN for one-dimensional sweeps. `sweep_parameterization`
/// names them, e.g. "tau" or "kappa,iota".
///
/// Regions whose generating curve is known also carry `max_cr_at`: the largest
/// CR achievable with SR >= s, or -inf beyond the largest SR. contains() uses it
/// so that containment does not depend on the sampling of the outer frontier.
struct RegionBoundary
{
    std::vector<RatePair> points;
    std::vector<std::array<double, 2>> parameters;
    std::string label;
    std::string sweep_parameterization;
    std::function<double(double)> max_cr_at;
};

/// Keeps the points not dominated by any other; result sorted by decreasing SR and increasing CR.
RegionBoundary pareto_filter(const RegionBoundary &region);

/// tau-sweep of the two-channel beamformer over `grid_size` points of [0, 1] (tau = 0 first).
RegionBoundary downlink_isac_region(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp,
                                    int grid_size = 201, NormPolicy policy = NormPolicy::ElementSum,
                                    unsigned threads = 1);

/// Frontier of the sigma-sweep solutions, in sweep order.
RegionBoundary sigma_region(const std::vector<ParetoSolution> &sweep);

enum class LinkDirection
{
    Downlink,
    Uplink,
};

/// Pareto-filtered FDSAC frontier. Downlink sweeps (kappa, iota) on a grid_kappa x grid_iota grid;
/// uplink sweeps kappa only and ignores grid_iota.
RegionBoundary fdsac_region(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp, int grid_kappa,
                            int grid_iota, LinkDirection direction, NormPolicy policy = NormPolicy::ElementSum,
                            unsigned threads = 1);

/// Full-bandwidth power-split region: SR = (1/L) log2(1 + s p L alpha_s ||hs||^4),
/// CR = log2(1 + (1 - s) p ||hc||^2) for s on `grid_size` points of [0, 1].
RegionBoundary auxiliary_region(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp,
                                int grid_size = 101, NormPolicy policy = NormPolicy::ElementSum);

/// Time-sharing segment between the S-C (varrho = 1, first) and C-C uplink pairs.
RegionBoundary uplink_isac_region(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp,
                                  int grid_size = 201, NormPolicy policy = NormPolicy::ElementSum);

/// Same segment between the worst-case corners (SR_sc, CR_sc lower) and (SR_cc lower, CR_cc).
RegionBoundary uplink_inner_bound(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp,
                                  int grid_size = 201, NormPolicy policy = NormPolicy::ElementSum);

struct ContainmentResult
{
    bool contained = false;
    std::optional<RatePair> witness; ///< first inner point not dominated, if any

    explicit operator bool() const noexcept { return contained; }
};

/// True iff each inner point is dominated, within `tolerance` in both rates, by some outer
/// point or by the exact outer frontier when `outer.max_cr_at` is set.
/// Throws DomainError when either region is empty.
ContainmentResult contains(const RegionBoundary &outer, const RegionBoundary &inner, double tolerance = 1e-9);

/// Symmetric vertex-to-polyline Hausdorff distance after scaling SR and CR by their maxima over both regions.
double normalized_hausdorff(const RegionBoundary &a, const RegionBoundary &b);

} // namespace nfisac

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
#include "nfisac/ul_rates.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace nfisac
{

/// Sum of |h_n|^2 over the explicit channel vector with Kahan summation. Any model.
double norm_sq_bruteforce(const ArrayGeometry &g, const Placement &p, ChannelModel m);

/// Largest array accepted by the dense-inverse oracle.
inline constexpr std::size_t dense_oracle_max_size = 4096;

/// Uplink rate from an explicitly inverted interference-plus-noise matrix:
/// CommCentric returns SR with A = p_c hc hc^H + I, SensingCentric returns CR with
/// R_s = p_s alpha_s ||hs||^2 hs hs^H + I. Throws DomainError when N > dense_oracle_max_size.
double ul_quadratic_form_oracle(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp,
                                UplinkDesign design);

/// Counter-based stream: splitmix64 over a (seed, index)-derived state.
class SampleRng
{
public:
    SampleRng(std::uint64_t seed, std::uint64_t stream) noexcept;

    std::uint64_t next() noexcept;
    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept;
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

private:
    std::uint64_t state_;
};

/// Raw spherical coordinates; may describe an invalid placement (rejected by the estimator).
struct PlacementDraw
{
    double r;
    double theta;
    double phi;

    bool operator==(const PlacementDraw &) const = default;
};

struct PlacementPairDraw
{
    PlacementDraw cu;
    PlacementDraw target;

    bool operator==(const PlacementPairDraw &) const = default;
};

using PlacementSampler = std::function<PlacementPairDraw(SampleRng &)>;

/// Independent CU and target with r ~ U[r_min, r_max], theta ~ U[theta_min, theta_max], phi ~ U[phi_min, phi_max].
struct UniformPlacementBox
{
    double r_min = 5.0;
    double r_max = 50.0;
    double theta_min = 0.25 * 3.141592653589793;
    double theta_max = 0.75 * 3.141592653589793;
    double phi_min = -3.141592653589793 / 3.0;
    double phi_max = 3.141592653589793 / 3.0;
};

PlacementSampler uniform_placement_sampler(const UniformPlacementBox &box = {});

/// Always returns the same pair.
PlacementSampler constant_placement_sampler(const Placement &cu, const Placement &target);

struct CcfEstimate
{
    std::vector<ArrayGeometry> n_ladder;
    std::vector<double> mean_rho;        ///< one per rung
    std::vector<int> samples_per_rung;
    int sample_count = 0;                ///< samples at the largest rung
    std::uint64_t rng_seed = 0;
    double converged_value = 0.0;        ///< mean at the largest rung
    std::size_t rejected = 0;            ///< invalid draws resampled across all rungs

    /// |m_last - m_prev| / m_last; NaN with fewer than two rungs.
    double last_relative_change() const;
};

/// Mean ccf over random placement pairs at each rung of a ladder of geometries.
///
/// Sample k of every rung uses stream (seed, k), so rungs see the same placements
/// and results do not depend on `threads`. Draws that fail Placement or
/// check_placement validation are redrawn on the same stream. Repeated identical
/// pairs are evaluated once.
///
/// `samples` applies to every rung except the last, which uses `last_rung_samples`
/// when given. Throws DomainError when samples < 100, the ladder is not strictly
/// increasing in N, or more than 90% of draws are rejected.
CcfEstimate ccf_limit_estimate(const std::vector<ArrayGeometry> &g_ladder, const PlacementSampler &sampler,
                               int samples, std::uint64_t seed, ChannelModel m,
                               std::optional<int> last_rung_samples = std::nullopt, unsigned threads = 0);

/// Least-squares slope of rate against log2(p) over the upper half of a geometric power grid.
/// Throws DomainError for fewer than two points, a non-geometric grid or non-monotone rates.
double slope_estimate(const std::function<double(double)> &rate_fn, const std::vector<double> &p_grid);

/// `n` powers from p_lo_db to p_hi_db (dB), equally spaced in dB, returned as linear values.
std::vector<double> db_power_grid(double p_lo_db, double p_hi_db, int n);

} // namespace nfisac

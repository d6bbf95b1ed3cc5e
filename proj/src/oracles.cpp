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

#include "nfisac/oracles.hpp"

#include "nfisac/errors.hpp"
#include "nfisac/numerics.hpp"
#include "nfisac/parallel.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

namespace nfisac
{

double norm_sq_bruteforce(const ArrayGeometry &g, const Placement &p, ChannelModel m)
{
    const ChannelVector h = build_channel(g, p, m);
    double sum = 0.0;
    double c = 0.0;
    for (const auto &x : h.gains)
    {
        const double y = std::norm(x) - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double ul_quadratic_form_oracle(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp,
                                UplinkDesign design)
{
    const std::size_t n = hc.size();
    if (n != hs.size())
        throw DomainError("ul_quadratic_form_oracle: channel lengths differ");
    if (n > dense_oracle_max_size)
        throw DomainError("ul_quadratic_form_oracle: array too large for a dense inverse");

    using Vec = Eigen::VectorXcd;
    using Mat = Eigen::MatrixXcd;
    const Vec c = Eigen::Map<const Vec>(hc.gains.data(), static_cast<Eigen::Index>(n));
    const Vec s = Eigen::Map<const Vec>(hs.gains.data(), static_cast<Eigen::Index>(n));
    const double ns = s.squaredNorm();
    const Mat eye = Mat::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));

    if (design == UplinkDesign::CommCentric)
    {
        const Mat A = sp.p_c * c * c.adjoint() + eye;
        const double q = (s.adjoint() * A.inverse() * s)(0, 0).real();
        return std::log2(1.0 + sp.p_s * sp.l_frame * sp.alpha_s * ns * q) / sp.l_frame;
    }
    const Mat Rs = sp.p_s * sp.alpha_s * ns * s * s.adjoint() + eye;
    const double q = (c.adjoint() * Rs.inverse() * c)(0, 0).real();
    return std::log2(1.0 + sp.p_c * q);
}

namespace
{

std::uint64_t splitmix(std::uint64_t &x) noexcept
{
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t stream) noexcept
{
    std::uint64_t x = seed;
    const std::uint64_t a = splitmix(x);
    x = stream ^ 0x5851f42d4c957f2dULL;
    state_ = a ^ splitmix(x);
}

std::uint64_t SampleRng::next() noexcept { return splitmix(state_); }

double SampleRng::uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

PlacementSampler uniform_placement_sampler(const UniformPlacementBox &box)
{
    return [box](SampleRng &rng)
    {
        auto draw = [&]
        {
            const double r = rng.uniform(box.r_min, box.r_max);
            const double theta = rng.uniform(box.theta_min, box.theta_max);
            const double phi = rng.uniform(box.phi_min, box.phi_max);
            return PlacementDraw{r, theta, phi};
        };
        const PlacementDraw cu = draw();
        return PlacementPairDraw{cu, draw()};
    };
}

PlacementSampler constant_placement_sampler(const Placement &cu, const Placement &target)
{
    const PlacementPairDraw pair{{cu.r(), cu.theta(), cu.phi()}, {target.r(), target.theta(), target.phi()}};
    return [pair](SampleRng &) { return pair; };
}

double CcfEstimate::last_relative_change() const
{
    if (mean_rho.size() < 2)
        return std::numeric_limits<double>::quiet_NaN();
    const double a = mean_rho[mean_rho.size() - 2];
    const double b = mean_rho.back();
    return std::abs(b - a) / std::abs(b);
}

namespace
{

constexpr int max_redraws = 1000;

bool valid_draw(const ArrayGeometry &g, const PlacementDraw &d)
{
    try
    {
        const Placement p(d.r, d.theta, d.phi);
        if (d.r <= std::max(std::sqrt(g.element_area()), g.spacing()))
            return false;
        return true;
    }
    catch (const DomainError &)
    {
        return false;
    }
}

auto key(const PlacementPairDraw &d)
{
    return std::make_tuple(d.cu.r, d.cu.theta, d.cu.phi, d.target.r, d.target.theta, d.target.phi);
}

} // namespace

CcfEstimate ccf_limit_estimate(const std::vector<ArrayGeometry> &g_ladder, const PlacementSampler &sampler,
                               int samples, std::uint64_t seed, ChannelModel m, std::optional<int> last_rung_samples,
                               unsigned threads)
{
    if (g_ladder.empty())
        throw DomainError("ccf_limit_estimate: empty ladder");
    if (samples < 100 || (last_rung_samples && *last_rung_samples < 100))
        throw DomainError("ccf_limit_estimate: at least 100 samples per rung are required");
    for (std::size_t i = 1; i < g_ladder.size(); ++i)
        if (g_ladder[i].size() <= g_ladder[i - 1].size())
            throw DomainError("ccf_limit_estimate: ladder must be strictly increasing in N");

    CcfEstimate est;
    est.n_ladder = g_ladder;
    est.rng_seed = seed;
    std::size_t draws = 0;

    for (std::size_t rung = 0; rung < g_ladder.size(); ++rung)
    {
        const ArrayGeometry &g = g_ladder[rung];
        const bool last = rung + 1 == g_ladder.size();
        const int n = last && last_rung_samples ? *last_rung_samples : samples;

        std::vector<PlacementPairDraw> pairs;
        pairs.reserve(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
        {
            SampleRng rng(seed, static_cast<std::uint64_t>(k));
            int attempts = 0;
            for (;;)
            {
                const PlacementPairDraw d = sampler(rng);
                ++draws;
                ++attempts;
                if (valid_draw(g, d.cu) && valid_draw(g, d.target))
                {
                    pairs.push_back(d);
                    break;
                }
                ++est.rejected;
                if (attempts >= max_redraws)
                    throw DomainError("ccf_limit_estimate: sampler keeps yielding invalid placements");
            }
        }

        // Evaluate each distinct pair once; averaging stays in sample order.
        std::map<decltype(key(pairs[0])), std::size_t> slot;
        std::vector<std::size_t> index(pairs.size());
        std::vector<PlacementPairDraw> unique;
        for (std::size_t k = 0; k < pairs.size(); ++k)
        {
            auto [it, inserted] = slot.try_emplace(key(pairs[k]), unique.size());
            if (inserted)
                unique.push_back(pairs[k]);
            index[k] = it->second;
        }
        std::vector<double> rho(unique.size());
        parallel_for(unique.size(), threads,
                     [&](std::size_t u)
                     {
                         const PlacementPairDraw &d = unique[u];
                         const Placement cu(d.cu.r, d.cu.theta, d.cu.phi);
                         const Placement target(d.target.r, d.target.theta, d.target.phi);
                         const unsigned inner = unique.size() == 1 ? threads : 1;
                         rho[u] = ccf(build_channel(g, cu, m, inner), build_channel(g, target, m, inner));
                     });
        CompensatedSum mean;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            mean.add(rho[index[k]]);
        est.mean_rho.push_back(mean.value() / static_cast<double>(n));
        est.samples_per_rung.push_back(n);
    }

    if (static_cast<double>(est.rejected) > 0.9 * static_cast<double>(draws))
    {
        std::ostringstream msg;
        msg << "ccf_limit_estimate: " << est.rejected << " of " << draws << " placement draws rejected";
        throw DomainError(msg.str());
    }
    est.sample_count = est.samples_per_rung.back();
    est.converged_value = est.mean_rho.back();
    return est;
}

double slope_estimate(const std::function<double(double)> &rate_fn, const std::vector<double> &p_grid)
{
    const std::size_t n = p_grid.size();
    if (n < 2)
        throw DomainError("slope_estimate: need at least two powers");
    for (double p : p_grid)
        if (!(p > 0.0) || !std::isfinite(p))
            throw DomainError("slope_estimate: powers must be positive and finite");
    const double ratio = p_grid[1] / p_grid[0];
    if (!(ratio > 1.0))
        throw DomainError("slope_estimate: powers must increase");
    for (std::size_t i = 2; i < n; ++i)
        if (std::abs(p_grid[i] / p_grid[i - 1] / ratio - 1.0) > 1e-9)
            throw DomainError("slope_estimate: powers are not in geometric progression");

    std::vector<double> rates(n);
    for (std::size_t i = 0; i < n; ++i)
        rates[i] = rate_fn(p_grid[i]);
    for (std::size_t i = 1; i < n; ++i)
        if (!(rates[i] >= rates[i - 1]))
        {
            std::ostringstream msg;
            msg << "slope_estimate: rate is not monotone in power (index " << i << ": " << rates[i - 1] << " -> "
                << rates[i] << ")";
            throw DomainError(msg.str());
        }

    const std::size_t first = n / 2 == n - 1 ? 0 : n / 2;
    const std::size_t count = n - first;
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = first; i < n; ++i)
    {
        mx += std::log2(p_grid[i]);
        my += rates[i];
    }
    mx /= static_cast<double>(count);
    my /= static_cast<double>(count);
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = first; i < n; ++i)
    {
        const double dx = std::log2(p_grid[i]) - mx;
        sxy += dx * (rates[i] - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

std::vector<double> db_power_grid(double p_lo_db, double p_hi_db, int n)
{
    if (n < 2)
        throw DomainError("db_power_grid: need at least two points");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        out.push_back(db_to_linear(p_lo_db + (p_hi_db - p_lo_db) * k / (n - 1)));
    return out;
}

} // namespace nfisac

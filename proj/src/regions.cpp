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

#include "nfisac/regions.hpp"

#include "nfisac/errors.hpp"
#include "nfisac/parallel.hpp"
#include "nfisac/ul_rates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace nfisac
{

namespace
{

constexpr double no_param = std::numeric_limits<double>::quiet_NaN();

void require_grid(int n, const char *what)
{
    if (n < 2)
        throw DomainError(std::string(what) + ": grid needs at least two points");
}

double grid_value(int k, int n) { return k == n - 1 ? 1.0 : static_cast<double>(k) / (n - 1); }

constexpr double minus_inf = -std::numeric_limits<double>::infinity();

// Best CR over the segment a + t (b - a), t in [0, 1], subject to SR >= s.
std::function<double(double)> segment_frontier(const RatePair &a, const RatePair &b)
{
    return [a, b](double s)
    {
        double lo = 0.0;
        double hi = 1.0;
        const double ds = b.sr - a.sr;
        if (ds == 0.0)
        {
            if (a.sr < s)
                return minus_inf;
        }
        else
        {
            const double t = (s - a.sr) / ds;
            if (ds > 0.0)
                lo = std::max(lo, t);
            else
                hi = std::min(hi, t);
            if (lo > hi)
                return minus_inf;
        }
        return std::max(a.cr + lo * (b.cr - a.cr), a.cr + hi * (b.cr - a.cr));
    };
}

RegionBoundary segment(const RatePair &first, const RatePair &last, int grid_size, std::string label)
{
    require_grid(grid_size, "segment");
    RegionBoundary out;
    out.label = std::move(label);
    out.sweep_parameterization = "varrho";
    for (int k = 0; k < grid_size; ++k)
    {
        const double v = grid_value(grid_size - 1 - k, grid_size);
        out.points.push_back({v * first.sr + (1.0 - v) * last.sr, v * first.cr + (1.0 - v) * last.cr, first.source});
        out.parameters.push_back({v, no_param});
    }
    out.max_cr_at = segment_frontier(first, last);
    return out;
}

double point_segment_distance(double px, double py, double ax, double ay, double bx, double by)
{
    const double dx = bx - ax;
    const double dy = by - ay;
    const double len2 = dx * dx + dy * dy;
    double t = 0.0;
    if (len2 > 0.0)
        t = std::clamp(((px - ax) * dx + (py - ay) * dy) / len2, 0.0, 1.0);
    return std::hypot(px - (ax + t * dx), py - (ay + t * dy));
}

double directed_hausdorff(const RegionBoundary &a, const RegionBoundary &b, double ss, double sc)
{
    double worst = 0.0;
    for (const RatePair &p : a.points)
    {
        double best = std::numeric_limits<double>::infinity();
        const double px = p.sr / ss;
        const double py = p.cr / sc;
        if (b.points.size() == 1)
            best = std::hypot(px - b.points[0].sr / ss, py - b.points[0].cr / sc);
        for (std::size_t i = 1; i < b.points.size(); ++i)
        {
            const RatePair &u = b.points[i - 1];
            const RatePair &v = b.points[i];
            best = std::min(best, point_segment_distance(px, py, u.sr / ss, u.cr / sc, v.sr / ss, v.cr / sc));
        }
        worst = std::max(worst, best);
    }
    return worst;
}

} // namespace

RegionBoundary pareto_filter(const RegionBoundary &region)
{
    std::vector<std::size_t> order(region.points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b)
                     {
                         const RatePair &pa = region.points[a];
                         const RatePair &pb = region.points[b];
                         return pa.sr != pb.sr ? pa.sr > pb.sr : pa.cr > pb.cr;
                     });
    RegionBoundary out;
    out.label = region.label;
    out.sweep_parameterization = region.sweep_parameterization;
    out.max_cr_at = region.max_cr_at;
    double best_cr = -std::numeric_limits<double>::infinity();
    for (std::size_t i : order)
    {
        if (region.points[i].cr > best_cr)
        {
            best_cr = region.points[i].cr;
            out.points.push_back(region.points[i]);
            if (i < region.parameters.size())
                out.parameters.push_back(region.parameters[i]);
        }
    }
    return out;
}

RegionBoundary downlink_isac_region(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp,
                                    int grid_size, NormPolicy policy, unsigned threads)
{
    require_grid(grid_size, "downlink_isac_region");
    const LinkStats st = link_stats(hc, hs, policy);
    if (st.rho > 1.0 - 1e-6)
        throw DegenerateChannelsError("downlink_isac_region: communication and sensing channels are (nearly) parallel");
    RegionBoundary out;
    out.label = "downlink ISAC";
    out.sweep_parameterization = "tau";
    out.points.resize(static_cast<std::size_t>(grid_size));
    out.parameters.resize(out.points.size());
    parallel_for(out.points.size(), threads,
                 [&](std::size_t k)
                 {
                     const double tau = grid_value(static_cast<int>(k), grid_size);
                     out.points[k] = tau_rate_pair(st, sp, tau);
                     out.parameters[k] = {tau, no_param};
                 });

    // SR falls and CR rises monotonically from tau = 0 (S-C) to tau = 1 (C-C).
    const RatePair sc = tau_rate_pair(st, sp, 0.0);
    const RatePair cc = tau_rate_pair(st, sp, 1.0);
    out.max_cr_at = [st, sp, sc, cc](double s)
    {
        if (s <= cc.sr)
            return cc.cr;
        if (s > sc.sr)
            return minus_inf;
        double lo = 0.0; // SR(lo) >= s
        double hi = 1.0; // SR(hi) < s
        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it)
        {
            const double mid = 0.5 * (lo + hi);
            if (tau_rate_pair(st, sp, mid).sr >= s)
                lo = mid;
            else
                hi = mid;
        }
        return tau_rate_pair(st, sp, lo).cr;
    };
    return out;
}

RegionBoundary sigma_region(const std::vector<ParetoSolution> &sweep)
{
    RegionBoundary out;
    out.label = "downlink ISAC (rate profile)";
    out.sweep_parameterization = "sigma";
    for (const ParetoSolution &s : sweep)
    {
        out.points.push_back(s.achieved);
        out.parameters.push_back({s.sigma, no_param});
    }
    std::stable_sort(out.points.begin(), out.points.end(),
                     [](const RatePair &a, const RatePair &b) { return a.sr > b.sr; });
    return out;
}

RegionBoundary fdsac_region(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp, int grid_kappa,
                            int grid_iota, LinkDirection direction, NormPolicy policy, unsigned threads)
{
    require_grid(grid_kappa, "fdsac_region");
    const bool downlink = direction == LinkDirection::Downlink;
    if (downlink)
        require_grid(grid_iota, "fdsac_region");
    const int n_iota = downlink ? grid_iota : 1;
    const LinkStats st = link_stats(hc, hs, policy);

    RegionBoundary raw;
    raw.points.resize(static_cast<std::size_t>(grid_kappa) * static_cast<std::size_t>(n_iota));
    raw.parameters.resize(raw.points.size());
    parallel_for(raw.points.size(), threads,
                 [&](std::size_t idx)
                 {
                     SystemParams q = sp;
                     q.kappa = grid_value(static_cast<int>(idx) / n_iota, grid_kappa);
                     if (downlink)
                     {
                         q.iota = grid_value(static_cast<int>(idx) % n_iota, grid_iota);
                         raw.points[idx] = fdsac_rates(st, q);
                         raw.parameters[idx] = {q.kappa, q.iota};
                     }
                     else
                     {
                         raw.points[idx] = ul_fdsac_rates(st, q);
                         raw.parameters[idx] = {q.kappa, no_param};
                     }
                 });
    raw.label = downlink ? "downlink FDSAC" : "uplink FDSAC";
    raw.sweep_parameterization = downlink ? "kappa,iota" : "kappa";
    return pareto_filter(raw);
}

RegionBoundary auxiliary_region(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp,
                                int grid_size, NormPolicy policy)
{
    require_grid(grid_size, "auxiliary_region");
    const LinkStats st = link_stats(hc, hs, policy);
    const double L = sp.l_frame;
    RegionBoundary raw;
    raw.label = "auxiliary";
    raw.sweep_parameterization = "varsigma";
    for (int k = 0; k < grid_size; ++k)
    {
        const double s = grid_value(k, grid_size);
        raw.points.push_back({std::log2(1.0 + s * sp.p * L * sp.alpha_s * st.norm_s * st.norm_s) / L,
                              std::log2(1.0 + (1.0 - s) * sp.p * st.norm_c), st.source});
        raw.parameters.push_back({s, no_param});
    }
    const double gs = sp.p * L * sp.alpha_s * st.norm_s * st.norm_s;
    const double gc = sp.p * st.norm_c;
    raw.max_cr_at = [L, gs, gc](double s)
    {
        const double share = s <= 0.0 ? 0.0 : std::expm1(L * s * std::numbers::ln2) / gs;
        if (share > 1.0)
            return minus_inf;
        return std::log2(1.0 + (1.0 - share) * gc);
    };
    return pareto_filter(raw);
}

RegionBoundary uplink_isac_region(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp,
                                  int grid_size, NormPolicy policy)
{
    const LinkStats st = link_stats(hc, hs, policy);
    return segment(ul_sc_rates(st, sp), ul_cc_rates(st, sp), grid_size, "uplink ISAC");
}

RegionBoundary uplink_inner_bound(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp,
                                  int grid_size, NormPolicy policy)
{
    const LinkStats st = link_stats(hc, hs, policy);
    const RatePair sc{ul_sc_rates(st, sp).sr, ul_sc_cr_lower(st, sp), st.source};
    const RatePair cc{ul_cc_sr_lower(st, sp), ul_cc_rates(st, sp).cr, st.source};
    return segment(sc, cc, grid_size, "uplink ISAC inner bound");
}

ContainmentResult contains(const RegionBoundary &outer, const RegionBoundary &inner, double tolerance)
{
    if (outer.points.empty() || inner.points.empty())
        throw DomainError("contains: regions must be non-empty");
    for (const RatePair &p : inner.points)
    {
        bool dominated = std::any_of(outer.points.begin(), outer.points.end(),
                                     [&](const RatePair &o)
                                     { return p.sr <= o.sr + tolerance && p.cr <= o.cr + tolerance; });
        if (!dominated && outer.max_cr_at)
            dominated = p.cr <= outer.max_cr_at(p.sr - tolerance) + tolerance;
        if (!dominated)
            return {false, p};
    }
    return {true, std::nullopt};
}

double normalized_hausdorff(const RegionBoundary &a, const RegionBoundary &b)
{
    if (a.points.empty() || b.points.empty())
        throw DomainError("normalized_hausdorff: regions must be non-empty");
    double ss = 0.0;
    double sc = 0.0;
    for (const auto *r : {&a, &b})
        for (const RatePair &p : r->points)
        {
            ss = std::max(ss, p.sr);
            sc = std::max(sc, p.cr);
        }
    if (!(ss > 0.0 && sc > 0.0))
        throw DomainError("normalized_hausdorff: both rates must be positive somewhere");
    return std::max(directed_hausdorff(a, b, ss, sc), directed_hausdorff(b, a, ss, sc));
}

} // namespace nfisac

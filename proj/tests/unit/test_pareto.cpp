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

#include <catch_amalgamated.hpp>

#include "nfisac/errors.hpp"
#include "nfisac/pareto.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace nfisac;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

constexpr double pi = std::numbers::pi;

struct Setup
{
    ChannelVector hc;
    ChannelVector hs;
};

Setup default_setup(int n = 15)
{
    const double lambda = 0.125;
    const ArrayGeometry g(n, n, lambda / 2, lambda * lambda / (4 * pi), lambda);
    return {build_channel(g, Placement(10.0, pi / 4, pi / 6), ChannelModel::Accurate),
            build_channel(g, Placement(5.0, pi / 4, -pi / 6), ChannelModel::Accurate)};
}

double mid_sigma(const Setup &s, const SystemParams &sp)
{
    const RegimeThresholds th = regime_thresholds(link_stats(s.hc, s.hs, NormPolicy::ElementSum), sp);
    return 0.5 * (th.cc_upper + th.sc_lower);
}

double max_abs_diff(const std::vector<std::complex<double>> &a, const std::vector<std::complex<double>> &b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace

TEST_CASE("regime thresholds partition the unit interval", "[pareto]")
{
    const Setup s = default_setup();
    const SystemParams sp;
    const RegimeThresholds th = regime_thresholds(link_stats(s.hc, s.hs, NormPolicy::ElementSum), sp);
    CHECK(th.cc_upper >= 0.0);
    CHECK(th.cc_upper < th.sc_lower);
    CHECK(th.sc_lower <= 1.0);
}

TEST_CASE("endpoint profiles", "[pareto]")
{
    const Setup s = default_setup();
    const SystemParams sp;
    const ParetoSolution cc = solve_rate_profile(s.hc, s.hs, sp, 0.0);
    CHECK(cc.regime == ParetoRegime::CcEndpoint);
    CHECK(max_abs_diff(cc.w, matched_beamformer(s.hc)) == 0.0);
    CHECK_THAT(cc.r_star, WithinRel(cc_rates(s.hc, s.hs, sp, NormPolicy::ElementSum).cr, 1e-14));

    const ParetoSolution sc = solve_rate_profile(s.hc, s.hs, sp, 1.0);
    CHECK(sc.regime == ParetoRegime::ScEndpoint);
    CHECK(max_abs_diff(sc.w, matched_beamformer(s.hs)) == 0.0);
    CHECK_THAT(sc.r_star, WithinRel(sc_rates(s.hc, s.hs, sp, NormPolicy::ElementSum).sr, 1e-14));

    CHECK_THROWS_AS(kkt_residuals(cc, s.hc, s.hs, sp), DomainError);
    CHECK_THROWS_AS(solve_rate_profile(s.hc, s.hs, sp, 1.5), DomainError);
}

TEST_CASE("parallel channels are rejected", "[pareto]")
{
    const Setup s = default_setup();
    CHECK_THROWS_AS(solve_rate_profile(s.hc, s.hc, SystemParams{}, 0.5), DegenerateChannelsError);
}

TEST_CASE("interior profile lies on the tau boundary", "[pareto]")
{
    const Setup s = default_setup();
    const SystemParams sp;
    // sigma = 0.5 already lies past the S-C threshold at the default placements.
    CHECK(solve_rate_profile(s.hc, s.hs, sp, 0.5).regime == ParetoRegime::ScEndpoint);
    const ParetoSolution sol = solve_rate_profile(s.hc, s.hs, sp, mid_sigma(s, sp));
    REQUIRE(sol.regime == ParetoRegime::Interior);
    CHECK(sol.kkt_residual < 1e-6);
    CHECK(sol.mu1 >= 0.0);
    CHECK(sol.mu2 >= 0.0);

    const double target_sr = sol.sigma * sol.r_star;
    const double target_cr = (1.0 - sol.sigma) * sol.r_star;
    CHECK_THAT(sol.achieved.sr, WithinRel(target_sr, 1e-6));
    CHECK_THAT(sol.achieved.cr, WithinRel(target_cr, 1e-6));

    const LinkStats st = link_stats(s.hc, s.hs, NormPolicy::ElementSum);
    auto dist = [&](double tau)
    {
        const RatePair q = tau_rate_pair(st, sp, tau);
        return std::hypot(q.sr - target_sr, q.cr - target_cr);
    };
    const int n = 10000;
    int best = 0;
    for (int k = 1; k <= n; ++k)
        if (dist(double(k) / n) < dist(double(best) / n))
            best = k;
    double lo = std::max(0.0, double(best - 1) / n);
    double hi = std::min(1.0, double(best + 1) / n);
    for (int it = 0; it < 200; ++it)
    {
        const double m1 = lo + (hi - lo) / 3;
        const double m2 = hi - (hi - lo) / 3;
        if (dist(m1) < dist(m2))
            hi = m2;
        else
            lo = m1;
    }
    const RatePair q = tau_rate_pair(st, sp, 0.5 * (lo + hi));
    CHECK(std::abs(q.sr - target_sr) < 1e-4);
    CHECK(std::abs(q.cr - target_cr) < 1e-4);
}

TEST_CASE("KKT residual grows under a tangent perturbation", "[pareto]")
{
    const Setup s = default_setup();
    const SystemParams sp;
    const ParetoSolution sol = solve_rate_profile(s.hc, s.hs, sp, mid_sigma(s, sp));
    REQUIRE(sol.regime == ParetoRegime::Interior);

    std::mt19937_64 gen(5);
    std::normal_distribution<double> nd;
    std::vector<std::complex<double>> t(sol.w.size());
    std::complex<double> proj = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i)
    {
        t[i] = {nd(gen), nd(gen)};
        proj += std::conj(sol.w[i]) * t[i];
    }
    double tn = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i)
    {
        t[i] -= proj * sol.w[i];
        tn += std::norm(t[i]);
    }
    ParetoSolution moved = sol;
    double wn = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i)
    {
        moved.w[i] += 1e-3 * t[i] / std::sqrt(tn);
        wn += std::norm(moved.w[i]);
    }
    for (auto &v : moved.w)
        v /= std::sqrt(wn);
    CHECK(kkt_residuals(moved, s.hc, s.hs, sp) > sol.kkt_residual);
}

TEST_CASE("sigma sweep", "[pareto]")
{
    const Setup s = default_setup();
    const SystemParams sp;
    const auto sweep = sigma_sweep(s.hc, s.hs, sp, 21, SigmaRange::Unit);
    REQUIRE(sweep.size() == 21);
    CHECK(sweep.front().sigma == 0.0);
    CHECK(sweep.back().sigma == 1.0);
    for (std::size_t k = 1; k < sweep.size(); ++k)
    {
        CHECK(sweep[k].achieved.sr >= sweep[k - 1].achieved.sr - 1e-9);
        CHECK(sweep[k].achieved.cr <= sweep[k - 1].achieved.cr + 1e-9);
    }
    for (const auto &sol : sigma_sweep(s.hc, s.hs, sp, 11))
        if (sol.regime == ParetoRegime::Interior)
        {
            CHECK(sol.kkt_residual < 1e-6);
            CHECK(sol.mu1 >= 0.0);
            CHECK(sol.mu2 >= 0.0);
        }
}

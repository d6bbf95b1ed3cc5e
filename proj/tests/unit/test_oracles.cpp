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
#include "nfisac/oracles.hpp"

#include <cmath>
#include <numbers>

using namespace nfisac;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

constexpr double pi = std::numbers::pi;

ArrayGeometry default_geometry(int n = 15)
{
    const double lambda = 0.125;
    return {n, n, lambda / 2, lambda * lambda / (4 * pi), lambda};
}

const Placement cu_default(10.0, pi / 4, pi / 6);
const Placement target_default(5.0, pi / 4, -pi / 6);

} // namespace

TEST_CASE("brute-force norms on simple arrays", "[oracles]")
{
    const ArrayGeometry one = default_geometry(1);
    const Placement bs(4.0, pi / 2, 0.0);
    CHECK_THAT(norm_sq_bruteforce(one, bs, ChannelModel::Accurate),
               WithinRel(one.element_area() / (4 * pi * 16.0), 1e-14));
    const ArrayGeometry g = default_geometry(41);
    CHECK_THAT(norm_sq_bruteforce(g, cu_default, ChannelModel::UPW),
               WithinRel(41.0 * 41.0 * g.element_area() / (4 * pi * 100.0), 1e-13));
}

TEST_CASE("compensated summation beats naive summation", "[oracles]")
{
    const ArrayGeometry g = default_geometry(1001);
    const ChannelVector h = build_channel(g, target_default, ChannelModel::Accurate);
    __float128 exact = 0;
    double naive = 0.0;
    for (const auto &x : h.gains)
    {
        const double v = std::norm(x);
        exact += v;
        naive += v;
    }
    const double ref = static_cast<double>(exact);
    const double kahan = norm_sq_bruteforce(g, target_default, ChannelModel::Accurate);
    const double err_kahan = std::abs(kahan - ref) / ref;
    const double err_naive = std::abs(naive - ref) / ref;
    CHECK(err_kahan <= err_naive);
    CHECK(err_kahan < 1e-15);
    CHECK_THAT(h.norm_sq(), WithinRel(ref, 1e-15));
}

TEST_CASE("random streams are reproducible", "[oracles]")
{
    SampleRng a(42, 3), b(42, 3), c(42, 4);
    bool differs = false;
    for (int i = 0; i < 100; ++i)
    {
        const double x = a.uniform();
        CHECK(x == b.uniform());
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
        differs |= x != c.uniform();
    }
    CHECK(differs);
}

TEST_CASE("uniform sampler stays inside the box", "[oracles]")
{
    const UniformPlacementBox box;
    const PlacementSampler s = uniform_placement_sampler(box);
    SampleRng rng(1, 0);
    for (int i = 0; i < 1000; ++i)
    {
        const PlacementPairDraw d = s(rng);
        for (const PlacementDraw &p : {d.cu, d.target})
        {
            CHECK(p.r >= box.r_min);
            CHECK(p.r <= box.r_max);
            CHECK(p.theta >= box.theta_min);
            CHECK(p.theta <= box.theta_max);
            CHECK(p.phi >= box.phi_min);
            CHECK(p.phi <= box.phi_max);
        }
    }
}

TEST_CASE("constant sampler reproduces the deterministic correlation", "[oracles]")
{
    std::vector<ArrayGeometry> ladder;
    for (int n : {15, 31, 63})
        ladder.push_back(default_geometry(n));
    const CcfEstimate est =
        ccf_limit_estimate(ladder, constant_placement_sampler(cu_default, target_default), 100, 42,
                           ChannelModel::Accurate);
    REQUIRE(est.mean_rho.size() == 3);
    for (std::size_t k = 0; k < ladder.size(); ++k)
    {
        const double rho = ccf(build_channel(ladder[k], cu_default, ChannelModel::Accurate),
                               build_channel(ladder[k], target_default, ChannelModel::Accurate));
        CHECK_THAT(est.mean_rho[k], WithinRel(rho, 1e-12));
    }
    CHECK(est.converged_value == est.mean_rho.back());
    CHECK(est.rejected == 0);
}

TEST_CASE("random-placement estimate", "[oracles]")
{
    std::vector<ArrayGeometry> ladder;
    for (int n : {15, 31, 63})
        ladder.push_back(default_geometry(n));
    const PlacementSampler s = uniform_placement_sampler();
    const CcfEstimate a = ccf_limit_estimate(ladder, s, 200, 7, ChannelModel::Accurate);
    const CcfEstimate b = ccf_limit_estimate(ladder, s, 200, 7, ChannelModel::Accurate, std::nullopt, 3);
    CHECK(a.mean_rho == b.mean_rho);
    CHECK(a.sample_count == 200);
    const CcfEstimate np = ccf_limit_estimate(ladder, s, 200, 7, ChannelModel::NoPolar);
    for (double v : {a.converged_value, np.converged_value})
    {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
    CHECK(a.converged_value != np.converged_value);
    CHECK(std::isfinite(a.last_relative_change()));

    CHECK_THROWS_AS(ccf_limit_estimate(ladder, s, 50, 7, ChannelModel::Accurate), DomainError);
    std::vector<ArrayGeometry> bad{ladder[1], ladder[0]};
    CHECK_THROWS_AS(ccf_limit_estimate(bad, s, 200, 7, ChannelModel::Accurate), DomainError);
}

TEST_CASE("slope estimation", "[oracles]")
{
    const auto grid = db_power_grid(100.0, 130.0, 31);
    REQUIRE(grid.size() == 31);
    CHECK_THAT(grid.front(), WithinRel(1e10, 1e-12));
    CHECK_THAT(grid.back(), WithinRel(1e13, 1e-12));
    CHECK_THAT(slope_estimate([](double p) { return std::log2(1 + 1e-3 * p); }, grid), WithinAbs(1.0, 1e-6));
    CHECK_THAT(slope_estimate([](double p) { return std::log2(1 + p) / 4; }, grid), WithinAbs(0.25, 1e-6));

    CHECK_THROWS_AS(slope_estimate([](double p) { return p; }, {1.0}), DomainError);
    CHECK_THROWS_AS(slope_estimate([](double p) { return p; }, {1.0, 2.0, 3.0}), DomainError);
    CHECK_THROWS_AS(slope_estimate([](double p) { return -std::log2(p); }, grid), DomainError);
}

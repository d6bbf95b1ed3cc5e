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

#include "nfisac/channels.hpp"
#include "nfisac/errors.hpp"
#include "nfisac/oracles.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <random>

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

// Quadrant integral of the continuous gain density, independent of the closed forms.
template <class F>
double quadrant_integral(F density, double y, double z)
{
    using boost::math::quadrature::gauss_kronrod;
    auto inner = [&](double yy)
    { return gauss_kronrod<double, 31>::integrate([&](double zz) { return density(yy, zz); }, 0.0, z, 8, 1e-14); };
    return gauss_kronrod<double, 31>::integrate(inner, 0.0, y, 8, 1e-14);
}

} // namespace

TEST_CASE("model names round-trip", "[channels]")
{
    for (ChannelModel m : all_channel_models)
        CHECK(parse_channel_model(to_string(m)) == m);
    CHECK_FALSE(parse_channel_model("spherical").has_value());
    CHECK_FALSE(has_closed_form_norm(ChannelModel::NUSW));
}

TEST_CASE("single element reduces to free space", "[channels]")
{
    const ArrayGeometry g = default_geometry(1);
    const double r = 7.3;
    const Placement bs(r, pi / 2, 0.0);
    const ChannelVector h = build_channel(g, bs, ChannelModel::Accurate);
    REQUIRE(h.size() == 1);
    const double amp = std::sqrt(g.element_area() / (4 * pi * r * r));
    CHECK_THAT(std::abs(h.gains[0]), WithinRel(amp, 1e-14));
    const std::complex<double> expected = std::polar(1.0, -2 * pi * r / g.wavelength());
    CHECK_THAT(std::abs(h.gains[0] / std::abs(h.gains[0]) - expected), WithinAbs(0.0, 1e-9));

    const Placement off(6.0, 1.1, 0.4);
    const double amp_off = std::sqrt(g.element_area() / (4 * pi * 36.0));
    for (ChannelModel m : {ChannelModel::UPW, ChannelModel::USW, ChannelModel::NUSW})
        CHECK_THAT(std::abs(build_channel(g, off, m).gains[0]), WithinRel(amp_off, 1e-14));
}

TEST_CASE("delta special values", "[channels]")
{
    CHECK(delta(0.7, 0.0, 3.0) == 0.0);
    CHECK(delta(0.7, 2.0, 0.0) == 0.0);
    CHECK_THAT(delta(1.0, 1e9, 1e9), WithinAbs(pi / 3, 1e-8));
    CHECK_THAT(delta_no_polar(1.0, 1e9, 1e9), WithinAbs(pi / 2, 1e-8));
    CHECK_THAT(delta(1.0, 1.0, 1.0), WithinAbs(0.4452909, 5e-8));
    CHECK_THAT(delta(1.0, 1.0, 1.0), WithinRel(2.0 / 3.0 * pi / 6 + 1.0 / (6 * std::sqrt(3.0)), 1e-15));
    CHECK_THROWS_AS(delta(0.0, 1.0, 1.0), DomainError);
}

TEST_CASE("delta matches numerical quadrature", "[channels]")
{
    const double cases[][3] = {{1.0, 1.0, 1.0}, {0.6, 0.3, 1.7}, {0.9, 2.5, 0.4}, {0.35, 0.8, 0.8}};
    for (const auto &c : cases)
    {
        const double psi = c[0];
        auto accurate = [psi](double y, double z)
        { return psi * (psi * psi + z * z) / std::pow(psi * psi + y * y + z * z, 2.5); };
        auto no_polar = [psi](double y, double z) { return psi / std::pow(psi * psi + y * y + z * z, 1.5); };
        CHECK_THAT(delta(psi, c[1], c[2]), WithinRel(quadrant_integral(accurate, c[1], c[2]), 1e-10));
        CHECK_THAT(delta_no_polar(psi, c[1], c[2]), WithinRel(quadrant_integral(no_polar, c[1], c[2]), 1e-10));
    }
}

TEST_CASE("closed-form norms", "[channels]")
{
    const ArrayGeometry g = default_geometry();
    const double upw = 225 * g.element_area() / (4 * pi * 100.0);
    CHECK(closed_form_norm_sq(g, cu_default, ChannelModel::UPW) == upw);
    CHECK(closed_form_norm_sq(g, cu_default, ChannelModel::USW) == upw);
    CHECK_THAT(build_channel(g, cu_default, ChannelModel::UPW).norm_sq(), WithinRel(upw, 1e-12));
    CHECK_THROWS_AS(closed_form_norm_sq(g, cu_default, ChannelModel::NUSW), UnsupportedModelError);

    CHECK_THAT(build_channel(g, cu_default, ChannelModel::Accurate).norm_sq(),
               WithinRel(closed_form_norm_sq(g, cu_default, ChannelModel::Accurate), 1e-4));
    CHECK_THAT(norm_sq_bruteforce(g, target_default, ChannelModel::Accurate),
               WithinRel(closed_form_norm_sq(g, target_default, ChannelModel::Accurate), 1e-3));

    const ArrayGeometry huge = default_geometry(100001);
    const Placement p(5.0, pi / 4, pi / 6);
    CHECK_THAT(closed_form_norm_sq(huge, p, ChannelModel::Accurate), WithinRel(1.0 / (3 * pi), 1e-2));
    CHECK(closed_form_norm_sq(huge, p, ChannelModel::Accurate) < 1.0 / (3 * pi));
    CHECK(closed_form_norm_sq(huge, p, ChannelModel::NoPolar) < 1.0 / (2 * pi));
}

TEST_CASE("closed forms track element sums on random inputs", "[channels]")
{
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> r(4.0, 40.0), th(0.8, pi - 0.8), ph(-0.8, 0.8);
    std::uniform_int_distribution<int> half(2, 40);
    for (int c = 0; c < 30; ++c)
    {
        const ArrayGeometry g = default_geometry().with_size(2 * half(gen) + 1, 2 * half(gen) + 1);
        const Placement p(r(gen), th(gen), ph(gen));
        const double eps = g.spacing() / p.r();
        const double tol = std::max(1e-3, 5 * eps);
        for (ChannelModel m : {ChannelModel::Accurate, ChannelModel::NoPolar})
            CHECK_THAT(build_channel(g, p, m).norm_sq(), WithinRel(closed_form_norm_sq(g, p, m), tol));
        for (ChannelModel m : {ChannelModel::UPW, ChannelModel::USW})
            CHECK_THAT(build_channel(g, p, m).norm_sq(), WithinRel(closed_form_norm_sq(g, p, m), 1e-12));
    }
}

TEST_CASE("channel correlation factor", "[channels]")
{
    const ArrayGeometry g = default_geometry();
    const ChannelVector hc = build_channel(g, cu_default, ChannelModel::Accurate);
    const ChannelVector hs = build_channel(g, target_default, ChannelModel::Accurate);
    CHECK_THAT(ccf(hc, hc), WithinAbs(1.0, 1e-14));
    const double rho = ccf(hc, hs);
    CHECK(rho >= 0.0);
    CHECK(rho < 0.05);

    ChannelVector a = hc, b = hc;
    std::fill(a.gains.begin(), a.gains.end(), 0.0);
    std::fill(b.gains.begin(), b.gains.end(), 0.0);
    a.gains[0] = 1.0;
    b.gains[1] = 1.0;
    CHECK(ccf(a, b) == 0.0);

    const ChannelVector other = build_channel(g, target_default, ChannelModel::UPW);
    CHECK_THROWS_AS(ccf(hc, other), DomainError);
}

TEST_CASE("threaded build matches serial build", "[channels]")
{
    const ArrayGeometry g = default_geometry(301);
    const ChannelVector a = build_channel(g, cu_default, ChannelModel::Accurate, 1);
    const ChannelVector b = build_channel(g, cu_default, ChannelModel::Accurate, 4);
    CHECK(a.gains == b.gains);
}

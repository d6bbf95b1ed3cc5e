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
#include "nfisac/geometry.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>

using namespace nfisac;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

ArrayGeometry default_geometry(int n = 15)
{
    const double lambda = 0.125;
    return {n, n, lambda / 2, lambda * lambda / (4 * std::numbers::pi), lambda};
}

double cartesian_distance(const ArrayGeometry &g, const Placement &p, int iy, int iz)
{
    const double st = std::sin(p.theta());
    const std::array<double, 3> target{p.r() * st * std::cos(p.phi()), p.r() * st * std::sin(p.phi()),
                                       p.r() * std::cos(p.theta())};
    const std::array<double, 3> element{0.0, iy * g.spacing(), iz * g.spacing()};
    double s = 0.0;
    for (int k = 0; k < 3; ++k)
        s += (target[k] - element[k]) * (target[k] - element[k]);
    return std::sqrt(s);
}

} // namespace

TEST_CASE("geometry rejects invalid arrays", "[geometry]")
{
    CHECK_THROWS_AS(ArrayGeometry(4, 5, 0.0625, 1e-3, 0.125), DomainError);
    CHECK_THROWS_AS(ArrayGeometry(5, 0, 0.0625, 1e-3, 0.125), DomainError);
    CHECK_THROWS_AS(ArrayGeometry(5, 5, -1.0, 1e-3, 0.125), DomainError);
    CHECK_THROWS_AS(ArrayGeometry(5, 5, 0.0625, 0.01, 0.125), DomainError);
    CHECK_NOTHROW(default_geometry());
}

TEST_CASE("default aperture ratio is 1/pi", "[geometry]")
{
    CHECK_THAT(default_geometry().aor(), WithinRel(1.0 / std::numbers::pi, 1e-14));
}

TEST_CASE("linear index is z-major", "[geometry]")
{
    const ArrayGeometry g = default_geometry(5);
    CHECK(g.linear_index(-2, -2) == 0);
    CHECK(g.linear_index(-1, -2) == 1);
    CHECK(g.linear_index(-2, -1) == 5);
    CHECK(g.linear_index(2, 2) == 24);
    CHECK_THROWS_AS(g.linear_index(3, 0), DomainError);
}

TEST_CASE("direction triples", "[geometry]")
{
    const Direction b = Placement(5.0, std::numbers::pi / 2, 0.0).direction();
    CHECK_THAT(b.psi, WithinAbs(1.0, 1e-15));
    CHECK_THAT(b.phi, WithinAbs(0.0, 1e-15));
    CHECK_THAT(b.omega, WithinAbs(0.0, 1e-15));

    const Direction d = Placement(10.0, std::numbers::pi / 4, std::numbers::pi / 6).direction();
    CHECK_THAT(d.psi, WithinAbs(0.612372, 1e-6));
    CHECK_THAT(d.phi, WithinAbs(0.353553, 1e-6));
    CHECK_THAT(d.omega, WithinAbs(0.707107, 1e-6));

    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> th(0.1, std::numbers::pi - 0.1), ph(-1.4, 1.4);
    for (int i = 0; i < 100; ++i)
    {
        const Direction u = Placement(3.0, th(gen), ph(gen)).direction();
        CHECK_THAT(u.psi * u.psi + u.phi * u.phi + u.omega * u.omega, WithinAbs(1.0, 1e-14));
    }
}

TEST_CASE("placements behind the array are rejected", "[geometry]")
{
    CHECK_THROWS_AS(Placement(-1.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(Placement(5.0, std::numbers::pi / 2, std::numbers::pi), DomainError);
}

TEST_CASE("element distance", "[geometry]")
{
    const ArrayGeometry g = default_geometry();
    const Placement cu(10.0, std::numbers::pi / 4, std::numbers::pi / 6);
    CHECK_THAT(element_distance(g, cu, 0, 0), WithinRel(10.0, 1e-15));

    const Placement bs(5.0, std::numbers::pi / 2, 0.0);
    CHECK_THAT(element_distance(g, bs, 1, 0), WithinRel(5.0 * std::sqrt(0.0125 * 0.0125 + 1.0), 1e-14));
    CHECK_THAT(element_distance(g, bs, 1, 0), WithinAbs(5.000390, 1e-6));
    for (int n = -7; n <= 7; ++n)
        for (int m = -7; m <= 7; ++m)
            CHECK(element_distance(g, bs, n, m) == element_distance(g, bs, -n, -m));

    CHECK_THROWS_AS(element_distance(g, bs, 8, 0), DomainError);
}

TEST_CASE("element distance matches Cartesian positions", "[geometry]")
{
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> r(1.0, 60.0), th(0.3, std::numbers::pi - 0.3), ph(-1.3, 1.3),
        lam(0.01, 0.3);
    double worst = 0.0;
    for (int c = 0; c < 40; ++c)
    {
        const double lambda = lam(gen);
        const ArrayGeometry g(21, 11, lambda / 2, lambda * lambda / (4 * std::numbers::pi), lambda);
        const Placement p(r(gen), th(gen), ph(gen));
        for (int iy = -g.half_y(); iy <= g.half_y(); ++iy)
            for (int iz = -g.half_z(); iz <= g.half_z(); ++iz)
            {
                const double ref = cartesian_distance(g, p, iy, iz);
                worst = std::max(worst, std::abs(element_distance(g, p, iy, iz) - ref) / ref);
            }
    }
    CHECK(worst < 1e-12);
}

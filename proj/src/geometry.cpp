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

#include "nfisac/geometry.hpp"

#include "nfisac/diagnostics.hpp"
#include "nfisac/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace nfisac
{

ArrayGeometry::ArrayGeometry(int n_y, int n_z, double spacing, double element_area, double wavelength)
    : n_y_(n_y), n_z_(n_z), spacing_(spacing), element_area_(element_area), wavelength_(wavelength)
{
    if (n_y <= 0 || n_z <= 0 || n_y % 2 == 0 || n_z % 2 == 0)
        throw DomainError("ArrayGeometry: element counts must be odd and positive (got " +
                          std::to_string(n_y) + " x " + std::to_string(n_z) + ")");
    if (!(spacing > 0.0) || !(element_area > 0.0) || !(wavelength > 0.0) ||
        !std::isfinite(spacing) || !std::isfinite(element_area) || !std::isfinite(wavelength))
        throw DomainError("ArrayGeometry: spacing, element area and wavelength must be positive and finite");
    if (!(std::sqrt(element_area) < spacing))
        throw DomainError("ArrayGeometry: element side sqrt(A) must be smaller than the spacing d");
}

std::size_t ArrayGeometry::linear_index(int iy, int iz) const
{
    if (std::abs(iy) > half_y() || std::abs(iz) > half_z())
    {
        std::ostringstream msg;
        msg << "element index (" << iy << ", " << iz << ") outside a " << n_y_ << " x " << n_z_ << " array";
        throw DomainError(msg.str());
    }
    return static_cast<std::size_t>(iz + half_z()) * static_cast<std::size_t>(n_y_) +
           static_cast<std::size_t>(iy + half_y());
}

Placement::Placement(double r, double theta, double phi)
    : r_(r), theta_(theta), phi_(phi)
{
    if (!(r > 0.0) || !std::isfinite(r))
        throw DomainError("Placement: distance must be positive and finite");
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
        throw DomainError("Placement: elevation must lie in [0, pi]");
    if (!(phi >= -std::numbers::pi / 2 && phi <= std::numbers::pi / 2))
        throw DomainError("Placement: azimuth must lie in [-pi/2, pi/2]");
    if (!(direction().psi > 0.0))
        throw DomainError("Placement: point must be strictly in front of the array (sin(theta)cos(phi) > 0)");
}

Direction Placement::direction() const noexcept
{
    const double s = std::sin(theta_);
    return {s * std::cos(phi_), s * std::sin(phi_), std::cos(theta_)};
}

Direction direction_triple(const Placement &p) noexcept { return p.direction(); }

bool check_placement(const ArrayGeometry &g, const Placement &p)
{
    const double side = std::sqrt(g.element_area());
    if (!(p.r() > side) || !(p.r() > g.spacing()))
        throw DomainError("Placement: distance must exceed both the element side and the spacing");
    if (p.r() < 10.0 * g.spacing())
    {
        std::ostringstream msg;
        msg << "placement at r = " << p.r() << " m is within 10 d of the array; small-epsilon approximations degrade";
        warn(msg.str());
        return false;
    }
    return true;
}

double element_distance(const ArrayGeometry &g, const Placement &p, int iy, int iz)
{
    if (std::abs(iy) > g.half_y() || std::abs(iz) > g.half_z())
        throw DomainError("element_distance: index out of range");
    const Direction u = p.direction();
    const double eps = g.spacing() / p.r();
    const double dy = iy * eps - u.phi;
    const double dz = iz * eps - u.omega;
    return p.r() * std::sqrt(dy * dy + dz * dz + u.psi * u.psi);
}

} // namespace nfisac

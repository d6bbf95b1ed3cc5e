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

#include <cstddef>

namespace nfisac
{

/// Uniform planar array in the y-z plane, centred at the origin.
///
/// Elements sit at (0, n_y*d, n_z*d) with signed indices
/// n_y in [-(N_y-1)/2, (N_y-1)/2] and likewise for n_z. Vectors over the
/// array are laid out with n_z as the outer (slow) index and n_y inner.
class ArrayGeometry
{
public:
    /// Throws DomainError unless both counts are odd and positive,
    /// all lengths are positive and sqrt(element_area) < spacing.
    ArrayGeometry(int n_y, int n_z, double spacing, double element_area, double wavelength);

    int n_y() const noexcept { return n_y_; }
    int n_z() const noexcept { return n_z_; }
    double spacing() const noexcept { return spacing_; }
    double element_area() const noexcept { return element_area_; }
    double wavelength() const noexcept { return wavelength_; }

    std::size_t size() const noexcept { return static_cast<std::size_t>(n_y_) * static_cast<std::size_t>(n_z_); }
    int half_y() const noexcept { return (n_y_ - 1) / 2; }
    int half_z() const noexcept { return (n_z_ - 1) / 2; }

    /// Array occupation ratio A / d^2, in (0, 1].
    double aor() const noexcept { return element_area_ / (spacing_ * spacing_); }

    /// Linear position of element (iy, iz) in a channel vector. Throws DomainError when out of range.
    std::size_t linear_index(int iy, int iz) const;

    /// Same geometry with a different element count per axis.
    ArrayGeometry with_size(int n_y, int n_z) const { return {n_y, n_z, spacing_, element_area_, wavelength_}; }

    bool operator==(const ArrayGeometry &) const = default;

private:
    int n_y_;
    int n_z_;
    double spacing_;
    double element_area_;
    double wavelength_;
};

/// Unit direction of a placement: Psi = sin(th)cos(ph), Phi = sin(th)sin(ph), Omega = cos(th).
struct Direction
{
    double psi;
    double phi;
    double omega;
};

/// Spherical position of the user or target relative to the array centre.
class Placement
{
public:
    /// Throws DomainError if r <= 0, angles are out of range, or the point is not in front of the array (Psi <= 0).
    Placement(double r, double theta, double phi);

    double r() const noexcept { return r_; }
    double theta() const noexcept { return theta_; }
    double phi() const noexcept { return phi_; }

    Direction direction() const noexcept;

    bool operator==(const Placement &) const = default;

private:
    double r_;
    double theta_;
    double phi_;
};

Direction direction_triple(const Placement &p) noexcept;

/// Checks the placement against the array: hard error when r <= max(d, sqrt(A)),
/// warning through nfisac::warn when r < 10 d. Returns false when a warning was issued.
bool check_placement(const ArrayGeometry &g, const Placement &p);

/// Distance from placement p to element (iy, iz).
double element_distance(const ArrayGeometry &g, const Placement &p, int iy, int iz);

} // namespace nfisac

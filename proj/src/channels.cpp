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

#include "nfisac/channels.hpp"

#include "nfisac/errors.hpp"
#include "nfisac/numerics.hpp"
#include "nfisac/parallel.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numbers>

namespace nfisac
{

std::string_view to_string(ChannelModel m) noexcept
{
    switch (m)
    {
    case ChannelModel::Accurate: return "accurate";
    case ChannelModel::NoPolar: return "nopolar";
    case ChannelModel::UPW: return "upw";
    case ChannelModel::USW: return "usw";
    case ChannelModel::NUSW: return "nusw";
    }
    return "unknown";
}

std::optional<ChannelModel> parse_channel_model(std::string_view name)
{
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (ChannelModel m : all_channel_models)
        if (to_string(m) == lower)
            return m;
    return std::nullopt;
}

bool has_closed_form_norm(ChannelModel m) noexcept { return m != ChannelModel::NUSW; }

double ChannelVector::norm_sq() const noexcept { return squared_norm(gains); }

namespace
{

constexpr double four_pi = 4.0 * std::numbers::pi;

// exp(-j 2 pi x / lambda), with x reduced modulo lambda first.
std::complex<double> propagation_phase(double x, double lambda)
{
    const double reduced = std::fmod(x, lambda);
    return std::polar(1.0, -2.0 * std::numbers::pi * reduced / lambda);
}

} // namespace

ChannelVector build_channel(const ArrayGeometry &g, const Placement &p, ChannelModel m, unsigned threads)
{
    check_placement(g, p);

    ChannelVector out{m, p, g, std::vector<std::complex<double>>(g.size())};
    const Direction u = p.direction();
    const double r = p.r();
    const double d = g.spacing();
    const double area = g.element_area();
    const double lambda = g.wavelength();
    const double eps = d / r;
    const double x = r * u.psi;
    const double uniform_amp = std::sqrt(area / (four_pi * r * r));

    auto fill_row = [&](std::size_t row)
    {
        const int iz = static_cast<int>(row) - g.half_z();
        const double dz = iz * eps - u.omega;
        const double z_offset = r * u.omega - iz * d;
        std::complex<double> *dst = out.gains.data() + row * static_cast<std::size_t>(g.n_y());
        for (int iy = -g.half_y(); iy <= g.half_y(); ++iy)
        {
            const double dy = iy * eps - u.phi;
            const double re = r * std::sqrt(dy * dy + dz * dz + u.psi * u.psi);
            double amp = 0.0;
            std::complex<double> phase;
            switch (m)
            {
            case ChannelModel::Accurate:
                amp = std::sqrt(area * x * (x * x + z_offset * z_offset) / (four_pi * std::pow(re, 5)));
                phase = propagation_phase(re, lambda);
                break;
            case ChannelModel::NoPolar:
                amp = std::sqrt(area * x / (four_pi * re * re * re));
                phase = propagation_phase(re, lambda);
                break;
            case ChannelModel::UPW:
            {
                amp = uniform_amp;
                // r - n_y d Phi - n_z d Omega, reduced piecewise to keep the phase accurate at large r.
                const double path = std::fmod(r, lambda) - std::fmod(iy * d * u.phi, lambda) -
                                    std::fmod(iz * d * u.omega, lambda);
                phase = propagation_phase(path, lambda);
                break;
            }
            case ChannelModel::USW:
                amp = uniform_amp;
                phase = propagation_phase(re, lambda);
                break;
            case ChannelModel::NUSW:
                amp = std::sqrt(area / (four_pi * re * re));
                phase = propagation_phase(re, lambda);
                break;
            }
            dst[iy + g.half_y()] = amp * phase;
        }
    };

    const std::size_t rows = static_cast<std::size_t>(g.n_z());
    const unsigned workers = g.size() >= (1u << 16) ? threads : 1u;
    parallel_for(rows, workers, fill_row);
    return out;
}

double delta(double psi, double y, double z)
{
    if (!(psi > 0.0))
        throw DomainError("delta: Psi must be positive");
    const double root = std::sqrt(psi * psi + y * y + z * z);
    return (2.0 / 3.0) * std::atan(y * z / (psi * root)) +
           psi * y * z / (3.0 * (psi * psi + y * y) * root);
}

double delta_no_polar(double psi, double y, double z)
{
    if (!(psi > 0.0))
        throw DomainError("delta_no_polar: Psi must be positive");
    const double root = std::sqrt(psi * psi + y * y + z * z);
    return std::atan(y * z / (psi * root));
}

double closed_form_norm_sq(const ArrayGeometry &g, const Placement &p, ChannelModel m)
{
    switch (m)
    {
    case ChannelModel::UPW:
    case ChannelModel::USW:
        return static_cast<double>(g.size()) * g.element_area() / (four_pi * p.r() * p.r());
    case ChannelModel::NUSW:
        throw UnsupportedModelError("closed_form_norm_sq: no closed form for the NUSW model");
    case ChannelModel::Accurate:
    case ChannelModel::NoPolar:
        break;
    }

    const Direction u = p.direction();
    const double eps = g.spacing() / p.r();
    const double half_y = g.n_y() * eps / 2.0;
    const double half_z = g.n_z() * eps / 2.0;
    const std::array<double, 2> ys{half_y + u.phi, half_y - u.phi};
    const std::array<double, 2> zs{half_z + u.omega, half_z - u.omega};

    double sum = 0.0;
    for (double y : ys)
        for (double z : zs)
            sum += m == ChannelModel::Accurate ? delta(u.psi, y, z) : delta_no_polar(u.psi, y, z);
    return g.aor() / four_pi * sum;
}

double ccf(const ChannelVector &hc, const ChannelVector &hs)
{
    if (hc.size() != hs.size() || !(hc.geometry == hs.geometry))
        throw DomainError("ccf: channels must share the array geometry");
    if (hc.model != hs.model)
        throw DomainError("ccf: channels must use the same model");
    const double nc = hc.norm_sq();
    const double ns = hs.norm_sq();
    if (!(nc > 0.0) || !(ns > 0.0))
        throw DomainError("ccf: zero-norm channel");
    const double rho = std::norm(inner_product(hc.view(), hs.view())) / (nc * ns);
    return std::clamp(rho, 0.0, 1.0);
}

} // namespace nfisac

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

#include "nfisac/dl_rates.hpp"

#include "nfisac/errors.hpp"
#include "nfisac/numerics.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace nfisac
{

void SystemParams::validate() const
{
    if (!(p >= 0.0) || !(p_c >= 0.0) || !(p_s >= 0.0) || !std::isfinite(p) || !std::isfinite(p_c) || !std::isfinite(p_s))
        throw ConfigError("SystemParams: powers must be finite and non-negative");
    if (l_frame < 1)
        throw ConfigError("SystemParams: frame length L must be at least 1");
    if (!(alpha_s > 0.0) || !std::isfinite(alpha_s))
        throw ConfigError("SystemParams: target strength alpha_s must be positive");
    if (!(kappa >= 0.0 && kappa <= 1.0) || !(iota >= 0.0 && iota <= 1.0))
        throw ConfigError("SystemParams: kappa and iota must lie in [0, 1]");
}

LinkStats link_stats(const ChannelVector &hc, const ChannelVector &hs, NormPolicy policy)
{
    LinkStats s{};
    s.psi = inner_product(hc.view(), hs.view());
    s.rho = ccf(hc, hs);
    const bool closed = policy == NormPolicy::PreferClosedForm && has_closed_form_norm(hc.model) &&
                        has_closed_form_norm(hs.model);
    if (closed)
    {
        s.norm_c = closed_form_norm_sq(hc.geometry, hc.placement, hc.model);
        s.norm_s = closed_form_norm_sq(hs.geometry, hs.placement, hs.model);
        s.source = NormSource::ClosedForm;
    }
    else
    {
        s.norm_c = hc.norm_sq();
        s.norm_s = hs.norm_sq();
        s.source = NormSource::ElementSum;
    }
    return s;
}

std::vector<std::complex<double>> matched_beamformer(const ChannelVector &h)
{
    const double n = std::sqrt(h.norm_sq());
    if (!(n > 0.0))
        throw DomainError("matched_beamformer: zero-norm channel");
    std::vector<std::complex<double>> w(h.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = std::conj(h.gains[i]) / n;
    return w;
}

namespace
{

void require_unit(std::span<const std::complex<double>> w, std::size_t n, const char *op)
{
    if (w.size() != n)
        throw DomainError(std::string(op) + ": beamformer length does not match the channel");
    const double norm = std::sqrt(squared_norm(w));
    if (!(std::abs(norm - 1.0) <= 1e-9))
        throw DomainError(std::string(op) + ": beamformer must have unit norm");
}

double sensing_rate(double gain, const SystemParams &sp)
{
    const double L = sp.l_frame;
    return std::log2(1.0 + sp.p * L * sp.alpha_s * gain) / L;
}

} // namespace

double cr_given_w(const ChannelVector &hc, std::span<const std::complex<double>> w, double p)
{
    require_unit(w, hc.size(), "cr_given_w");
    return std::log2(1.0 + p * std::norm(bilinear_product(hc.view(), w)));
}

double sr_given_w(const ChannelVector &hs, std::span<const std::complex<double>> w, const SystemParams &sp)
{
    require_unit(w, hs.size(), "sr_given_w");
    return sensing_rate(hs.norm_sq() * std::norm(bilinear_product(hs.view(), w)), sp);
}

RatePair cc_rates(const LinkStats &s, const SystemParams &sp)
{
    return {sensing_rate(s.rho * s.norm_s * s.norm_s, sp), std::log2(1.0 + sp.p * s.norm_c), s.source};
}

RatePair cc_rates(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp, NormPolicy policy)
{
    return cc_rates(link_stats(hc, hs, policy), sp);
}

RatePair sc_rates(const LinkStats &s, const SystemParams &sp)
{
    return {sensing_rate(s.norm_s * s.norm_s, sp), std::log2(1.0 + sp.p * s.rho * s.norm_c), s.source};
}

RatePair sc_rates(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp, NormPolicy policy)
{
    return sc_rates(link_stats(hc, hs, policy), sp);
}

HighSnrApprox high_snr_approx(RateCurve curve, const LinkStats &s, const SystemParams &sp)
{
    if (!(sp.p > 0.0))
        throw DomainError("high_snr_approx: p must be positive");
    const double L = sp.l_frame;
    const double lp = std::log2(sp.p);
    double slope = 1.0;
    double offset = 0.0;
    switch (curve)
    {
    case RateCurve::CcCr:
        offset = std::log2(s.norm_c);
        break;
    case RateCurve::ScCr:
        offset = std::log2(s.rho * s.norm_c);
        break;
    case RateCurve::CcSr:
        slope = 1.0 / L;
        offset = 2.0 * std::log2(std::sqrt(L * sp.alpha_s * s.rho) * s.norm_s) / L;
        break;
    case RateCurve::ScSr:
        slope = 1.0 / L;
        offset = 2.0 * std::log2(std::sqrt(L * sp.alpha_s) * s.norm_s) / L;
        break;
    }
    const bool degenerate = std::isinf(offset) && offset < 0.0;
    return {slope * lp + offset, slope, offset, degenerate};
}

bool requires_ccf_constant(Asymptote a) noexcept
{
    switch (a)
    {
    case Asymptote::CcSr:
    case Asymptote::CcSrNoPolar:
    case Asymptote::ScCr:
    case Asymptote::ScCrNoPolar:
        return true;
    default:
        return false;
    }
}

double asymptotic_limit(Asymptote a, const SystemParams &sp, double zeta, std::optional<double> c_rho)
{
    double c = 1.0;
    if (requires_ccf_constant(a))
    {
        if (!c_rho)
            throw ConfigError("asymptotic_limit: this limit needs an estimated correlation constant");
        if (!(*c_rho >= 0.0 && *c_rho <= 1.0))
            throw ConfigError("asymptotic_limit: correlation constant must lie in [0, 1]");
        c = *c_rho;
    }
    const double L = sp.l_frame;
    const double z2 = zeta * zeta;
    switch (a)
    {
    case Asymptote::CcCr: return std::log2(1.0 + sp.p * zeta / 3.0);
    case Asymptote::CcCrNoPolar: return std::log2(1.0 + sp.p * zeta / 2.0);
    case Asymptote::ScCr: return std::log2(1.0 + c * sp.p * zeta / 3.0);
    case Asymptote::ScCrNoPolar: return std::log2(1.0 + c * sp.p * zeta / 2.0);
    case Asymptote::ScSr: return std::log2(1.0 + sp.p * L * sp.alpha_s * z2 / 9.0) / L;
    case Asymptote::ScSrNoPolar: return std::log2(1.0 + sp.p * L * sp.alpha_s * z2 / 4.0) / L;
    case Asymptote::CcSr: return std::log2(1.0 + c * sp.p * L * sp.alpha_s * z2 / 9.0) / L;
    case Asymptote::CcSrNoPolar: return std::log2(1.0 + c * sp.p * L * sp.alpha_s * z2 / 4.0) / L;
    case Asymptote::UlCcSrLower:
        return std::log2(1.0 + sp.p_s * L * sp.alpha_s * z2 / (9.0 + 3.0 * sp.p_c * zeta)) / L;
    case Asymptote::UlScCrLower:
        return std::log2(1.0 + 3.0 * sp.p_c * zeta / (9.0 + sp.p_s * sp.alpha_s * z2));
    }
    return std::numeric_limits<double>::quiet_NaN();
}

std::vector<std::complex<double>> tau_beamformer(const ChannelVector &hc, const ChannelVector &hs, double tau)
{
    if (!(tau >= 0.0 && tau <= 1.0))
        throw DomainError("tau_beamformer: tau must lie in [0, 1]");
    if (hc.size() != hs.size())
        throw DomainError("tau_beamformer: channel lengths differ");
    const std::complex<double> psi = inner_product(hc.view(), hs.view());
    const std::complex<double> align = std::polar(1.0, -std::arg(psi));
    std::vector<std::complex<double>> w(hc.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = std::conj(tau * hc.gains[i] + (1.0 - tau) * hs.gains[i] * align);
    const double n = std::sqrt(squared_norm(w));
    if (!(n > 0.0) || !std::isfinite(n))
        throw DomainError("tau_beamformer: combination of the two channels vanishes");
    for (auto &x : w)
        x /= n;
    return w;
}

RatePair tau_rate_pair(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp, double tau)
{
    const auto w = tau_beamformer(hc, hs, tau);
    return {sr_given_w(hs, w, sp), cr_given_w(hc, w, sp.p), NormSource::ElementSum};
}

RatePair tau_rate_pair(const LinkStats &s, const SystemParams &sp, double tau)
{
    if (!(tau >= 0.0 && tau <= 1.0))
        throw DomainError("tau_rate_pair: tau must lie in [0, 1]");
    const double t = tau;
    const double u = 1.0 - tau;
    const double x = s.cross_abs();
    const double den = t * t * s.norm_c + u * u * s.norm_s + 2.0 * t * u * x;
    if (!(den > 0.0))
        throw DomainError("tau_rate_pair: combination of the two channels vanishes");
    const double gc = t * s.norm_c + u * x;
    const double gs = t * x + u * s.norm_s;
    return {sensing_rate(s.norm_s * gs * gs / den, sp), std::log2(1.0 + sp.p * gc * gc / den), s.source};
}

RatePair fdsac_rates(const LinkStats &s, const SystemParams &sp)
{
    const double L = sp.l_frame;
    const double k = sp.kappa;
    const double i = sp.iota;
    RatePair out{0.0, 0.0, s.source};
    if (k > 0.0)
        out.sr = k / L * std::log2(1.0 + i / k * sp.p * L * sp.alpha_s * s.norm_s * s.norm_s);
    if (k < 1.0)
        out.cr = (1.0 - k) * std::log2(1.0 + (1.0 - i) / (1.0 - k) * sp.p * s.norm_c);
    return out;
}

} // namespace nfisac

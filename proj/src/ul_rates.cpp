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

#include "nfisac/ul_rates.hpp"

#include "nfisac/errors.hpp"

#include <cmath>

namespace nfisac
{

namespace
{

LinkStats closed_form_stats(const ArrayGeometry &g, const Placement &cu, const Placement &target, ChannelModel m)
{
    // The lower bounds only depend on the norms; rho = 1 is the worst case they describe.
    return {closed_form_norm_sq(g, cu, m), closed_form_norm_sq(g, target, m), 1.0, {}, NormSource::ClosedForm};
}

} // namespace

RatePair ul_cc_rates(const LinkStats &st, const SystemParams &sp)
{
    const double L = sp.l_frame;
    const double x = st.cross_abs();
    const double residual = st.norm_s - sp.p_c * x * x / (1.0 + sp.p_c * st.norm_c);
    const double sr = std::log2(1.0 + sp.p_s * L * sp.alpha_s * st.norm_s * residual) / L;
    const double cr = std::log2(1.0 + sp.p_c * st.norm_c);
    return {sr, cr, st.source};
}

RatePair ul_cc_rates(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp, NormPolicy policy)
{
    return ul_cc_rates(link_stats(hc, hs, policy), sp);
}

double ul_cc_sr_lower(const LinkStats &st, const SystemParams &sp)
{
    const double L = sp.l_frame;
    return std::log2(1.0 + sp.p_s * L * sp.alpha_s * st.norm_s * st.norm_s / (1.0 + sp.p_c * st.norm_c)) / L;
}

double ul_cc_sr_lower(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp, NormPolicy policy)
{
    return ul_cc_sr_lower(link_stats(hc, hs, policy), sp);
}

double ul_cc_sr_lower(const ArrayGeometry &g, const Placement &cu, const Placement &target, ChannelModel m,
                      const SystemParams &sp)
{
    return ul_cc_sr_lower(closed_form_stats(g, cu, target, m), sp);
}

RatePair ul_sc_rates(const LinkStats &st, const SystemParams &sp)
{
    const double L = sp.l_frame;
    const double x = st.cross_abs();
    const double q = sp.p_s * sp.alpha_s * st.norm_s;
    const double residual = st.norm_c - q * x * x / (1.0 + q * st.norm_s);
    const double cr = std::log2(1.0 + sp.p_c * residual);
    const double sr = std::log2(1.0 + sp.p_s * L * sp.alpha_s * st.norm_s * st.norm_s) / L;
    return {sr, cr, st.source};
}

RatePair ul_sc_rates(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp, NormPolicy policy)
{
    return ul_sc_rates(link_stats(hc, hs, policy), sp);
}

double ul_sc_cr_lower(const LinkStats &st, const SystemParams &sp)
{
    return std::log2(1.0 + sp.p_c * st.norm_c / (1.0 + sp.p_s * sp.alpha_s * st.norm_s * st.norm_s));
}

double ul_sc_cr_lower(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp, NormPolicy policy)
{
    return ul_sc_cr_lower(link_stats(hc, hs, policy), sp);
}

double ul_sc_cr_lower(const ArrayGeometry &g, const Placement &cu, const Placement &target, ChannelModel m,
                      const SystemParams &sp)
{
    return ul_sc_cr_lower(closed_form_stats(g, cu, target, m), sp);
}

RatePair time_sharing(const LinkStats &st, const SystemParams &sp, double varrho)
{
    if (!(varrho >= 0.0 && varrho <= 1.0))
        throw DomainError("time_sharing: varrho must lie in [0, 1]");
    const RatePair cc = ul_cc_rates(st, sp);
    const RatePair sc = ul_sc_rates(st, sp);
    return {varrho * sc.sr + (1.0 - varrho) * cc.sr, varrho * sc.cr + (1.0 - varrho) * cc.cr, st.source};
}

RatePair time_sharing(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp, double varrho,
                      NormPolicy policy)
{
    return time_sharing(link_stats(hc, hs, policy), sp, varrho);
}

RatePair ul_fdsac_rates(const LinkStats &st, const SystemParams &sp)
{
    sp.validate();
    const double L = sp.l_frame;
    const double k = sp.kappa;
    RatePair out{0.0, 0.0, st.source};
    if (k > 0.0)
        out.sr = k / L * std::log2(1.0 + sp.p_s * L * sp.alpha_s * st.norm_s * st.norm_s / k);
    if (k < 1.0)
        out.cr = (1.0 - k) * std::log2(1.0 + sp.p_c * st.norm_c / (1.0 - k));
    return out;
}

RatePair ul_fdsac_rates(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp, NormPolicy policy)
{
    return ul_fdsac_rates(link_stats(hc, hs, policy), sp);
}

HighSnrApprox ul_high_snr_approx(UlRateCurve curve, const LinkStats &st, const SystemParams &sp)
{
    const double L = sp.l_frame;
    const double x = st.cross_abs();
    const double q = sp.p_s * sp.alpha_s * st.norm_s;
    double slope = 1.0;
    double gain = 0.0;
    double power = sp.p_c;
    switch (curve)
    {
    case UlRateCurve::CcCr:
        gain = st.norm_c;
        break;
    case UlRateCurve::ScCr:
        gain = st.norm_c - q * x * x / (1.0 + q * st.norm_s);
        break;
    case UlRateCurve::ScCrLower:
        gain = st.norm_c / (1.0 + q * st.norm_s);
        break;
    case UlRateCurve::ScSr:
        slope = 1.0 / L;
        power = sp.p_s;
        gain = L * sp.alpha_s * st.norm_s * st.norm_s;
        break;
    case UlRateCurve::CcSr:
        slope = 1.0 / L;
        power = sp.p_s;
        gain = L * sp.alpha_s * st.norm_s * (st.norm_s - sp.p_c * x * x / (1.0 + sp.p_c * st.norm_c));
        break;
    case UlRateCurve::CcSrLower:
        slope = 1.0 / L;
        power = sp.p_s;
        gain = L * sp.alpha_s * st.norm_s * st.norm_s / (1.0 + sp.p_c * st.norm_c);
        break;
    }
    if (!(power > 0.0))
        throw DomainError("ul_high_snr_approx: the swept power must be positive");
    const double offset = slope * std::log2(gain);
    return {slope * std::log2(power) + offset, slope, offset, !(gain > 0.0)};
}

} // namespace nfisac

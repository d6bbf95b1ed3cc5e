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

#include "nfisac/dl_rates.hpp"

namespace nfisac
{

/// SIC order at the uplink receiver.
enum class UplinkDesign
{
    CommCentric,    ///< sensing echo decoded first with the CU signal as interference
    SensingCentric, ///< CU signal decoded first with the echo as interference
};

/// C-C order: CR = log2(1 + p_c ||hc||^2) and the interference-limited SR.
RatePair ul_cc_rates(const LinkStats &stats, const SystemParams &sp);
RatePair ul_cc_rates(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp,
                     NormPolicy policy = NormPolicy::PreferClosedForm);

/// Worst-case (rho = 1) lower bound (1/L) log2(1 + p_s L alpha_s ||hs||^4 / (1 + p_c ||hc||^2)).
double ul_cc_sr_lower(const LinkStats &stats, const SystemParams &sp);
double ul_cc_sr_lower(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp,
                      NormPolicy policy = NormPolicy::PreferClosedForm);
/// Same bound with both norms from the closed forms; UnsupportedModelError for NUSW.
double ul_cc_sr_lower(const ArrayGeometry &g, const Placement &cu, const Placement &target, ChannelModel m,
                      const SystemParams &sp);

/// S-C order: SR as in the downlink S-C design and the interference-limited CR.
RatePair ul_sc_rates(const LinkStats &stats, const SystemParams &sp);
RatePair ul_sc_rates(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp,
                     NormPolicy policy = NormPolicy::PreferClosedForm);

/// Worst-case (rho = 1) lower bound log2(1 + p_c ||hc||^2 / (1 + p_s alpha_s ||hs||^4)).
double ul_sc_cr_lower(const LinkStats &stats, const SystemParams &sp);
double ul_sc_cr_lower(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp,
                      NormPolicy policy = NormPolicy::PreferClosedForm);
double ul_sc_cr_lower(const ArrayGeometry &g, const Placement &cu, const Placement &target, ChannelModel m,
                      const SystemParams &sp);

/// varrho * S-C pair + (1 - varrho) * C-C pair. Throws DomainError for varrho outside [0, 1].
RatePair time_sharing(const LinkStats &stats, const SystemParams &sp, double varrho);
RatePair time_sharing(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp, double varrho,
                      NormPolicy policy = NormPolicy::PreferClosedForm);

/// Frequency-division uplink with bandwidth split kappa to sensing; kappa in {0, 1} taken as limits.
RatePair ul_fdsac_rates(const LinkStats &stats, const SystemParams &sp);
RatePair ul_fdsac_rates(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp,
                        NormPolicy policy = NormPolicy::PreferClosedForm);

/// Uplink rate curves with a high-SNR expansion; CR curves expand in p_c, SR curves in p_s.
enum class UlRateCurve
{
    CcCr,
    CcSr,
    CcSrLower,
    ScSr,
    ScCr,
    ScCrLower,
};

/// slope * log2(p_c or p_s) + offset, with the other power held at its value in `sp`.
HighSnrApprox ul_high_snr_approx(UlRateCurve curve, const LinkStats &stats, const SystemParams &sp);

} // namespace nfisac

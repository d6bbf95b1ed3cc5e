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

#include "nfisac/channels.hpp"

#include <cmath>
#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace nfisac
{

/// Powers expressed in dB relative to unit noise power.
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

/// Transmit powers are linear SNRs (unit noise). `p` drives the downlink,
/// `p_c` and `p_s` the uplink communication and sensing signals.
struct SystemParams
{
    double p = db_to_linear(90.0);
    double p_c = db_to_linear(60.0);
    double p_s = db_to_linear(85.0);
    int l_frame = 4;
    double alpha_s = 1.0;
    double kappa = 0.5;
    double iota = 0.5;

    /// Throws ConfigError on negative powers, l_frame < 1, alpha_s <= 0 or splits outside [0, 1].
    void validate() const;
};

/// Which route produced the squared norms behind a rate.
enum class NormSource
{
    ClosedForm,
    ElementSum,
};

enum class NormPolicy
{
    PreferClosedForm, ///< closed form where the model has one, element sum otherwise
    ElementSum,       ///< always sum the explicit vector
};

struct RatePair
{
    double sr = 0.0;
    double cr = 0.0;
    NormSource source = NormSource::ElementSum;
};

/// Scalars that every two-channel rate formula depends on.
struct LinkStats
{
    double norm_c;             ///< ||hc||^2
    double norm_s;             ///< ||hs||^2
    double rho;                ///< channel correlation factor, always from the explicit vectors
    std::complex<double> psi;  ///< hc^H hs from the explicit vectors
    NormSource source;

    /// |hc^H hs| consistent with the chosen norms: sqrt(rho ||hc||^2 ||hs||^2).
    double cross_abs() const noexcept { return std::sqrt(rho * norm_c * norm_s); }
};

LinkStats link_stats(const ChannelVector &hc, const ChannelVector &hs,
                     NormPolicy policy = NormPolicy::PreferClosedForm);

/// h^* / ||h||.
std::vector<std::complex<double>> matched_beamformer(const ChannelVector &h);

/// log2(1 + p |hc^T w|^2). Throws DomainError unless ||w|| = 1 within 1e-9.
double cr_given_w(const ChannelVector &hc, std::span<const std::complex<double>> w, double p);

/// (1/L) log2(1 + p L alpha_s ||hs||^2 |hs^T w|^2). Throws DomainError unless ||w|| = 1 within 1e-9.
double sr_given_w(const ChannelVector &hs, std::span<const std::complex<double>> w, const SystemParams &sp);

/// Communications-centric beamformer w = hc^*/||hc||.
RatePair cc_rates(const LinkStats &stats, const SystemParams &sp);
RatePair cc_rates(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp,
                  NormPolicy policy = NormPolicy::PreferClosedForm);

/// Sensing-centric beamformer w = hs^*/||hs||.
RatePair sc_rates(const LinkStats &stats, const SystemParams &sp);
RatePair sc_rates(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp,
                  NormPolicy policy = NormPolicy::PreferClosedForm);

enum class RateCurve
{
    CcCr,
    CcSr,
    ScSr,
    ScCr,
};

/// slope * log2(p) + offset. `degenerate` is set when the offset is -inf (rho = 0).
struct HighSnrApprox
{
    double value;
    double slope;
    double offset;
    bool degenerate;
};

HighSnrApprox high_snr_approx(RateCurve curve, const LinkStats &stats, const SystemParams &sp);

/// Large-array limits of the closed-form rates.
enum class Asymptote
{
    CcCr,
    CcCrNoPolar,
    CcSr,        ///< needs the correlation constant
    CcSrNoPolar, ///< needs the correlation constant
    ScSr,
    ScSrNoPolar,
    ScCr,        ///< needs the correlation constant
    ScCrNoPolar, ///< needs the correlation constant
    UlCcSrLower,
    UlScCrLower,
};

bool requires_ccf_constant(Asymptote a) noexcept;

/// Throws ConfigError when `c_rho` is required but absent or outside [0, 1].
double asymptotic_limit(Asymptote a, const SystemParams &sp, double zeta, std::optional<double> c_rho = std::nullopt);

/// Unit beamformer in the plane of hc^* and hs^*, weighted by tau in [0, 1]:
/// w = conj(tau hc + (1 - tau) hs e^{-j arg(hc^H hs)}) / ||.||.
/// Throws DomainError for tau outside [0, 1] or a vanishing combination.
std::vector<std::complex<double>> tau_beamformer(const ChannelVector &hc, const ChannelVector &hs, double tau);

/// Rate pair of tau_beamformer evaluated through cr_given_w / sr_given_w.
RatePair tau_rate_pair(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp, double tau);

/// Same pair from the scalar fraction forms; `stats` supplies the norms and |hc^H hs|.
RatePair tau_rate_pair(const LinkStats &stats, const SystemParams &sp, double tau);

/// Frequency-division baseline with bandwidth split kappa and power split iota (both to sensing).
RatePair fdsac_rates(const LinkStats &stats, const SystemParams &sp);

} // namespace nfisac

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
#include "nfisac/errors.hpp"

#include <complex>
#include <vector>

namespace nfisac
{

/// Raised when hc and hs are (nearly) parallel and the rate-profile problem collapses to a single ray.
class DegenerateChannelsError : public DomainError
{
public:
    using DomainError::DomainError;
};

enum class ParetoRegime
{
    CcEndpoint,
    Interior,
    ScEndpoint,
};

/// sigma <= cc_upper selects the communications-centric beamformer,
/// sigma >= sc_lower the sensing-centric one; the open interval between is interior.
struct RegimeThresholds
{
    double cc_upper;
    double sc_lower;
};

RegimeThresholds regime_thresholds(const LinkStats &stats, const SystemParams &sp);

struct ParetoSolution
{
    double sigma = 0.0;
    std::vector<std::complex<double>> w;
    double r_star = 0.0;
    ParetoRegime regime = ParetoRegime::CcEndpoint;
    double mu1 = 0.0;
    double mu2 = 0.0;
    double xi = 0.0;     ///< sqrt(L alpha_s ||hs||^2)
    int iterations = 0;  ///< root-finder evaluations (interior only)
    double kkt_residual = 0.0;
    RatePair achieved;   ///< rates of w through the generic-beamformer formulas
};

/// Maximises R subject to SR >= sigma R, CR >= (1 - sigma) R over unit-norm w.
///
/// Endpoint regimes return the matched beamformers. In the interior both
/// constraints are active: R* is the root of the ellipse condition in the
/// plane of hc^* and hs^*, bracketed by doubling from R = 1 and refined with
/// TOMS 748 to 1e-12 absolute; w and the multipliers follow in closed form.
///
/// Norms and the cross term always come from the explicit vectors so that the
/// returned w satisfies the active constraints to rounding.
///
/// Throws DomainError for sigma outside [0, 1], DegenerateChannelsError when
/// rho > 1 - 1e-6, and NumericalError if the root is not found within 200 evaluations.
ParetoSolution solve_rate_profile(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp,
                                  double sigma);

/// Largest of: relative stationarity residual, relative violation of each active
/// constraint, the multiplier normalisation residual and any negative multiplier.
/// Throws DomainError for endpoint solutions.
double kkt_residuals(const ParetoSolution &sol, const ChannelVector &hc, const ChannelVector &hs,
                     const SystemParams &sp);

enum class SigmaRange
{
    Unit,     ///< grid over [0, 1]
    Interior, ///< grid over [cc_upper, sc_lower], both endpoints included
};

std::vector<ParetoSolution> sigma_sweep(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp,
                                        int grid_size, SigmaRange range = SigmaRange::Interior);

} // namespace nfisac

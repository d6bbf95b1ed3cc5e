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

#include "nfisac/pareto.hpp"

#include "nfisac/errors.hpp"
#include "nfisac/numerics.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>

namespace nfisac
{

namespace
{

constexpr double ln2 = std::numbers::ln2;
constexpr double degenerate_rho = 1.0 - 1e-6;
constexpr int max_root_evaluations = 200;

struct Profile
{
    double c1; // 2^{(1-sigma)R} - 1
    double c2; // 2^{sigma L R} - 1
};

Profile profile(double sigma, int L, double R)
{
    return {std::expm1((1.0 - sigma) * R * ln2), std::expm1(sigma * L * R * ln2)};
}

} // namespace

RegimeThresholds regime_thresholds(const LinkStats &stats, const SystemParams &sp)
{
    const RatePair cc = cc_rates(stats, sp);
    const RatePair sc = sc_rates(stats, sp);
    const double cc_sum = cc.cr + cc.sr;
    const double sc_sum = sc.cr + sc.sr;
    return {cc_sum > 0.0 ? cc.sr / cc_sum : 0.0, sc_sum > 0.0 ? sc.sr / sc_sum : 1.0};
}

ParetoSolution solve_rate_profile(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp,
                                  double sigma)
{
    if (!(sigma >= 0.0 && sigma <= 1.0))
        throw DomainError("solve_rate_profile: sigma must lie in [0, 1]");
    sp.validate();
    const LinkStats st = link_stats(hc, hs, NormPolicy::ElementSum);
    if (st.rho > degenerate_rho)
        throw DegenerateChannelsError("solve_rate_profile: communication and sensing channels are (nearly) parallel");

    ParetoSolution sol;
    sol.sigma = sigma;
    sol.xi = std::sqrt(sp.l_frame * sp.alpha_s * st.norm_s);

    const RegimeThresholds th = regime_thresholds(st, sp);
    if (sigma <= th.cc_upper)
    {
        sol.regime = ParetoRegime::CcEndpoint;
        sol.w = matched_beamformer(hc);
        sol.r_star = cc_rates(st, sp).cr / (1.0 - sigma);
        sol.mu1 = 1.0 / (std::exp2((1.0 - sigma) * sol.r_star) * (1.0 - sigma) * ln2);
    }
    else if (sigma >= th.sc_lower)
    {
        sol.regime = ParetoRegime::ScEndpoint;
        sol.w = matched_beamformer(hs);
        sol.r_star = sc_rates(st, sp).sr / sigma;
        sol.mu2 = 1.0 / (std::exp2(sigma * sp.l_frame * sol.r_star) * sigma * sp.l_frame * ln2);
    }
    else
    {
        sol.regime = ParetoRegime::Interior;
        const int L = sp.l_frame;
        const double nc = st.norm_c;
        const double ns = st.norm_s;
        const double x = std::abs(st.psi);
        const double xi = sol.xi;
        const double gram_det = nc * ns - x * x;
        const double rhs = sp.p * xi * xi * gram_det;

        // Ellipse condition, normalised so that it equals -1 at R = 0.
        auto residual = [&](double R)
        {
            const Profile c = profile(sigma, L, R);
            const double lhs = c.c2 * nc + c.c1 * xi * xi * ns - 2.0 * std::sqrt(c.c1 * c.c2) * xi * x;
            return lhs / rhs - 1.0;
        };

        int evaluations = 0;
        double lo = 0.0;
        double hi = 1.0;
        double f_hi = residual(hi);
        ++evaluations;
        while (!(f_hi > 0.0))
        {
            if (!std::isfinite(f_hi) || evaluations >= max_root_evaluations)
            {
                std::ostringstream msg;
                msg << "no bracket for sigma = " << sigma << " after " << evaluations << " evaluations (hi = " << hi << ")";
                throw NumericalError("solve_rate_profile", msg.str());
            }
            lo = hi;
            hi *= 2.0;
            f_hi = residual(hi);
            ++evaluations;
        }

        const double f_lo = lo == 0.0 ? -1.0 : residual(lo);
        std::uintmax_t max_iter = static_cast<std::uintmax_t>(max_root_evaluations - evaluations);
        auto tol = [](double a, double b) { return std::abs(b - a) <= 1e-12; };
        const auto [a, b] = boost::math::tools::toms748_solve(residual, lo, hi, f_lo, f_hi, tol, max_iter);
        evaluations += static_cast<int>(max_iter);
        if (!tol(a, b))
        {
            std::ostringstream msg;
            msg << "root for sigma = " << sigma << " not converged: bracket [" << a << ", " << b << "] after "
                << evaluations << " evaluations";
            throw NumericalError("solve_rate_profile", msg.str());
        }
        sol.r_star = 0.5 * (a + b);
        sol.iterations = evaluations;

        const double R = sol.r_star;
        const Profile c = profile(sigma, L, R);
        const double chi = std::sqrt(c.c2 / c.c1);
        const double g1 = std::exp2((1.0 - sigma) * R) * (1.0 - sigma) * ln2;
        const double g2 = std::exp2(sigma * L * R) * sigma * L * ln2;
        const double num1 = xi * xi * ns - chi * xi * x;
        const double num2 = nc - xi * x / chi;
        const double den = num2 * g2 + num1 * g1;
        sol.mu1 = num1 / den;
        sol.mu2 = num2 / den;

        const double a1 = sol.mu1 * std::sqrt(c.c1 * sp.p);
        const double a2 = sol.mu2 * std::sqrt(c.c2 * sp.p) * xi;
        const double norm = std::sqrt(c.c1 * sol.mu1 * sol.mu1 * sp.p * nc + c.c2 * sol.mu2 * sol.mu2 * sp.p * xi * xi * ns +
                                      2.0 * std::sqrt(c.c1 * c.c2) * sol.mu1 * sol.mu2 * sp.p * xi * x);
        const std::complex<double> align = std::polar(1.0, -std::arg(st.psi));
        sol.w.resize(hc.size());
        for (std::size_t i = 0; i < sol.w.size(); ++i)
            sol.w[i] = std::conj(a1 * hc.gains[i] + a2 * hs.gains[i] * align) / norm;
    }

    sol.achieved = {sr_given_w(hs, sol.w, sp), cr_given_w(hc, sol.w, sp.p), NormSource::ElementSum};
    if (sol.regime == ParetoRegime::Interior)
        sol.kkt_residual = kkt_residuals(sol, hc, hs, sp);
    return sol;
}

double kkt_residuals(const ParetoSolution &sol, const ChannelVector &hc, const ChannelVector &hs,
                     const SystemParams &sp)
{
    if (sol.regime != ParetoRegime::Interior)
        throw DomainError("kkt_residuals: only defined for interior solutions");
    const std::span<const std::complex<double>> w = sol.w;
    if (w.size() != hc.size() || w.size() != hs.size())
        throw DomainError("kkt_residuals: beamformer length does not match the channels");

    const int L = sp.l_frame;
    const double sigma = sol.sigma;
    const double R = sol.r_star;
    const double xi2 = sol.xi * sol.xi;
    const Profile c = profile(sigma, L, R);

    // hc^T w = conj(hc)^H w; the gradient of |hc^T w|^2 w.r.t. conj(w) is conj(hc) hc^T w.
    const std::complex<double> gc = bilinear_product(hc.view(), w);
    const std::complex<double> gs = bilinear_product(hs.view(), w);
    const double uc = std::norm(gc);
    const double us = std::norm(gs);
    const double lambda = sol.mu1 * sp.p * uc + sol.mu2 * sp.p * xi2 * us;

    CompensatedSum stationarity;
    for (std::size_t i = 0; i < w.size(); ++i)
    {
        const std::complex<double> v = sol.mu1 * sp.p * std::conj(hc.gains[i]) * gc +
                                       sol.mu2 * sp.p * xi2 * std::conj(hs.gains[i]) * gs - lambda * w[i];
        stationarity.add(std::norm(v));
    }
    const double r_stat = std::sqrt(stationarity.value()) / std::abs(lambda);
    const double r_c1 = std::abs(c.c1 - sp.p * uc) / c.c1;
    const double r_c2 = std::abs(c.c2 - sp.p * xi2 * us) / c.c2;
    const double r_norm = std::abs(sol.mu1 * std::exp2((1.0 - sigma) * R) * (1.0 - sigma) * ln2 +
                                   sol.mu2 * std::exp2(sigma * L * R) * sigma * L * ln2 - 1.0);
    const double r_sign = std::max({0.0, -sol.mu1, -sol.mu2});
    return std::max({r_stat, r_c1, r_c2, r_norm, r_sign});
}

std::vector<ParetoSolution> sigma_sweep(const ChannelVector &hc, const ChannelVector &hs, const SystemParams &sp,
                                        int grid_size, SigmaRange range)
{
    if (grid_size < 2)
        throw DomainError("sigma_sweep: grid needs at least two points");
    double lo = 0.0;
    double hi = 1.0;
    if (range == SigmaRange::Interior)
    {
        const RegimeThresholds th = regime_thresholds(link_stats(hc, hs, NormPolicy::ElementSum), sp);
        lo = th.cc_upper;
        hi = th.sc_lower;
    }
    std::vector<ParetoSolution> out;
    out.reserve(static_cast<std::size_t>(grid_size));
    for (int k = 0; k < grid_size; ++k)
    {
        const double sigma = k == grid_size - 1 ? hi : lo + (hi - lo) * k / (grid_size - 1);
        out.push_back(solve_rate_profile(hc, hs, sp, sigma));
    }
    return out;
}

} // namespace nfisac

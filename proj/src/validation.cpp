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

#include "nfisac/validation.hpp"

#include "nfisac/config.hpp"
#include "nfisac/errors.hpp"
#include "nfisac/oracles.hpp"
#include "nfisac/pareto.hpp"
#include "nfisac/regions.hpp"
#include "nfisac/ul_rates.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

namespace nfisac
{

namespace
{

constexpr double pi = std::numbers::pi;

struct Defaults
{
    ArrayGeometry g = GeometrySpec{}.build();
    Placement cu{10.0, pi / 4, pi / 6};
    Placement target{5.0, pi / 4, -pi / 6};
    SystemParams sp;
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(4);
    os << x;
    return os.str();
}

// 1 ----------------------------------------------------------------------
CriterionResult closed_form_norms(const ValidationOptions &o)
{
    CriterionResult c{1, "closed_form_vs_bruteforce_norms", false, 0.0, 1e-3, {}};
    const auto t0 = std::chrono::steady_clock::now();
    double worst_approx = 0.0;
    double worst_exact = 0.0;
    for (int k = 0; k < 50; ++k)
    {
        SampleRng rng(o.seed, 0x100000u + static_cast<std::uint64_t>(k));
        const double lambda = rng.uniform(0.05, 0.3);
        const double d = lambda * rng.uniform(0.3, 1.0);
        const double zeta = rng.uniform(0.1, 0.9);
        const int ny = 2 * static_cast<int>(rng.uniform(0.0, 100.0)) + 1;
        const int nz = 2 * static_cast<int>(rng.uniform(0.0, 100.0)) + 1;
        const double eps = rng.uniform(0.002, 0.01);
        const double theta = rng.uniform(pi / 6, 5 * pi / 6);
        const double phi = rng.uniform(-pi / 3, pi / 3);
        const ArrayGeometry g(ny, nz, d, zeta * d * d, lambda);
        const Placement p(d / eps, theta, phi);
        for (ChannelModel m : {ChannelModel::Accurate, ChannelModel::NoPolar, ChannelModel::UPW, ChannelModel::USW})
        {
            const double brute = norm_sq_bruteforce(g, p, m);
            const double err = rel(closed_form_norm_sq(g, p, m), brute);
            if (m == ChannelModel::Accurate || m == ChannelModel::NoPolar)
                worst_approx = std::max(worst_approx, err);
            else
                worst_exact = std::max(worst_exact, err);
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.metric = worst_approx;
    c.passed = worst_approx < 1e-3 && worst_exact < 1e-12 && secs < 30.0;
    c.detail = "accurate/nopolar worst " + fmt(worst_approx) + " (< 1e-3), upw/usw worst " + fmt(worst_exact) +
               " (< 1e-12), " + fmt(secs) + " s (< 30 s)";
    return c;
}

// 2 ----------------------------------------------------------------------
CriterionResult asymptotic_limits(const ValidationOptions &o)
{
    CriterionResult c{2, "asymptotic_limits_at_2001", false, 0.0, 0.01, {}};
    const Defaults d;
    const double zeta = d.g.aor();
    const ArrayGeometry big = d.g.with_size(2001, 2001);
    std::vector<ArrayGeometry> ladder{d.g.with_size(501, 501), d.g.with_size(1001, 1001), big};
    const CcfEstimate est = ccf_limit_estimate(ladder, constant_placement_sampler(d.cu, d.target), 100, o.seed,
                                               ChannelModel::Accurate, {}, o.threads);
    auto stats = [&](ChannelModel m, double rho)
    {
        return LinkStats{closed_form_norm_sq(big, d.cu, m), closed_form_norm_sq(big, d.target, m), rho, {},
                         NormSource::ClosedForm};
    };
    const LinkStats acc = stats(ChannelModel::Accurate, est.converged_value);
    const LinkStats np = stats(ChannelModel::NoPolar, 0.0);
    struct Check
    {
        const char *name;
        double rate;
        double limit;
    };
    const Check checks[] = {
        {"CcCr", cc_rates(acc, d.sp).cr, asymptotic_limit(Asymptote::CcCr, d.sp, zeta)},
        {"CcCrNoPolar", cc_rates(np, d.sp).cr, asymptotic_limit(Asymptote::CcCrNoPolar, d.sp, zeta)},
        {"CcSr", cc_rates(acc, d.sp).sr, asymptotic_limit(Asymptote::CcSr, d.sp, zeta, est.converged_value)},
        {"ScSr", sc_rates(acc, d.sp).sr, asymptotic_limit(Asymptote::ScSr, d.sp, zeta)},
        {"ScSrNoPolar", sc_rates(np, d.sp).sr, asymptotic_limit(Asymptote::ScSrNoPolar, d.sp, zeta)},
        {"ScCr", sc_rates(acc, d.sp).cr, asymptotic_limit(Asymptote::ScCr, d.sp, zeta, est.converged_value)},
    };
    std::string worst_name;
    std::string over;
    for (const Check &k : checks)
    {
        const double e = rel(k.rate, k.limit);
        if (e >= c.metric)
        {
            c.metric = e;
            worst_name = k.name;
        }
        if (!(e < c.threshold))
            over += std::string(over.empty() ? "" : ", ") + k.name + " " + fmt(e);
    }
    c.passed = c.metric < c.threshold;
    c.detail = "worst " + worst_name + " relative gap " + fmt(c.metric) + " (< 0.01), C_rho " +
               fmt(est.converged_value) + " (last-rung change " + fmt(est.last_relative_change()) + ")";
    if (!over.empty())
        c.detail += "; over threshold: " + over;
    return c;
}

// 3 ----------------------------------------------------------------------
CriterionResult tcm_divergence(const ValidationOptions &)
{
    CriterionResult c{3, "upw_cc_cr_exceeds_accurate_limit", false, 0.0, 3.0, {}};
    const Defaults d;
    const ArrayGeometry g = d.g.with_size(1001, 1001);
    const LinkStats upw{closed_form_norm_sq(g, d.cu, ChannelModel::UPW), 1.0, 0.0, {}, NormSource::ClosedForm};
    c.metric = cc_rates(upw, d.sp).cr - asymptotic_limit(Asymptote::CcCr, d.sp, g.aor());
    c.passed = c.metric >= c.threshold;
    c.detail = "UPW C-C CR exceeds log2(1 + p zeta / 3) by " + fmt(c.metric) + " bits (>= 3)";
    return c;
}

// 4 ----------------------------------------------------------------------
CriterionResult high_snr_slopes(const ValidationOptions &)
{
    CriterionResult c{4, "high_snr_slopes", false, 0.0, 1.0, {}};
    const Defaults d;
    const ChannelVector hc = build_channel(d.g, d.cu, ChannelModel::Accurate);
    const ChannelVector hs = build_channel(d.g, d.target, ChannelModel::Accurate);
    const LinkStats st = link_stats(hc, hs);
    const std::vector<double> grid = db_power_grid(100.0, 130.0, 31);
    const double L = d.sp.l_frame;
    const double k = d.sp.kappa;

    using Setter = void (*)(SystemParams &, double);
    const Setter dl = [](SystemParams &sp, double p) { sp.p = p; };
    const Setter ulc = [](SystemParams &sp, double p) { sp.p_c = p; };
    const Setter uls = [](SystemParams &sp, double p) { sp.p_s = p; };
    struct Check
    {
        const char *name;
        Setter set;
        std::function<double(const SystemParams &)> rate;
        double expected;
        double tol;
    };
    const std::vector<Check> checks = {
        {"dl CR C-C", dl, [&](const SystemParams &sp) { return cc_rates(st, sp).cr; }, 1.0, 0.02},
        {"dl CR S-C", dl, [&](const SystemParams &sp) { return sc_rates(st, sp).cr; }, 1.0, 0.02},
        {"dl SR S-C", dl, [&](const SystemParams &sp) { return sc_rates(st, sp).sr; }, 1.0 / L, 0.005},
        {"dl SR C-C", dl, [&](const SystemParams &sp) { return cc_rates(st, sp).sr; }, 1.0 / L, 0.005},
        {"dl CR FDSAC", dl, [&](const SystemParams &sp) { return fdsac_rates(st, sp).cr; }, 1.0 - k, 0.01},
        {"dl SR FDSAC", dl, [&](const SystemParams &sp) { return fdsac_rates(st, sp).sr; }, k / L, 0.005},
        {"ul CR C-C", ulc, [&](const SystemParams &sp) { return ul_cc_rates(st, sp).cr; }, 1.0, 0.02},
        {"ul CR S-C", ulc, [&](const SystemParams &sp) { return ul_sc_rates(st, sp).cr; }, 1.0, 0.02},
        {"ul CR time-sharing", ulc, [&](const SystemParams &sp) { return time_sharing(st, sp, 0.5).cr; }, 1.0, 0.02},
        {"ul SR S-C", uls, [&](const SystemParams &sp) { return ul_sc_rates(st, sp).sr; }, 1.0 / L, 0.005},
        {"ul SR C-C", uls, [&](const SystemParams &sp) { return ul_cc_rates(st, sp).sr; }, 1.0 / L, 0.005},
        {"ul SR time-sharing", uls, [&](const SystemParams &sp) { return time_sharing(st, sp, 0.5).sr; }, 1.0 / L,
         0.005},
        {"ul CR FDSAC", ulc, [&](const SystemParams &sp) { return ul_fdsac_rates(st, sp).cr; }, 1.0 - k, 0.01},
        {"ul SR FDSAC", uls, [&](const SystemParams &sp) { return ul_fdsac_rates(st, sp).sr; }, k / L, 0.005},
    };
    std::string worst;
    for (const Check &ch : checks)
    {
        const double slope = slope_estimate(
            [&](double p)
            {
                SystemParams sp = d.sp;
                ch.set(sp, p);
                return ch.rate(sp);
            },
            grid);
        const double score = std::abs(slope - ch.expected) / ch.tol;
        if (score >= c.metric)
        {
            c.metric = score;
            worst = std::string(ch.name) + " slope " + fmt(slope) + " vs " + fmt(ch.expected);
        }
    }
    c.passed = c.metric <= c.threshold;
    c.detail = std::to_string(checks.size()) + " slopes; worst " + worst + " (deviation / tolerance " + fmt(c.metric) +
               ")";
    return c;
}

// 5 ----------------------------------------------------------------------
CriterionResult pareto_kkt(const ValidationOptions &)
{
    CriterionResult c{5, "pareto_kkt_self_consistency", false, 0.0, 1e-6, {}};
    const Defaults d;
    const ChannelVector hc = build_channel(d.g, d.cu, ChannelModel::Accurate);
    const ChannelVector hs = build_channel(d.g, d.target, ChannelModel::Accurate);
    const RegimeThresholds th = regime_thresholds(link_stats(hc, hs, NormPolicy::ElementSum), d.sp);
    double worst_kkt = 0.0;
    double worst_active = 0.0;
    double min_mu = std::numeric_limits<double>::infinity();
    int interior = 0;
    for (int k = 1; k <= 21; ++k)
    {
        const double sigma = th.cc_upper + (th.sc_lower - th.cc_upper) * k / 22.0;
        const ParetoSolution s = solve_rate_profile(hc, hs, d.sp, sigma);
        if (s.regime != ParetoRegime::Interior)
            continue;
        ++interior;
        worst_kkt = std::max(worst_kkt, s.kkt_residual);
        min_mu = std::min({min_mu, s.mu1, s.mu2});
        worst_active = std::max({worst_active, rel(s.achieved.sr, sigma * s.r_star),
                                 rel(s.achieved.cr, (1.0 - sigma) * s.r_star)});
    }
    c.metric = std::max(worst_kkt, worst_active);
    c.passed = interior == 21 && worst_kkt < 1e-6 && worst_active < 1e-6 && min_mu >= 0.0;
    c.detail = std::to_string(interior) + "/21 interior, worst KKT residual " + fmt(worst_kkt) +
               ", worst active-constraint gap " + fmt(worst_active) + ", min multiplier " + fmt(min_mu);
    return c;
}

// 6 ----------------------------------------------------------------------
CriterionResult boundary_equivalence(const ValidationOptions &o)
{
    CriterionResult c{6, "sigma_tau_boundary_equivalence", false, 0.0, 1e-3, {}};
    const Defaults d;
    const ChannelVector hc = build_channel(d.g, d.cu, ChannelModel::Accurate);
    const ChannelVector hs = build_channel(d.g, d.target, ChannelModel::Accurate);
    const RegionBoundary sigma = sigma_region(sigma_sweep(hc, hs, d.sp, 101, SigmaRange::Interior));
    const RegionBoundary tau = downlink_isac_region(hc, hs, d.sp, 201, NormPolicy::ElementSum, o.threads);
    c.metric = normalized_hausdorff(sigma, tau);
    c.passed = c.metric < c.threshold;
    c.detail = "normalized Hausdorff distance " + fmt(c.metric) + " (< 1e-3)";
    return c;
}

// 7 ----------------------------------------------------------------------
CriterionResult region_containment(const ValidationOptions &o)
{
    CriterionResult c{7, "region_containment", false, 0.0, 0.0, {}};
    const Defaults d;
    int failures = 0;
    std::string detail;
    auto check = [&](bool ok, const std::string &what)
    {
        if (!ok)
        {
            ++failures;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    };
    {
        const ChannelVector hc = build_channel(d.g, d.cu, ChannelModel::Accurate);
        const ChannelVector hs = build_channel(d.g, d.target, ChannelModel::Accurate);
        const RegionBoundary isac = downlink_isac_region(hc, hs, d.sp, 201, NormPolicy::ElementSum, o.threads);
        const RegionBoundary fd =
            fdsac_region(hc, hs, d.sp, 101, 101, LinkDirection::Downlink, NormPolicy::ElementSum, o.threads);
        check(contains(isac, fd).contained, "downlink FDSAC not inside ISAC");
        const RegionBoundary ul = uplink_isac_region(hc, hs, d.sp);
        const RegionBoundary inner = uplink_inner_bound(hc, hs, d.sp);
        const RegionBoundary ul_fd = fdsac_region(hc, hs, d.sp, 101, 1, LinkDirection::Uplink);
        check(contains(ul, ul_fd).contained, "uplink FDSAC not inside ISAC");
        check(contains(inner, ul_fd).contained, "uplink FDSAC not inside inner bound");
        check(contains(ul, inner).contained, "uplink inner bound not inside ISAC");
    }
    const PlacementSampler sampler = uniform_placement_sampler();
    int chains = 0;
    for (int k = 0; k < 20; ++k)
    {
        SampleRng rng(o.seed, 0x700000u + static_cast<std::uint64_t>(k));
        const PlacementPairDraw draw = sampler(rng);
        const Placement cu(draw.cu.r, draw.cu.theta, draw.cu.phi);
        const Placement target(draw.target.r, draw.target.theta, draw.target.phi);
        const ChannelVector hc = build_channel(d.g, cu, ChannelModel::Accurate);
        const ChannelVector hs = build_channel(d.g, target, ChannelModel::Accurate);
        const RegionBoundary isac = downlink_isac_region(hc, hs, d.sp, 201, NormPolicy::ElementSum, o.threads);
        const RegionBoundary aux = auxiliary_region(hc, hs, d.sp, 101);
        const RegionBoundary fd =
            fdsac_region(hc, hs, d.sp, 101, 101, LinkDirection::Downlink, NormPolicy::ElementSum, o.threads);
        const bool ok = contains(aux, fd).contained && contains(isac, aux).contained && contains(isac, fd).contained;
        chains += ok;
        check(ok, "containment chain fails for random placement " + std::to_string(k));
    }
    c.metric = failures;
    c.passed = failures == 0;
    c.detail = failures == 0 ? "downlink, uplink, inner bound and " + std::to_string(chains) + "/20 chains hold"
                             : detail;
    return c;
}

// 8 ----------------------------------------------------------------------
CriterionResult uplink_oracle(const ValidationOptions &o)
{
    CriterionResult c{8, "uplink_dense_inverse_oracle", false, 0.0, 1e-10, {}};
    const Defaults d;
    double worst_formula = 0.0;
    double worst_tight = 0.0;
    double worst_excess = -std::numeric_limits<double>::infinity();
    for (int n : {3, 5, 7})
    {
        const ArrayGeometry g = d.g.with_size(n, n);
        const ChannelVector hc = build_channel(g, d.cu, ChannelModel::Accurate);
        const ChannelVector hs = build_channel(g, d.target, ChannelModel::Accurate);
        const LinkStats st = link_stats(hc, hs, NormPolicy::ElementSum);
        worst_formula = std::max(worst_formula, std::abs(ul_cc_rates(st, d.sp).sr -
                                                         ul_quadratic_form_oracle(hc, hs, d.sp, UplinkDesign::CommCentric)));
        worst_formula = std::max(worst_formula, std::abs(ul_sc_rates(st, d.sp).cr -
                                                         ul_quadratic_form_oracle(hc, hs, d.sp, UplinkDesign::SensingCentric)));

        ChannelVector parallel = hc;
        for (auto &x : parallel.gains)
            x *= 0.7;
        const LinkStats one = link_stats(hc, parallel, NormPolicy::ElementSum);
        worst_tight = std::max(worst_tight, std::abs(ul_cc_sr_lower(one, d.sp) - ul_cc_rates(one, d.sp).sr));
        worst_tight = std::max(worst_tight, std::abs(ul_sc_cr_lower(one, d.sp) - ul_sc_rates(one, d.sp).cr));
    }
    const PlacementSampler sampler = uniform_placement_sampler();
    for (int k = 0; k < 20; ++k)
    {
        SampleRng rng(o.seed, 0x800000u + static_cast<std::uint64_t>(k));
        const PlacementPairDraw draw = sampler(rng);
        const ChannelVector hc = build_channel(d.g, {draw.cu.r, draw.cu.theta, draw.cu.phi}, ChannelModel::Accurate);
        const ChannelVector hs =
            build_channel(d.g, {draw.target.r, draw.target.theta, draw.target.phi}, ChannelModel::Accurate);
        const LinkStats st = link_stats(hc, hs);
        worst_excess = std::max({worst_excess, ul_cc_sr_lower(st, d.sp) - ul_cc_rates(st, d.sp).sr,
                                 ul_sc_cr_lower(st, d.sp) - ul_sc_rates(st, d.sp).cr});
    }
    c.metric = std::max(worst_formula, worst_tight);
    c.passed = worst_formula < 1e-10 && worst_tight < 1e-10 && worst_excess <= 0.0;
    c.detail = "worst formula-oracle gap " + fmt(worst_formula) + " bits, worst rho=1 bound gap " + fmt(worst_tight) +
               " bits, largest bound excess " + fmt(worst_excess) + " bits (<= 0)";
    return c;
}

// 9 ----------------------------------------------------------------------
CriterionResult energy_conservation(const ValidationOptions &o)
{
    CriterionResult c{9, "energy_conservation", false, 0.0, 0.0, {}};
    const Defaults d;
    const double zeta = d.g.aor();
    int failures = 0;
    double max_ratio = 0.0; // largest ||h||^2 / limit seen
    for (int n : {15, 31, 63, 127, 255, 501, 1001})
    {
        const ArrayGeometry g = d.g.with_size(n, n);
        for (const Placement &p : {d.cu, d.target})
        {
            const double a = closed_form_norm_sq(g, p, ChannelModel::Accurate) / (zeta / 3.0);
            const double b = closed_form_norm_sq(g, p, ChannelModel::NoPolar) / (zeta / 2.0);
            max_ratio = std::max({max_ratio, a, b});
            failures += !(a < 1.0) + !(b < 1.0);
        }
        const LinkStats acc = link_stats(build_channel(g, d.cu, ChannelModel::Accurate, o.threads),
                                         build_channel(g, d.target, ChannelModel::Accurate, o.threads));
        const LinkStats np = link_stats(build_channel(g, d.cu, ChannelModel::NoPolar, o.threads),
                                        build_channel(g, d.target, ChannelModel::NoPolar, o.threads));
        const RatePair acc_cc = cc_rates(acc, d.sp);
        const RatePair acc_sc = sc_rates(acc, d.sp);
        const RatePair np_cc = cc_rates(np, d.sp);
        const RatePair np_sc = sc_rates(np, d.sp);
        failures += !(np_cc.cr > acc_cc.cr) + !(np_cc.sr > acc_cc.sr) + !(np_sc.cr > acc_sc.cr) +
                    !(np_sc.sr > acc_sc.sr);
    }
    c.metric = failures;
    c.passed = failures == 0;
    c.detail = std::to_string(failures) + " violations; largest norm / limit " + fmt(max_ratio) + " (< 1)";
    return c;
}

// 10 ---------------------------------------------------------------------
CriterionResult distance_gap(const ValidationOptions &)
{
    CriterionResult c{10, "distance_gap_narrowing", false, 0.0, 0.0, {}};
    const Defaults d;
    const ArrayGeometry g = d.g.with_size(301, 301);
    auto gap = [&](const ArrayGeometry &g, double r)
    {
        const Placement cu(2.0 * r, pi / 4, pi / 6);
        const double acc = std::log2(1.0 + d.sp.p * closed_form_norm_sq(g, cu, ChannelModel::Accurate));
        const double upw = std::log2(1.0 + d.sp.p * closed_form_norm_sq(g, cu, ChannelModel::UPW));
        return (upw - acc) / acc;
    };
    const double near = gap(g, 5.0);
    const double far = gap(g, 100.0);
    c.metric = far - near;
    c.passed = far < near;
    c.detail = "relative UPW-accurate CR gap " + fmt(near) + " at r = 5 m, " + fmt(far) + " at r = 100 m";
    if (!c.passed)
    {
        // Reference only: the same comparison at 1001 x 1001.
        const ArrayGeometry g1001 = d.g.with_size(1001, 1001);
        c.detail += " (1001 x 1001: " + fmt(gap(g1001, 5.0)) + " and " + fmt(gap(g1001, 100.0)) + ")";
    }
    return c;
}

using Criterion = CriterionResult (*)(const ValidationOptions &);

constexpr Criterion battery[] = {closed_form_norms, asymptotic_limits, tcm_divergence, high_snr_slopes,
                                 pareto_kkt,        boundary_equivalence, region_containment, uplink_oracle,
                                 energy_conservation, distance_gap};

constexpr const char *battery_names[] = {
    "closed_form_vs_bruteforce_norms", "asymptotic_limits_at_2001", "upw_cc_cr_exceeds_accurate_limit",
    "high_snr_slopes", "pareto_kkt_self_consistency", "sigma_tau_boundary_equivalence", "region_containment",
    "uplink_dense_inverse_oracle", "energy_conservation", "distance_gap_narrowing"};

} // namespace

bool ValidationReport::all_passed() const
{
    return !criteria.empty() && std::all_of(criteria.begin(), criteria.end(), [](const auto &c) { return c.passed; });
}

Table ValidationReport::table() const
{
    Table t{"validate", {"id", "criterion", "passed", "metric", "threshold"}, {}};
    for (const CriterionResult &c : criteria)
        t.add_row({std::to_string(c.id), c.name, c.passed ? "true" : "false", format_double(c.metric),
                   format_double(c.threshold)});
    return t;
}

ValidationReport validate_suite(const ValidationOptions &opts)
{
    ValidationReport report;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < std::size(battery); ++i)
    {
        try
        {
            report.criteria.push_back(battery[i](opts));
        }
        catch (const std::exception &e)
        {
            CriterionResult failed{static_cast<int>(i + 1), battery_names[i], false,
                                   std::numeric_limits<double>::quiet_NaN(), 0.0, e.what()};
            report.criteria.push_back(failed);
        }
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

ValidationReport validate_with_determinism(const ValidationOptions &opts)
{
    ValidationReport first = validate_suite(opts);
    const ValidationReport second = validate_suite(opts);
    const std::string a = to_csv(first.table());
    const std::string b = to_csv(second.table());
    CriterionResult det{11, "determinism", a == b, a == b ? 0.0 : 1.0, 0.0, {}};
    det.detail = a == b ? "two runs with seed " + std::to_string(opts.seed) + " gave byte-identical CSV ("
                              + std::to_string(a.size()) + " bytes)"
                        : "CSV output differs between two runs";
    first.criteria.push_back(det);
    first.seconds += second.seconds;
    return first;
}

} // namespace nfisac

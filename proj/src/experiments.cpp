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

#include "nfisac/experiments.hpp"

#include "nfisac/errors.hpp"
#include "nfisac/oracles.hpp"
#include "nfisac/parallel.hpp"
#include "nfisac/pareto.hpp"
#include "nfisac/regions.hpp"
#include "nfisac/ul_rates.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <string_view>

namespace nfisac
{

namespace
{

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string column(std::string_view stem, ChannelModel m) { return std::string(stem) + "_" + std::string(to_string(m)); }

/// Odd element counts nearest to the sweep values, duplicates removed.
std::vector<int> odd_counts(const std::vector<double> &values)
{
    std::vector<int> out;
    for (double v : values)
    {
        int n = static_cast<int>(std::lround(v));
        if (n % 2 == 0)
            n += n > static_cast<int>(v) ? -1 : 1;
        n = std::max(n, 1);
        if (out.empty() || out.back() != n)
            out.push_back(n);
    }
    return out;
}

struct Pair
{
    ChannelVector hc;
    ChannelVector hs;
};

Pair build_pair(const ArrayGeometry &g, const Placement &cu, const Placement &target, ChannelModel m,
                unsigned threads)
{
    return {build_channel(g, cu, m, threads), build_channel(g, target, m, threads)};
}

void add_geometry_constants(RunResult &r, const ArrayGeometry &g, const Placement &cu, const Placement &target)
{
    r.derived.emplace_back("zeta", g.aor());
    r.derived.emplace_back("epsilon_c", g.spacing() / cu.r());
    r.derived.emplace_back("epsilon_s", g.spacing() / target.r());
}

// ---------------------------------------------------------------- downlink

void run_dl_snr(const ExperimentConfig &cfg, RunResult &out)
{
    const ArrayGeometry g = cfg.geometry.build();
    const Placement cu = cfg.cu.build();
    const Placement target = cfg.target.build();
    const ChannelModel m = cfg.effective_models().front();
    const Pair h = build_pair(g, cu, target, m, cfg.threads);
    const LinkStats st = link_stats(h.hc, h.hs);
    add_geometry_constants(out, g, cu, target);
    out.derived.emplace_back("rho", st.rho);

    Table t{"dl_snr",
            {"p_dB", "CR_cc", "CR_sc", "CR_fdsac", "CR_cc_hiSNR", "CR_sc_hiSNR", "SR_sc", "SR_cc", "SR_fdsac",
             "SR_sc_hiSNR", "SR_cc_hiSNR"},
            {}};
    SystemParams sp = cfg.powers.build();
    for (double p_db : cfg.effective_sweep().values())
    {
        sp.p = db_to_linear(p_db);
        const RatePair cc = cc_rates(st, sp);
        const RatePair sc = sc_rates(st, sp);
        const RatePair fd = fdsac_rates(st, sp);
        t.add_row({p_db, cc.cr, sc.cr, fd.cr, high_snr_approx(RateCurve::CcCr, st, sp).value,
                   high_snr_approx(RateCurve::ScCr, st, sp).value, sc.sr, cc.sr, fd.sr,
                   high_snr_approx(RateCurve::ScSr, st, sp).value, high_snr_approx(RateCurve::CcSr, st, sp).value});
    }
    out.tables.push_back(std::move(t));
}

void run_dl_n(const ExperimentConfig &cfg, RunResult &out)
{
    const std::vector<int> counts = odd_counts(cfg.effective_sweep().values());
    const std::vector<ChannelModel> models = cfg.effective_models();
    const Placement cu = cfg.cu.build();
    const Placement target = cfg.target.build();
    const SystemParams sp = cfg.powers.build();

    std::vector<std::vector<double>> rows(counts.size());
    parallel_for(counts.size(), cfg.threads,
                 [&](std::size_t i)
                 {
                     const ArrayGeometry g = cfg.geometry.build(counts[i], counts[i]);
                     std::vector<double> row{static_cast<double>(counts[i])};
                     for (ChannelModel m : models)
                     {
                         const Pair h = build_pair(g, cu, target, m, 1);
                         const LinkStats st = link_stats(h.hc, h.hs);
                         const RatePair cc = cc_rates(st, sp);
                         const RatePair sc = sc_rates(st, sp);
                         row.insert(row.end(), {cc.cr, sc.cr, sc.sr, cc.sr, st.rho});
                     }
                     rows[i] = std::move(row);
                 });

    // Correlation constants for the CCF-dependent limits: the default pair at the largest rung.
    const double zeta = cfg.geometry.build().aor();
    std::vector<ArrayGeometry> ladder;
    for (int n : counts)
        ladder.push_back(cfg.geometry.build(n, n));
    const PlacementSampler fixed = constant_placement_sampler(cu, target);
    const CcfEstimate c_acc = ccf_limit_estimate(ladder, fixed, 100, cfg.seed, ChannelModel::Accurate, {}, cfg.threads);
    const CcfEstimate c_np = ccf_limit_estimate(ladder, fixed, 100, cfg.seed, ChannelModel::NoPolar, {}, cfg.threads);
    out.derived.emplace_back("zeta", zeta);
    out.derived.emplace_back("C_rho_accurate", c_acc.converged_value);
    out.derived.emplace_back("C_rho_nopolar", c_np.converged_value);
    out.derived.emplace_back("C_rho_accurate_last_relative_change", c_acc.last_relative_change());
    out.derived.emplace_back("C_rho_nopolar_last_relative_change", c_np.last_relative_change());

    const double limits[] = {
        asymptotic_limit(Asymptote::CcCr, sp, zeta),
        asymptotic_limit(Asymptote::CcCrNoPolar, sp, zeta),
        asymptotic_limit(Asymptote::ScCr, sp, zeta, c_acc.converged_value),
        asymptotic_limit(Asymptote::ScCrNoPolar, sp, zeta, c_np.converged_value),
        asymptotic_limit(Asymptote::ScSr, sp, zeta),
        asymptotic_limit(Asymptote::ScSrNoPolar, sp, zeta),
        asymptotic_limit(Asymptote::CcSr, sp, zeta, c_acc.converged_value),
        asymptotic_limit(Asymptote::CcSrNoPolar, sp, zeta, c_np.converged_value),
    };

    Table t{"dl_n", {"N_per_axis"}, {}};
    for (ChannelModel m : models)
        for (const char *stem : {"CR_cc", "CR_sc", "SR_sc", "SR_cc", "rho"})
            t.columns.push_back(column(stem, m));
    for (const char *name : {"CR_cc_limit", "CR_cc_limit_nopolar", "CR_sc_limit", "CR_sc_limit_nopolar",
                             "SR_sc_limit", "SR_sc_limit_nopolar", "SR_cc_limit", "SR_cc_limit_nopolar"})
        t.columns.emplace_back(name);
    for (auto &row : rows)
    {
        row.insert(row.end(), std::begin(limits), std::end(limits));
        t.add_row(row);
    }
    out.tables.push_back(std::move(t));
}

void run_dl_r(const ExperimentConfig &cfg, RunResult &out)
{
    const ArrayGeometry g = cfg.geometry.build();
    const std::vector<double> distances = cfg.effective_sweep().values();
    const std::vector<ChannelModel> models = cfg.effective_models();
    const SystemParams sp = cfg.powers.build();
    std::vector<std::vector<double>> rows(distances.size());
    parallel_for(distances.size(), cfg.threads,
                 [&](std::size_t i)
                 {
                     const double r = distances[i];
                     const Placement cu(2.0 * r, cfg.cu.theta, cfg.cu.phi);
                     const Placement target(r, cfg.target.theta, cfg.target.phi);
                     std::vector<double> cr;
                     std::vector<double> sr;
                     for (ChannelModel m : models)
                     {
                         const Pair h = build_pair(g, cu, target, m, 1);
                         const LinkStats st = link_stats(h.hc, h.hs);
                         cr.push_back(cc_rates(st, sp).cr);
                         sr.push_back(sc_rates(st, sp).sr);
                     }
                     std::vector<double> row{r};
                     row.insert(row.end(), cr.begin(), cr.end());
                     row.insert(row.end(), sr.begin(), sr.end());
                     rows[i] = std::move(row);
                 });
    Table t{"dl_r", {"r_m"}, {}};
    for (ChannelModel m : models)
        t.columns.push_back(column("CR_cc", m));
    for (ChannelModel m : models)
        t.columns.push_back(column("SR_sc", m));
    for (const auto &row : rows)
        t.add_row(row);
    out.derived.emplace_back("zeta", g.aor());
    out.derived.emplace_back("N_per_axis", g.n_y());
    out.tables.push_back(std::move(t));
}

Table frontier_table(const std::string &name, const RegionBoundary &b, const std::vector<std::string> &params)
{
    Table t{name, params, {}};
    t.columns.emplace_back("SR");
    t.columns.emplace_back("CR");
    for (std::size_t i = 0; i < b.points.size(); ++i)
    {
        std::vector<double> row;
        for (std::size_t k = 0; k < params.size(); ++k)
            row.push_back(b.parameters[i][k]);
        row.push_back(b.points[i].sr);
        row.push_back(b.points[i].cr);
        t.add_row(row);
    }
    return t;
}

std::string_view regime_name(ParetoRegime r)
{
    switch (r)
    {
    case ParetoRegime::CcEndpoint: return "cc_endpoint";
    case ParetoRegime::Interior: return "interior";
    case ParetoRegime::ScEndpoint: return "sc_endpoint";
    }
    return "unknown";
}

void run_dl_region(const ExperimentConfig &cfg, RunResult &out)
{
    const ArrayGeometry g = cfg.geometry.build();
    const Placement cu = cfg.cu.build();
    const Placement target = cfg.target.build();
    const ChannelModel m = cfg.effective_models().front();
    const SystemParams sp = cfg.powers.build();
    const Pair h = build_pair(g, cu, target, m, cfg.threads);

    const RegionBoundary isac = downlink_isac_region(h.hc, h.hs, sp, cfg.tau_points, NormPolicy::ElementSum, cfg.threads);
    const RegionBoundary fdsac = fdsac_region(h.hc, h.hs, sp, cfg.fdsac_points, cfg.fdsac_points, LinkDirection::Downlink,
                                              NormPolicy::ElementSum, cfg.threads);
    const std::vector<ParetoSolution> sweep = sigma_sweep(h.hc, h.hs, sp, cfg.sigma_points, SigmaRange::Interior);

    out.tables.push_back(frontier_table("dl_region_isac", isac, {"tau"}));
    out.tables.push_back(frontier_table("dl_region_fdsac", fdsac, {"kappa", "iota"}));

    Table sigma{"dl_region_sigma", {"sigma", "regime", "R_star", "SR", "CR", "kkt_residual"}, {}};
    for (const ParetoSolution &s : sweep)
        sigma.add_row({format_double(s.sigma), std::string(regime_name(s.regime)), format_double(s.r_star),
                       format_double(s.achieved.sr), format_double(s.achieved.cr), format_double(s.kkt_residual)});
    out.tables.push_back(std::move(sigma));

    const LinkStats st = link_stats(h.hc, h.hs, NormPolicy::ElementSum);
    const RatePair cc = cc_rates(st, sp);
    const RatePair sc = sc_rates(st, sp);
    Table corners{"dl_region_corners", {"design", "SR", "CR"}, {}};
    corners.add_row({"C-C", format_double(cc.sr), format_double(cc.cr)});
    corners.add_row({"S-C", format_double(sc.sr), format_double(sc.cr)});
    out.tables.push_back(std::move(corners));

    add_geometry_constants(out, g, cu, target);
    const RegimeThresholds th = regime_thresholds(st, sp);
    out.derived.emplace_back("rho", st.rho);
    out.derived.emplace_back("sigma_cc_upper", th.cc_upper);
    out.derived.emplace_back("sigma_sc_lower", th.sc_lower);
    out.derived.emplace_back("hausdorff_sigma_tau", normalized_hausdorff(sigma_region(sweep), isac));
    out.derived.emplace_back("fdsac_contained", contains(isac, fdsac).contained ? 1.0 : 0.0);
}

// ------------------------------------------------------------------ uplink

void run_ul_snr(const ExperimentConfig &cfg, RunResult &out)
{
    const ArrayGeometry g = cfg.geometry.build();
    const Placement cu = cfg.cu.build();
    const Placement target = cfg.target.build();
    const ChannelModel m = cfg.effective_models().front();
    const Pair h = build_pair(g, cu, target, m, cfg.threads);
    const LinkStats st = link_stats(h.hc, h.hs);
    add_geometry_constants(out, g, cu, target);
    out.derived.emplace_back("rho", st.rho);
    const std::vector<double> sweep = cfg.effective_sweep().values();

    Table cr{"ul_snr_cr",
             {"p_c_dB", "CR_cc", "CR_sc", "CR_sc_lower", "CR_fdsac", "CR_cc_hiSNR", "CR_sc_hiSNR",
              "CR_sc_lower_hiSNR"},
             {}};
    SystemParams sp = cfg.powers.build();
    for (double db : sweep)
    {
        sp.p_c = db_to_linear(db);
        cr.add_row({db, ul_cc_rates(st, sp).cr, ul_sc_rates(st, sp).cr, ul_sc_cr_lower(st, sp),
                    ul_fdsac_rates(st, sp).cr, ul_high_snr_approx(UlRateCurve::CcCr, st, sp).value,
                    ul_high_snr_approx(UlRateCurve::ScCr, st, sp).value,
                    ul_high_snr_approx(UlRateCurve::ScCrLower, st, sp).value});
    }
    Table sr{"ul_snr_sr",
             {"p_s_dB", "SR_sc", "SR_cc", "SR_cc_lower", "SR_fdsac", "SR_sc_hiSNR", "SR_cc_hiSNR",
              "SR_cc_lower_hiSNR"},
             {}};
    sp = cfg.powers.build();
    for (double db : sweep)
    {
        sp.p_s = db_to_linear(db);
        sr.add_row({db, ul_sc_rates(st, sp).sr, ul_cc_rates(st, sp).sr, ul_cc_sr_lower(st, sp),
                    ul_fdsac_rates(st, sp).sr, ul_high_snr_approx(UlRateCurve::ScSr, st, sp).value,
                    ul_high_snr_approx(UlRateCurve::CcSr, st, sp).value,
                    ul_high_snr_approx(UlRateCurve::CcSrLower, st, sp).value});
    }
    out.tables.push_back(std::move(cr));
    out.tables.push_back(std::move(sr));
}

void run_ul_n(const ExperimentConfig &cfg, RunResult &out)
{
    const std::vector<int> counts = odd_counts(cfg.effective_sweep().values());
    const std::vector<ChannelModel> models = cfg.effective_models();
    const Placement cu = cfg.cu.build();
    const Placement target = cfg.target.build();
    const SystemParams sp = cfg.powers.build();
    const double zeta = cfg.geometry.build().aor();

    std::vector<std::vector<double>> cr_rows(counts.size());
    std::vector<std::vector<double>> sr_rows(counts.size());
    parallel_for(counts.size(), cfg.threads,
                 [&](std::size_t i)
                 {
                     const ArrayGeometry g = cfg.geometry.build(counts[i], counts[i]);
                     std::vector<double> cr{static_cast<double>(counts[i])};
                     std::vector<double> sr{static_cast<double>(counts[i])};
                     for (ChannelModel m : models)
                     {
                         const Pair h = build_pair(g, cu, target, m, 1);
                         const LinkStats st = link_stats(h.hc, h.hs);
                         const RatePair cc = ul_cc_rates(st, sp);
                         const RatePair sc = ul_sc_rates(st, sp);
                         cr.insert(cr.end(), {cc.cr, sc.cr, ul_sc_cr_lower(st, sp)});
                         sr.insert(sr.end(), {sc.sr, cc.sr, ul_cc_sr_lower(st, sp)});
                     }
                     cr.push_back(asymptotic_limit(Asymptote::UlScCrLower, sp, zeta));
                     sr.push_back(asymptotic_limit(Asymptote::UlCcSrLower, sp, zeta));
                     cr_rows[i] = std::move(cr);
                     sr_rows[i] = std::move(sr);
                 });
    Table cr{"ul_n_cr", {"N_per_axis"}, {}};
    Table sr{"ul_n_sr", {"N_per_axis"}, {}};
    for (ChannelModel m : models)
    {
        for (const char *stem : {"CR_cc", "CR_sc", "CR_sc_lower"})
            cr.columns.push_back(column(stem, m));
        for (const char *stem : {"SR_sc", "SR_cc", "SR_cc_lower"})
            sr.columns.push_back(column(stem, m));
    }
    cr.columns.emplace_back("CR_sc_lower_limit");
    sr.columns.emplace_back("SR_cc_lower_limit");
    for (std::size_t i = 0; i < counts.size(); ++i)
    {
        cr.add_row(cr_rows[i]);
        sr.add_row(sr_rows[i]);
    }
    out.derived.emplace_back("zeta", zeta);
    out.tables.push_back(std::move(cr));
    out.tables.push_back(std::move(sr));
}

void run_ul_region(const ExperimentConfig &cfg, RunResult &out)
{
    const ArrayGeometry g = cfg.geometry.build();
    const Placement cu = cfg.cu.build();
    const Placement target = cfg.target.build();
    const ChannelModel m = cfg.effective_models().front();
    const SystemParams sp = cfg.powers.build();
    const Pair h = build_pair(g, cu, target, m, cfg.threads);

    const RegionBoundary isac = uplink_isac_region(h.hc, h.hs, sp, cfg.tau_points);
    const RegionBoundary inner = uplink_inner_bound(h.hc, h.hs, sp, cfg.tau_points);
    const RegionBoundary fdsac =
        fdsac_region(h.hc, h.hs, sp, cfg.fdsac_points, 1, LinkDirection::Uplink, NormPolicy::ElementSum, cfg.threads);
    out.tables.push_back(frontier_table("ul_region_isac", isac, {"varrho"}));
    out.tables.push_back(frontier_table("ul_region_inner", inner, {"varrho"}));
    out.tables.push_back(frontier_table("ul_region_fdsac", fdsac, {"kappa"}));

    const LinkStats st = link_stats(h.hc, h.hs, NormPolicy::ElementSum);
    const RatePair cc = ul_cc_rates(st, sp);
    const RatePair sc = ul_sc_rates(st, sp);
    Table corners{"ul_region_corners", {"design", "SR", "CR"}, {}};
    corners.add_row({"C-C", format_double(cc.sr), format_double(cc.cr)});
    corners.add_row({"S-C", format_double(sc.sr), format_double(sc.cr)});
    corners.add_row({"C-C lower", format_double(ul_cc_sr_lower(st, sp)), format_double(cc.cr)});
    corners.add_row({"S-C lower", format_double(sc.sr), format_double(ul_sc_cr_lower(st, sp))});
    out.tables.push_back(std::move(corners));

    add_geometry_constants(out, g, cu, target);
    out.derived.emplace_back("rho", st.rho);
    out.derived.emplace_back("fdsac_contained", contains(isac, fdsac).contained ? 1.0 : 0.0);
    out.derived.emplace_back("fdsac_in_inner_bound", contains(inner, fdsac).contained ? 1.0 : 0.0);
}

// --------------------------------------------------------------------- ccf

void run_ccf(const ExperimentConfig &cfg, RunResult &out)
{
    std::vector<ArrayGeometry> ladder;
    for (int n : cfg.ccf_ladder)
        ladder.push_back(cfg.geometry.build(n, n));
    const PlacementSampler sampler = uniform_placement_sampler(cfg.ccf_box);
    const std::vector<ChannelModel> models = cfg.effective_models();
    std::vector<CcfEstimate> estimates;
    for (ChannelModel m : models)
    {
        const auto t0 = Clock::now();
        estimates.push_back(ccf_limit_estimate(ladder, sampler, cfg.ccf_samples, cfg.seed, m,
                                               cfg.ccf_last_rung_samples, cfg.threads));
        out.timings.emplace_back(column("ccf", m), seconds_since(t0));
        out.derived.emplace_back(column("C_rho", m), estimates.back().converged_value);
        out.derived.emplace_back(column("last_relative_change", m), estimates.back().last_relative_change());
        out.derived.emplace_back(column("rejected_draws", m), static_cast<double>(estimates.back().rejected));
    }
    Table t{"ccf", {"N_per_axis", "samples"}, {}};
    for (ChannelModel m : models)
        t.columns.push_back(column("mean_rho", m));
    for (std::size_t i = 0; i < ladder.size(); ++i)
    {
        std::vector<double> row{static_cast<double>(ladder[i].n_y()),
                                static_cast<double>(estimates.front().samples_per_rung[i])};
        for (const CcfEstimate &e : estimates)
            row.push_back(e.mean_rho[i]);
        t.add_row(row);
    }
    out.derived.emplace_back("zeta", cfg.geometry.build().aor());
    out.tables.push_back(std::move(t));
}

} // namespace

ExperimentConfig default_config(Experiment e)
{
    ExperimentConfig cfg;
    cfg.experiment = e;
    if (e == Experiment::DlR)
        cfg.geometry.n_y = cfg.geometry.n_z = 1001;
    return cfg;
}

RunResult run_experiment(const ExperimentConfig &cfg)
{
    cfg.validate();
    RunResult out;
    const auto t0 = Clock::now();
    switch (cfg.experiment)
    {
    case Experiment::DlSnr: run_dl_snr(cfg, out); break;
    case Experiment::DlN: run_dl_n(cfg, out); break;
    case Experiment::DlR: run_dl_r(cfg, out); break;
    case Experiment::DlRegion: run_dl_region(cfg, out); break;
    case Experiment::UlSnr: run_ul_snr(cfg, out); break;
    case Experiment::UlN: run_ul_n(cfg, out); break;
    case Experiment::UlRegion: run_ul_region(cfg, out); break;
    case Experiment::Ccf: run_ccf(cfg, out); break;
    }
    out.timings.emplace_back("total", seconds_since(t0));
    return out;
}

std::string summary_json(const ExperimentConfig &cfg, const RunResult &result,
                         const std::vector<std::filesystem::path> &files)
{
    using nlohmann::ordered_json;
    const ArrayGeometry g = cfg.geometry.build();
    const SystemParams sp = cfg.powers.build();
    auto number = [](double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(format_double(x)); };
    auto placement = [](const PlacementSpec &p) { return ordered_json{{"r", p.r}, {"theta", p.theta}, {"phi", p.phi}}; };

    ordered_json config;
    config["experiment"] = std::string(to_string(cfg.experiment));
    config["geometry"] = {{"n_y", g.n_y()},
                          {"n_z", g.n_z()},
                          {"wavelength", g.wavelength()},
                          {"spacing", g.spacing()},
                          {"element_area", g.element_area()}};
    config["cu"] = placement(cfg.cu);
    config["target"] = placement(cfg.target);
    config["system"] = {{"p_db", cfg.powers.p_db},     {"p_c_db", cfg.powers.p_c_db}, {"p_s_db", cfg.powers.p_s_db},
                        {"p", sp.p},                   {"p_c", sp.p_c},               {"p_s", sp.p_s},
                        {"l_frame", sp.l_frame},       {"alpha_s", sp.alpha_s},       {"kappa", sp.kappa},
                        {"iota", sp.iota}};
    ordered_json models = ordered_json::array();
    for (ChannelModel m : cfg.effective_models())
        models.push_back(std::string(to_string(m)));
    config["models"] = models;
    const SweepSpec s = cfg.effective_sweep();
    config["sweep"] = {{"start", s.start},
                       {"stop", s.stop},
                       {"points", s.points},
                       {"scale", s.scale == SweepScale::Log ? "log" : "linear"}};
    config["region"] = {{"tau_points", cfg.tau_points},
                        {"sigma_points", cfg.sigma_points},
                        {"fdsac_points", cfg.fdsac_points}};
    config["ccf"] = {{"ladder", cfg.ccf_ladder},
                     {"samples", cfg.ccf_samples},
                     {"last_rung_samples", cfg.ccf_last_rung_samples},
                     {"r_min", cfg.ccf_box.r_min},
                     {"r_max", cfg.ccf_box.r_max},
                     {"theta_min", cfg.ccf_box.theta_min},
                     {"theta_max", cfg.ccf_box.theta_max},
                     {"phi_min", cfg.ccf_box.phi_min},
                     {"phi_max", cfg.ccf_box.phi_max}};
    config["seed"] = cfg.seed;
    config["threads"] = cfg.threads == 0 ? default_thread_count() : cfg.threads;
    config["out"] = cfg.out_dir.string();

    ordered_json derived = ordered_json::object();
    for (const auto &[k, v] : result.derived)
        derived[k] = number(v);
    ordered_json timings = ordered_json::object();
    for (const auto &[k, v] : result.timings)
        timings[k] = v;
    ordered_json written = ordered_json::array();
    for (const auto &f : files)
        written.push_back(f.string());

    ordered_json doc;
    doc["config"] = config;
    doc["derived"] = derived;
    doc["timings_s"] = timings;
    doc["files"] = written;
    return doc.dump(2) + "\n";
}

std::vector<std::filesystem::path> write_outputs(const ExperimentConfig &cfg, const RunResult &result)
{
    std::vector<std::filesystem::path> files;
    for (const Table &t : result.tables)
        files.push_back(write_csv(cfg.out_dir, t));
    const std::filesystem::path summary = cfg.out_dir / (std::string(to_string(cfg.experiment)) + "_summary.json");
    const std::string text = summary_json(cfg, result, files);
    std::ofstream os(summary, std::ios::binary);
    os << text;
    if (!os)
        throw std::runtime_error("cannot write " + summary.string());
    files.push_back(summary);
    return files;
}

} // namespace nfisac

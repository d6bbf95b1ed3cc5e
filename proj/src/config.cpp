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

#include "nfisac/config.hpp"

#include "nfisac/errors.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>

namespace nfisac
{

namespace
{

struct ExperimentName
{
    Experiment e;
    std::string_view name;
};

constexpr ExperimentName experiment_names[] = {
    {Experiment::DlSnr, "dl_snr"},       {Experiment::DlN, "dl_n"},       {Experiment::DlR, "dl_r"},
    {Experiment::DlRegion, "dl_region"}, {Experiment::UlSnr, "ul_snr"},   {Experiment::UlN, "ul_n"},
    {Experiment::UlRegion, "ul_region"}, {Experiment::Ccf, "ccf"},
};

} // namespace

std::string_view to_string(Experiment e) noexcept
{
    for (const auto &n : experiment_names)
        if (n.e == e)
            return n.name;
    return "unknown";
}

std::optional<Experiment> parse_experiment(std::string_view name)
{
    for (const auto &n : experiment_names)
        if (n.name == name)
            return n.e;
    return std::nullopt;
}

std::vector<double> SweepSpec::values() const
{
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(std::max(points, 0)));
    for (int k = 0; k < points; ++k)
    {
        const double t = points == 1 ? 0.0 : static_cast<double>(k) / (points - 1);
        if (k == points - 1)
            out.push_back(stop);
        else if (scale == SweepScale::Linear)
            out.push_back(start + (stop - start) * t);
        else
            out.push_back(start * std::pow(stop / start, t));
    }
    return out;
}

ArrayGeometry GeometrySpec::build() const { return build(n_y, n_z); }

ArrayGeometry GeometrySpec::build(int ny, int nz) const
{
    const double d = spacing.value_or(wavelength / 2.0);
    const double a = element_area.value_or(wavelength * wavelength / (4.0 * std::numbers::pi));
    return {ny, nz, d, a, wavelength};
}

SystemParams PowerSpec::build() const
{
    SystemParams sp;
    sp.p = db_to_linear(p_db);
    sp.p_c = db_to_linear(p_c_db);
    sp.p_s = db_to_linear(p_s_db);
    sp.l_frame = l_frame;
    sp.alpha_s = alpha_s;
    sp.kappa = kappa;
    sp.iota = iota;
    return sp;
}

SweepSpec default_sweep(Experiment e)
{
    switch (e)
    {
    case Experiment::DlSnr:
    case Experiment::UlSnr:
        return {60.0, 130.0, 15, SweepScale::Linear};
    case Experiment::DlN:
    case Experiment::UlN:
        return {15.0, 1001.0, 12, SweepScale::Log};
    case Experiment::DlR:
        return {5.0, 100.0, 20, SweepScale::Log};
    case Experiment::DlRegion:
    case Experiment::UlRegion:
    case Experiment::Ccf:
        break;
    }
    return {};
}

SweepSpec ExperimentConfig::effective_sweep() const { return sweep.value_or(default_sweep(experiment)); }

std::vector<ChannelModel> ExperimentConfig::effective_models() const
{
    if (!models.empty())
        return models;
    switch (experiment)
    {
    case Experiment::DlSnr:
    case Experiment::DlRegion:
    case Experiment::UlSnr:
    case Experiment::UlRegion:
        return {ChannelModel::Accurate};
    case Experiment::Ccf:
        return {ChannelModel::Accurate, ChannelModel::NoPolar};
    case Experiment::DlN:
    case Experiment::DlR:
    case Experiment::UlN:
        break;
    }
    return {std::begin(all_channel_models), std::end(all_channel_models)};
}

void ExperimentConfig::validate() const
{
    auto fail = [](const std::string &msg) { throw ConfigError(msg); };
    try
    {
        const ArrayGeometry g = geometry.build();
        const Placement c = cu.build();
        const Placement t = target.build();
        (void)g;
        (void)c;
        (void)t;
    }
    catch (const DomainError &e)
    {
        fail(std::string("invalid geometry or placement: ") + e.what());
    }
    try
    {
        powers.build().validate();
    }
    catch (const ConfigError &e)
    {
        fail(std::string("invalid system parameters: ") + e.what());
    }
    for (double db : {powers.p_db, powers.p_c_db, powers.p_s_db})
        if (!std::isfinite(db))
            fail("powers must be finite dB values");

    const SweepSpec s = effective_sweep();
    const bool has_sweep = experiment != Experiment::DlRegion && experiment != Experiment::UlRegion &&
                           experiment != Experiment::Ccf;
    if (has_sweep)
    {
        if (s.points < 2)
            fail("sweep needs at least two points");
        if (!std::isfinite(s.start) || !std::isfinite(s.stop))
            fail("sweep bounds must be finite");
        if (s.scale == SweepScale::Log && !(s.start > 0.0 && s.stop > 0.0))
            fail("logarithmic sweep bounds must be positive");
        if ((experiment == Experiment::DlN || experiment == Experiment::UlN) && !(s.start >= 1.0))
            fail("element-count sweep must start at 1 or more");
        if (experiment == Experiment::DlR && !(s.start > 0.0 && s.stop > 0.0))
            fail("distance sweep must be positive");
    }
    if (tau_points < 2 || sigma_points < 2 || fdsac_points < 2)
        fail("region grids need at least two points");
    if (ccf_ladder.empty())
        fail("ccf ladder must not be empty");
    for (std::size_t i = 0; i < ccf_ladder.size(); ++i)
    {
        if (ccf_ladder[i] < 1 || ccf_ladder[i] % 2 == 0)
            fail("ccf ladder entries must be odd and positive");
        if (i > 0 && ccf_ladder[i] <= ccf_ladder[i - 1])
            fail("ccf ladder must be strictly increasing");
    }
    if (ccf_samples < 100 || ccf_last_rung_samples < 100)
        fail("ccf estimation needs at least 100 samples per rung");
    if (!(ccf_box.r_min > 0.0 && ccf_box.r_max >= ccf_box.r_min))
        fail("ccf distance range is invalid");
    if (!(ccf_box.theta_min <= ccf_box.theta_max && ccf_box.phi_min <= ccf_box.phi_max))
        fail("ccf angle ranges are invalid");
}

namespace
{

using Path = std::string;

void check_keys(const YAML::Node &node, const Path &where, std::initializer_list<std::string_view> allowed)
{
    if (!node.IsMap())
        throw ConfigError("'" + where + "' must be a mapping");
    for (const auto &kv : node)
    {
        const std::string key = kv.first.as<std::string>();
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ConfigError("unknown key '" + (where.empty() ? key : where + "." + key) + "'");
    }
}

template <typename T>
void read(const YAML::Node &node, const char *key, const Path &where, T &out)
{
    const YAML::Node v = node[key];
    if (!v)
        return;
    try
    {
        out = v.as<T>();
    }
    catch (const YAML::Exception &)
    {
        throw ConfigError("invalid value for '" + (where.empty() ? std::string(key) : where + "." + key) + "'");
    }
}

template <typename T>
void read(const YAML::Node &node, const char *key, const Path &where, std::optional<T> &out)
{
    if (!node[key])
        return;
    T v{};
    read(node, key, where, v);
    out = v;
}

void apply(ExperimentConfig &cfg, const YAML::Node &root)
{
    if (root.IsNull())
        return;
    check_keys(root, "",
               {"experiment", "geometry", "cu", "target", "system", "models", "sweep", "region", "ccf", "seed",
                "threads", "out"});

    if (root["experiment"])
    {
        std::string name;
        read(root, "experiment", "", name);
        const auto e = parse_experiment(name);
        if (!e)
            throw ConfigError("unknown experiment '" + name + "'");
        cfg.experiment = *e;
    }
    if (const YAML::Node g = root["geometry"])
    {
        check_keys(g, "geometry", {"n_y", "n_z", "wavelength", "spacing", "element_area"});
        read(g, "n_y", "geometry", cfg.geometry.n_y);
        read(g, "n_z", "geometry", cfg.geometry.n_z);
        read(g, "wavelength", "geometry", cfg.geometry.wavelength);
        read(g, "spacing", "geometry", cfg.geometry.spacing);
        read(g, "element_area", "geometry", cfg.geometry.element_area);
    }
    for (const char *who : {"cu", "target"})
        if (const YAML::Node p = root[who])
        {
            check_keys(p, who, {"r", "theta", "phi"});
            PlacementSpec &spec = std::string_view(who) == "cu" ? cfg.cu : cfg.target;
            read(p, "r", who, spec.r);
            read(p, "theta", who, spec.theta);
            read(p, "phi", who, spec.phi);
        }
    if (const YAML::Node s = root["system"])
    {
        check_keys(s, "system", {"p_db", "p_c_db", "p_s_db", "l_frame", "alpha_s", "kappa", "iota"});
        read(s, "p_db", "system", cfg.powers.p_db);
        read(s, "p_c_db", "system", cfg.powers.p_c_db);
        read(s, "p_s_db", "system", cfg.powers.p_s_db);
        read(s, "l_frame", "system", cfg.powers.l_frame);
        read(s, "alpha_s", "system", cfg.powers.alpha_s);
        read(s, "kappa", "system", cfg.powers.kappa);
        read(s, "iota", "system", cfg.powers.iota);
    }
    if (const YAML::Node m = root["models"])
    {
        if (!m.IsSequence())
            throw ConfigError("'models' must be a list");
        cfg.models.clear();
        for (const auto &item : m)
        {
            const std::string name = item.as<std::string>();
            const auto model = parse_channel_model(name);
            if (!model)
                throw ConfigError("unknown channel model '" + name + "'");
            cfg.models.push_back(*model);
        }
    }
    if (const YAML::Node s = root["sweep"])
    {
        check_keys(s, "sweep", {"start", "stop", "points", "scale"});
        SweepSpec spec = cfg.effective_sweep();
        read(s, "start", "sweep", spec.start);
        read(s, "stop", "sweep", spec.stop);
        read(s, "points", "sweep", spec.points);
        if (s["scale"])
        {
            std::string scale;
            read(s, "scale", "sweep", scale);
            if (scale == "linear")
                spec.scale = SweepScale::Linear;
            else if (scale == "log")
                spec.scale = SweepScale::Log;
            else
                throw ConfigError("sweep.scale must be 'linear' or 'log'");
        }
        cfg.sweep = spec;
    }
    if (const YAML::Node r = root["region"])
    {
        check_keys(r, "region", {"tau_points", "sigma_points", "fdsac_points"});
        read(r, "tau_points", "region", cfg.tau_points);
        read(r, "sigma_points", "region", cfg.sigma_points);
        read(r, "fdsac_points", "region", cfg.fdsac_points);
    }
    if (const YAML::Node c = root["ccf"])
    {
        check_keys(c, "ccf",
                   {"ladder", "samples", "last_rung_samples", "r_min", "r_max", "theta_min", "theta_max", "phi_min",
                    "phi_max"});
        read(c, "ladder", "ccf", cfg.ccf_ladder);
        read(c, "samples", "ccf", cfg.ccf_samples);
        read(c, "last_rung_samples", "ccf", cfg.ccf_last_rung_samples);
        read(c, "r_min", "ccf", cfg.ccf_box.r_min);
        read(c, "r_max", "ccf", cfg.ccf_box.r_max);
        read(c, "theta_min", "ccf", cfg.ccf_box.theta_min);
        read(c, "theta_max", "ccf", cfg.ccf_box.theta_max);
        read(c, "phi_min", "ccf", cfg.ccf_box.phi_min);
        read(c, "phi_max", "ccf", cfg.ccf_box.phi_max);
    }
    read(root, "seed", "", cfg.seed);
    read(root, "threads", "", cfg.threads);
    if (root["out"])
    {
        std::string out;
        read(root, "out", "", out);
        cfg.out_dir = out;
    }
}

} // namespace

void apply_config_text(ExperimentConfig &cfg, std::string_view yaml)
{
    YAML::Node root;
    try
    {
        root = YAML::Load(std::string(yaml));
    }
    catch (const YAML::Exception &e)
    {
        throw ConfigError(std::string("malformed configuration: ") + e.what());
    }
    apply(cfg, root);
}

void apply_config_file(ExperimentConfig &cfg, const std::filesystem::path &file)
{
    YAML::Node root;
    try
    {
        root = YAML::LoadFile(file.string());
    }
    catch (const YAML::BadFile &)
    {
        throw ConfigError("cannot read configuration file '" + file.string() + "'");
    }
    catch (const YAML::Exception &e)
    {
        throw ConfigError("malformed configuration file '" + file.string() + "': " + e.what());
    }
    apply(cfg, root);
}

} // namespace nfisac

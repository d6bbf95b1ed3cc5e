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

#include <catch_amalgamated.hpp>

#include "nfisac/config.hpp"
#include "nfisac/csv.hpp"
#include "nfisac/errors.hpp"
#include "nfisac/experiments.hpp"

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

using namespace nfisac;
using Catch::Matchers::ContainsSubstring;

namespace
{

std::filesystem::path scratch_dir(const std::string &name)
{
    const auto dir = std::filesystem::temp_directory_path() / ("nfisac_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

const Table *find(const RunResult &r, const std::string &name)
{
    for (const Table &t : r.tables)
        if (t.name == name)
            return &t;
    return nullptr;
}

} // namespace

TEST_CASE("experiment names round-trip", "[runner]")
{
    for (Experiment e : {Experiment::DlSnr, Experiment::DlN, Experiment::DlR, Experiment::DlRegion,
                         Experiment::UlSnr, Experiment::UlN, Experiment::UlRegion, Experiment::Ccf})
        CHECK(parse_experiment(to_string(e)) == e);
    CHECK_FALSE(parse_experiment("fig3").has_value());
}

TEST_CASE("sweep values", "[runner]")
{
    const SweepSpec lin{60.0, 130.0, 15, SweepScale::Linear};
    const auto v = lin.values();
    REQUIRE(v.size() == 15);
    CHECK(v.front() == 60.0);
    CHECK(v.back() == 130.0);
    CHECK(v[1] == 65.0);

    const SweepSpec lg{10.0, 1000.0, 3, SweepScale::Log};
    const auto w = lg.values();
    REQUIRE(w.size() == 3);
    CHECK_THAT(w[1], Catch::Matchers::WithinRel(100.0, 1e-12));
}

TEST_CASE("config text overrides defaults", "[runner]")
{
    ExperimentConfig cfg = default_config(Experiment::DlSnr);
    apply_config_text(cfg, R"(
experiment: ul_snr
geometry: {n_y: 21, n_z: 11}
cu: {r: 12.0}
system: {p_c_db: 70, l_frame: 2}
models: [Accurate, UPW]
sweep: {start: 0, stop: 10, points: 3, scale: linear}
seed: 9
)");
    CHECK(cfg.experiment == Experiment::UlSnr);
    CHECK(cfg.geometry.n_y == 21);
    CHECK(cfg.geometry.n_z == 11);
    CHECK(cfg.cu.r == 12.0);
    CHECK(cfg.powers.p_c_db == 70.0);
    CHECK(cfg.powers.l_frame == 2);
    CHECK(cfg.models == std::vector<ChannelModel>{ChannelModel::Accurate, ChannelModel::UPW});
    REQUIRE(cfg.sweep.has_value());
    CHECK(cfg.sweep->points == 3);
    CHECK(cfg.seed == 9);
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("config errors", "[runner]")
{
    ExperimentConfig cfg;
    CHECK_THROWS_AS(apply_config_text(cfg, "bogus: 1"), ConfigError);
    CHECK_THROWS_AS(apply_config_text(cfg, "geometry: {n_x: 3}"), ConfigError);
    CHECK_THROWS_AS(apply_config_text(cfg, "models: [Spherical]"), ConfigError);
    CHECK_THROWS_AS(apply_config_text(cfg, "experiment: fig3"), ConfigError);
    CHECK_THROWS_AS(apply_config_text(cfg, "seed: [1, 2"), ConfigError);
    CHECK_THROWS_AS(apply_config_text(cfg, "system: {p_db: loud}"), ConfigError);
    CHECK_THROWS_AS(apply_config_file(cfg, "/nonexistent/config.yaml"), ConfigError);

    ExperimentConfig even;
    even.geometry.n_y = 16;
    CHECK_THROWS_AS(even.validate(), ConfigError);

    ExperimentConfig ladder = default_config(Experiment::Ccf);
    ladder.ccf_ladder = {31, 15};
    CHECK_THROWS_AS(ladder.validate(), ConfigError);

    ExperimentConfig sweep = default_config(Experiment::DlN);
    sweep.sweep = SweepSpec{0.0, 101.0, 4, SweepScale::Log};
    CHECK_THROWS_AS(sweep.validate(), ConfigError);
}

TEST_CASE("CSV formatting", "[runner]")
{
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1e-300) == "1e-300");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
    CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");

    Table t{"demo", {"a", "b"}, {}};
    t.add_row({1.0, 2.5});
    t.add_row(std::vector<std::string>{"x", "y"});
    CHECK(to_csv(t) == "a,b\n1,2.5\nx,y\n");
    CHECK_THROWS(t.add_row(std::vector<double>{1.0}));

    const auto dir = scratch_dir("csv");
    const auto path = write_csv(dir, t);
    CHECK(path.filename() == "demo.csv");
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == to_csv(t));
}

TEST_CASE("dl_snr run", "[runner]")
{
    ExperimentConfig cfg = default_config(Experiment::DlSnr);
    cfg.out_dir = scratch_dir("dl_snr");
    cfg.sweep = SweepSpec{60.0, 130.0, 8, SweepScale::Linear};
    const RunResult r = run_experiment(cfg);
    const Table *t = find(r, "dl_snr");
    REQUIRE(t != nullptr);
    const std::vector<std::string> expected{"p_dB",  "CR_cc", "CR_sc",      "CR_fdsac",    "CR_cc_hiSNR", "CR_sc_hiSNR",
                                            "SR_sc", "SR_cc", "SR_fdsac", "SR_sc_hiSNR", "SR_cc_hiSNR"};
    CHECK(t->columns == expected);
    CHECK(t->rows.size() == 8);

    const auto files = write_outputs(cfg, r);
    REQUIRE_FALSE(files.empty());
    const auto summary = cfg.out_dir / "dl_snr_summary.json";
    REQUIRE(std::filesystem::exists(summary));
    std::ifstream in(summary);
    const nlohmann::json j = nlohmann::json::parse(in);
    CHECK(j.contains("config"));
    CHECK(j.contains("derived"));
    CHECK(j.contains("timings_s"));
    CHECK(j["config"]["experiment"] == "dl_snr");
}

TEST_CASE("small runs of the other experiments", "[runner]")
{
    ExperimentConfig n = default_config(Experiment::DlN);
    n.sweep = SweepSpec{15.0, 63.0, 3, SweepScale::Log};
    const RunResult rn = run_experiment(n);
    REQUIRE(find(rn, "dl_n") != nullptr);
    CHECK(find(rn, "dl_n")->columns.front() == "N_per_axis");

    ExperimentConfig reg = default_config(Experiment::DlRegion);
    reg.tau_points = 21;
    reg.sigma_points = 11;
    reg.fdsac_points = 11;
    const RunResult rr = run_experiment(reg);
    for (const char *name : {"dl_region_isac", "dl_region_fdsac", "dl_region_corners"})
        CHECK(find(rr, name) != nullptr);

    ExperimentConfig ul = default_config(Experiment::UlRegion);
    ul.tau_points = 11;
    ul.fdsac_points = 11;
    const RunResult ru = run_experiment(ul);
    for (const char *name : {"ul_region_isac", "ul_region_inner", "ul_region_fdsac", "ul_region_corners"})
        CHECK(find(ru, name) != nullptr);

    ExperimentConfig c = default_config(Experiment::Ccf);
    c.ccf_ladder = {15, 31};
    c.ccf_samples = 100;
    c.ccf_last_rung_samples = 100;
    const RunResult rc = run_experiment(c);
    REQUIRE(rc.tables.size() == 1);
    CHECK(rc.tables[0].rows.size() == 2);
}

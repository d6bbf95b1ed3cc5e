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
#include "nfisac/experiments.hpp"
#include "nfisac/validation.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace
{

constexpr int exit_config = 2;
constexpr int exit_numerical = 3;

int run_validate(const nfisac::ValidationOptions &opts, const std::filesystem::path &out)
{
    const nfisac::ValidationReport report = nfisac::validate_with_determinism(opts);
    for (const auto &c : report.criteria)
        std::printf("[%s] %2d %s: %s\n", c.passed ? "PASS" : "FAIL", c.id, c.name.c_str(), c.detail.c_str());
    std::printf("%s in %.1f s\n", report.all_passed() ? "all criteria passed" : "some criteria FAILED",
                report.seconds);
    const auto file = nfisac::write_csv(out, report.table());
    std::printf("wrote %s\n", file.string().c_str());
    return report.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"nf-isac: near-field ISAC rate analysis experiments"};
    app.set_version_flag("--version", "nf-isac 0.1.0");

    std::string experiment;
    std::optional<std::string> config_file;
    std::optional<std::string> out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> threads;
    std::vector<std::string> models;

    app.add_option("experiment", experiment,
                   "dl_snr | dl_n | dl_r | dl_region | ul_snr | ul_n | ul_region | ccf | validate")
        ->required();
    app.add_option("--config", config_file, "YAML configuration file");
    app.add_option("--out", out_dir, "output directory (default: current directory)");
    app.add_option("--seed", seed, "RNG seed");
    app.add_option("--threads", threads, "worker threads (0: all logical cores)");
    app.add_option("--model", models, "channel model: accurate | nopolar | upw | usw | nusw (repeatable)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return exit_config;
    }

    try
    {
        if (experiment == "validate")
        {
            nfisac::ValidationOptions opts;
            opts.seed = seed.value_or(opts.seed);
            opts.threads = threads.value_or(0);
            return run_validate(opts, out_dir.value_or("."));
        }

        const auto exp = nfisac::parse_experiment(experiment);
        if (!exp)
            throw nfisac::ConfigError("unknown experiment '" + experiment + "'");
        nfisac::ExperimentConfig cfg = nfisac::default_config(*exp);
        if (config_file)
            nfisac::apply_config_file(cfg, *config_file);
        cfg.experiment = *exp;
        if (out_dir)
            cfg.out_dir = *out_dir;
        if (seed)
            cfg.seed = *seed;
        if (threads)
            cfg.threads = *threads;
        if (!models.empty())
        {
            cfg.models.clear();
            for (const auto &name : models)
            {
                const auto m = nfisac::parse_channel_model(name);
                if (!m)
                    throw nfisac::ConfigError("unknown channel model '" + name + "'");
                cfg.models.push_back(*m);
            }
        }
        cfg.validate();

        const nfisac::RunResult result = nfisac::run_experiment(cfg);
        for (const auto &f : nfisac::write_outputs(cfg, result))
            std::printf("wrote %s\n", f.string().c_str());
        return 0;
    }
    catch (const nfisac::ConfigError &e)
    {
        std::cerr << "nf-isac: configuration error: " << e.what() << '\n';
        return exit_config;
    }
    catch (const nfisac::NumericalError &e)
    {
        std::cerr << "nf-isac: numerical failure: " << e.what() << '\n';
        return exit_numerical;
    }
    catch (const std::exception &e)
    {
        std::cerr << "nf-isac: run failed: " << e.what() << '\n';
        return exit_numerical;
    }
}

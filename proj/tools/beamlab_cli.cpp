// SPDX-License-Identifier: Apache-2.0
//
// beamlab - beamforming analysis for concentric circular and planar arrays
// Copyright (C) 2026 The beamlab authors
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

#include "beamlab/errors.hpp"
#include "beamlab/runner.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

namespace
{
    enum ExitCode
    {
        exit_ok = 0,
        exit_failure = 1,
        exit_config = 2,
        exit_numeric = 3
    };

    int report_error(const char *kind, const std::string &message, int code)
    {
        std::cerr << nlohmann::json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump() << std::endl;
        return code;
    }

    void print_files(const beamlab::RunReport &report)
    {
        for (const auto &f : report.files)
            std::cout << f.string() << "\n";
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"beamlab: UCCA/RPA beam pattern and 5G link analysis"};
    app.set_version_flag("--version", BEAMLAB_VERSION);
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;

    auto *run_cmd = app.add_subcommand("run", "Run every analysis listed in a config file");
    run_cmd->add_option("config", config_path, "Scenario config (JSON)")->required();
    run_cmd->add_option("--out", out_dir, "Output directory (overrides $BEAMLAB_OUTPUT_DIR and the config)");

    auto *repro_cmd = app.add_subcommand("reproduce-paper", "Run the built-in 28 GHz comparison study");
    repro_cmd->add_option("--out", out_dir, "Output directory");
    auto *seed_opt = repro_cmd->add_option("--seed", seed, "Monte Carlo seed");

    const std::pair<const char *, beamlab::Analysis> single[] = {
        {"pattern", beamlab::Analysis::Pattern},
        {"hpbw", beamlab::Analysis::Hpbw},
        {"sll", beamlab::Analysis::Sll},
        {"separation", beamlab::Analysis::Separation},
        {"montecarlo", beamlab::Analysis::MonteCarlo},
    };
    std::vector<std::pair<CLI::App *, beamlab::Analysis>> single_cmds;
    for (const auto &[name, analysis] : single)
    {
        auto *cmd = app.add_subcommand(name, std::string("Run only the ") + name + " analysis of a config");
        cmd->add_option("config", config_path, "Scenario config (JSON)")->required();
        cmd->add_option("--out", out_dir, "Output directory");
        single_cmds.emplace_back(cmd, analysis);
    }

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
        return report_error("usage", e.what(), exit_config);
    }

    const auto override_dir = out_dir.empty() ? std::nullopt : std::optional<std::filesystem::path>(out_dir);
    try
    {
        if (*run_cmd)
        {
            print_files(beamlab::run(std::filesystem::path(config_path), override_dir));
        }
        else if (*repro_cmd)
        {
            const auto seed_override = seed_opt->count() ? std::optional<std::uint64_t>(seed) : std::nullopt;
            print_files(beamlab::reproduce_paper(override_dir, seed_override));
        }
        else
        {
            for (const auto &[cmd, analysis] : single_cmds)
                if (*cmd)
                {
                    auto config = beamlab::load_config(config_path);
                    config.analyses = {analysis};
                    print_files(beamlab::run(config, override_dir));
                }
        }
    }
    catch (const beamlab::ValidationError &e)
    {
        return report_error("config", e.what(), exit_config);
    }
    catch (const beamlab::DomainError &e)
    {
        return report_error("numerical", e.what(), exit_numeric);
    }
    catch (const std::exception &e)
    {
        return report_error("runtime", e.what(), exit_failure);
    }
    return exit_ok;
}

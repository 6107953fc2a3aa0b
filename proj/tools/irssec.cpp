// SPDX-License-Identifier: Apache-2.0
//
// irssec  IRS-assisted downlink secrecy-outage simulator and analytics
// Copyright (C) 2026 irssec contributors
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
//
// Command-line front end. Exit codes: 0 success, 2 configuration error,
// 3 numerical failure, 4 I/O error.

#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "irssec/config.hpp"
#include "irssec/errors.hpp"
#include "irssec/experiments.hpp"

namespace
{

struct Args
{
    std::string config_path;
    std::string out_path;
    std::string format;
    std::uint64_t seed = 0;
    std::int64_t trials = 0;
    int workers = 0;
    bool self_test = false;

    CLI::Option *o_config = nullptr;
    CLI::Option *o_out = nullptr;
    CLI::Option *o_seed = nullptr;
    CLI::Option *o_trials = nullptr;
    CLI::Option *o_format = nullptr;
    CLI::Option *o_workers = nullptr;
};

void add_common_options(CLI::App *cmd, Args &a)
{
    a.o_config = cmd->add_option("--config", a.config_path,
                                 "Experiment config file (flat key = value document)");
    a.o_out = cmd->add_option("--out", a.out_path, "Output path (default: stdout)");
    a.o_seed = cmd->add_option("--seed", a.seed, "Monte-Carlo seed override");
    a.o_trials = cmd->add_option("--trials", a.trials,
                                 "Monte-Carlo trial count override (0 skips MC columns)");
    a.o_format = cmd->add_option("--format", a.format, "Output format: csv or json")
                     ->check(CLI::IsMember({"csv", "json"}));
    a.o_workers = cmd->add_option("--workers", a.workers, "Worker thread count (0 = auto)");
}

irssec::ExperimentSpec resolve_spec(const Args &a)
{
    irssec::ExperimentSpec spec;
    if (a.o_config->count())
        spec = irssec::load_config(a.config_path);
    if (a.o_seed->count())
        spec.mc.seed = a.seed;
    if (a.o_trials->count())
        spec.mc.trials = a.trials;
    if (a.o_workers->count())
        spec.mc.workers = a.workers;
    if (a.o_out->count())
        spec.out_path = a.out_path;
    if (a.o_format->count())
        spec.format = irssec::output_format_from_string(a.format);
    if (spec.mc.trials < 0)
        throw irssec::config_error("--trials must be nonnegative");
    if (spec.mc.workers < 0)
        throw irssec::config_error("--workers must be nonnegative");
    return spec;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"IRS-assisted downlink secrecy-outage simulator and analytics"};
    app.require_subcommand(1);

    struct Command
    {
        CLI::App *cmd = nullptr;
        const char *kind = nullptr;
        Args args;
    };

    Command commands[] = {
        {nullptr, "sop-point", {}},
        {nullptr, "sweep-k", {}},
        {nullptr, "sweep-n", {}},
        {nullptr, "optimal-k", {}},
        {nullptr, "validate-dist", {}},
    };
    const char *descriptions[] = {
        "SOP at a single operating point, one row per scenario",
        "SOP versus selected-subset size K, with a random-selection baseline",
        "SOP versus surface size N, full surface versus optimal subset",
        "Exhaustive optimal subset size per scenario and SOP functional",
        "Distribution-fit checks of the SNR laws against simulation",
    };
    for (std::size_t i = 0; i < 5; ++i) {
        commands[i].cmd = app.add_subcommand(commands[i].kind, descriptions[i]);
        add_common_options(commands[i].cmd, commands[i].args);
    }
    commands[4].cmd->add_flag("--self-test", commands[4].args.self_test,
                              "Corrupt the predicted Gamma shape by 1.5x; checks must fail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        for (const auto &c : commands) {
            if (!c.cmd->parsed())
                continue;
            const irssec::ExperimentSpec spec = resolve_spec(c.args);
            irssec::ExperimentResult result;
            const std::string kind = c.kind;
            if (kind == "sop-point")
                result = irssec::run_sop_point(spec);
            else if (kind == "sweep-k")
                result = irssec::run_sweep_k(spec);
            else if (kind == "sweep-n")
                result = irssec::run_sweep_n(spec);
            else if (kind == "optimal-k")
                result = irssec::run_optimal_k(spec);
            else
                result = irssec::run_validate_dist(spec, c.args.self_test);
            irssec::write_output(result, spec, kind);
            return 0;
        }
        std::cerr << "error: no subcommand selected\n";
        return 2;
    } catch (const irssec::config_error &ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return 2;
    } catch (const irssec::numerical_error &ex) {
        std::cerr << "numerical error: " << ex.what() << "\n";
        return 3;
    } catch (const irssec::io_error &ex) {
        std::cerr << "i/o error: " << ex.what() << "\n";
        return 4;
    } catch (const std::invalid_argument &ex) {
        // Domain validation surfaced from the library (parameter bounds).
        std::cerr << "config error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception &ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}

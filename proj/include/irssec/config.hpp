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
// Experiment configuration: a flat key=value document with dotted namespaces
// (system.*, mc.*, sweep.*, run.*, ess.*, out.*). Logarithmic units are
// accepted only through the explicit *_dBm / *_dB key variants and converted
// once at load; everything downstream is linear.

#ifndef IRSSEC_CONFIG_HPP
#define IRSSEC_CONFIG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "irssec/mc.hpp"
#include "irssec/params.hpp"

namespace irssec
{

// Maps to process exit code 2 in the command-line tool.
class config_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat
{
    Csv,
    Json
};

const char *to_string(OutputFormat format);
OutputFormat output_format_from_string(const std::string &name);

struct ExperimentSpec
{
    SystemParams params;
    McConfig mc;
    std::vector<int> scenarios = {3};
    std::vector<int> k_grid = {5,  10, 15, 20, 25, 30, 35, 40, 45, 50,
                               55, 60, 65, 70, 75, 80, 85, 90, 95, 100};
    std::vector<int> n_grid = {16, 36, 64, 100, 144, 196};
    std::vector<double> rho_grid = {0.9, 0.8};
    std::optional<int> ess_K;  // subset size for single-point runs; absent = all N
    std::string out_path;      // empty = stdout
    OutputFormat format = OutputFormat::Csv;

    bool operator==(const ExperimentSpec &) const = default;
};

// Parses a config document. Unknown keys, duplicate keys, malformed values
// (all with line numbers), unit-variant conflicts (e.g. both system.P and
// system.P_dBm), and out-of-range values raise config_error. Omitted keys
// keep the reference defaults.
ExperimentSpec parse_config(const std::string &text, const std::string &source_name);

// parse_config over the contents of `path`; a missing or unreadable file is a
// config_error.
ExperimentSpec load_config(const std::string &path);

// Canonical document with every key spelled out in linear units, doubles at
// full precision (%.17g). parse_config(emit_config(s), ·) == s for any valid s.
std::string emit_config(const ExperimentSpec &spec);

} // namespace irssec

#endif

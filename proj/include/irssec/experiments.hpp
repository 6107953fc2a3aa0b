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
// Experiment orchestration: each run_* function evaluates one experiment
// family over an ExperimentSpec and returns a column-ordered row table ready
// for CSV or JSON emission. Monte-Carlo columns are NaN when mc.trials == 0.

#ifndef IRSSEC_EXPERIMENTS_HPP
#define IRSSEC_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "irssec/config.hpp"

namespace irssec
{

inline constexpr const char *kToolVersion = "1.0.0";

struct ExperimentResult
{
    std::vector<std::string> columns;
    nlohmann::ordered_json rows; // array of flat objects keyed by column name
};

// One row per scenario at a single operating point (K = ess.K, or all N).
// Columns: scenario,N,K,sop_analytic,sop_lower,sop_series,series_terms,
// series_status,sop_mc,sop_mc_se,trials,seed.
ExperimentResult run_sop_point(const ExperimentSpec &spec);

// Subset-size sweep with the paired random-selection baseline; rows sorted by
// (scenario, K). Columns: scenario,K,sop_analytic,sop_lower,sop_mc,sop_mc_se,
// sop_mc_random_ess,trials,seed.
ExperimentResult run_sweep_k(const ExperimentSpec &spec);

// Array-size sweep comparing the full surface against the optimal subset, for
// each rho in the grid. Columns: rho,N,K_opt,sop_wo_ess,sop_opt_ess,
// sop_mc_wo_ess,sop_mc_wo_ess_se,sop_mc_opt_ess,sop_mc_opt_ess_se,trials,seed.
ExperimentResult run_sweep_n(const ExperimentSpec &spec);

// Exhaustive optimal subset size per scenario under both SOP functionals.
// Columns: scenario,method,K_opt,sop.
ExperimentResult run_optimal_k(const ExperimentSpec &spec);

// Distribution-fit validation table (moment and CDF checks of the SNR laws
// against simulation). corrupt_shape multiplies the predicted Gamma shape by
// 1.5 -- a self-test hook proving the harness can fail. Columns:
// check,scenario,K,observed,predicted,tolerance,pass.
ExperimentResult run_validate_dist(const ExperimentSpec &spec, bool corrupt_shape = false);

// Header line plus one line per row; floats carry 12 significant digits, NaN
// prints as "nan".
std::string to_csv(const ExperimentResult &result);

// Writes the table in spec.format to spec.out_path (stdout when empty), plus
// a reproducibility sidecar: <out_path>.meta.json, or a single JSON line on
// stderr for stdout runs. Throws io_error on write failure.
void write_output(const ExperimentResult &result, const ExperimentSpec &spec,
                  const std::string &kind);

} // namespace irssec

#endif

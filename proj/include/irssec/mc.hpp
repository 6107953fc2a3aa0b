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
// Monte-Carlo engine: repeated channel realizations driven through the
// transceiver, with reproducible parallelism. Estimates are bit-identical for
// a fixed seed regardless of worker count because every trial runs on its own
// RNG substream keyed by the trial index, and reductions are either integer
// counts or per-trial value arrays folded in index order.

#ifndef IRSSEC_MC_HPP
#define IRSSEC_MC_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "irssec/params.hpp"
#include "irssec/transceiver.hpp"

namespace irssec
{

struct McConfig
{
    std::int64_t trials = 100000;
    std::uint64_t seed = 1;
    int workers = 0; // 0 = one per hardware thread

    bool operator==(const McConfig &) const = default;
};

struct McEstimate
{
    double p_hat = 0.0;
    double std_err = 0.0; // binomial: sqrt(p_hat (1 - p_hat) / trials)
    std::int64_t trials = 0;
    std::int64_t outages = 0;
};

// Proposed (magnitude-ranked) subset vs a uniformly random subset of the same
// size, evaluated on identical channel draws trial for trial.
struct PairedSopEstimate
{
    McEstimate proposed;
    McEstimate random;
};

enum class Side
{
    Bob,
    Eve
};

struct SnrStats
{
    double mean = 0.0;
    double variance = 0.0; // unbiased sample variance
    // Empirical quantiles at probability levels (i + 0.5)/100, i = 0..99.
    std::vector<double> cdf_grid;
    // All per-trial SNR values, sorted ascending (for distribution tests).
    std::vector<double> samples;
};

// Secrecy-outage frequency over mc.trials independent realizations. Each
// trial draws the channel state, selects K elements by outdated-magnitude
// ranking (all N when K is absent), applies the phase-aligned surface and MRT,
// and counts an outage iff the secrecy capacity is <= params.Rs (the boundary
// is measure-zero; including it is fixed for determinism).
McEstimate estimate_sop(const SystemParams &params, const Scenario &scenario,
                        std::optional<int> K, const McConfig &mc);

// As estimate_sop, plus a paired baseline where the active subset is drawn
// uniformly at random per trial (after the canonical channel draws, so both
// arms see identical channels).
PairedSopEstimate estimate_sop_with_random_baseline(const SystemParams &params,
                                                    const Scenario &scenario,
                                                    std::optional<int> K, const McConfig &mc);

// Sample mean/variance and empirical distribution of one side's instantaneous
// SNR under the same per-trial flow as estimate_sop.
SnrStats estimate_snr_stats(const SystemParams &params, const Scenario &scenario,
                            std::optional<int> K, Side side, const McConfig &mc);

// One-sample Kolmogorov-Smirnov distance between an ascending-sorted sample
// and a reference CDF.
double ks_statistic(const std::vector<double> &sorted_samples,
                    const std::function<double(double)> &cdf);

} // namespace irssec

#endif

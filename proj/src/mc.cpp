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

#include "irssec/mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "irssec/channel.hpp"
#include "irssec/rng.hpp"

namespace irssec
{

namespace
{

// Workers claim fixed-size chunks of the trial index space from an atomic
// counter. Which worker runs which chunk is scheduling-dependent, but every
// trial t always runs on rng::Stream(seed, t), so results are reproducible.
constexpr std::int64_t kChunk = 4096;

template <typename PerTrial>
void for_each_trial(std::int64_t trials, int workers, const PerTrial &per_trial)
{
    int n_workers = workers;
    if (n_workers <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        n_workers = hw == 0 ? 1 : static_cast<int>(hw);
    }

    const std::int64_t n_chunks = (trials + kChunk - 1) / kChunk;
    std::atomic<std::int64_t> next_chunk{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    const auto drain = [&]() {
        try {
            for (;;) {
                const std::int64_t c = next_chunk.fetch_add(1, std::memory_order_relaxed);
                if (c >= n_chunks)
                    return;
                const std::int64_t lo = c * kChunk;
                const std::int64_t hi = std::min(trials, lo + kChunk);
                for (std::int64_t t = lo; t < hi; ++t)
                    per_trial(t);
            }
        } catch (...) {
            const std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
        }
    };

    if (n_workers == 1) {
        drain();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_workers));
        for (int i = 0; i < n_workers; ++i)
            pool.emplace_back(drain);
        for (auto &th : pool)
            th.join();
    }
    if (failure)
        std::rethrow_exception(failure);
}

void check_inputs(const SystemParams &params, const std::optional<int> &K, const McConfig &mc)
{
    params.validate();
    if (K && (*K < 1 || *K > params.N()))
        throw std::invalid_argument("monte-carlo: K out of range");
    if (mc.trials < 1)
        throw std::invalid_argument("monte-carlo: trials must be at least 1");
}

McEstimate make_estimate(std::int64_t outages, std::int64_t trials)
{
    McEstimate e;
    e.trials = trials;
    e.outages = outages;
    e.p_hat = static_cast<double>(outages) / static_cast<double>(trials);
    e.std_err = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(trials));
    return e;
}

struct TrialSnrs
{
    double bob = 0.0;
    double eve = 0.0;
};

TrialSnrs eval_selection(const ChannelRealization &r, std::vector<int> selection,
                         const std::vector<double> &phases, const SystemParams &params,
                         const Scenario &scenario)
{
    IrsConfig irs;
    irs.phases = phases;
    irs.selection = std::move(selection);
    TrialSnrs snrs;
    snrs.bob = instant_snr_bob(r, irs, params, scenario.bob);
    snrs.eve = instant_snr_eve(r, irs, params, scenario.eve);
    return snrs;
}

// First-K entries of a Fisher-Yates shuffle of 0..N-1: a uniform K-subset.
std::vector<int> random_selection(int N, int K, rng::Stream &stream)
{
    std::vector<int> idx(static_cast<std::size_t>(N));
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = 0; i < K; ++i) {
        const int j = i + static_cast<int>(stream.uniform01() * static_cast<double>(N - i));
        std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    }
    idx.resize(static_cast<std::size_t>(K));
    return idx;
}

} // namespace

McEstimate estimate_sop(const SystemParams &params, const Scenario &scenario,
                        std::optional<int> K, const McConfig &mc)
{
    check_inputs(params, K, mc);
    const int N = params.N();
    std::atomic<std::int64_t> outages{0};

    for_each_trial(mc.trials, mc.workers, [&](std::int64_t t) {
        rng::Stream stream(mc.seed, static_cast<std::uint64_t>(t));
        const ChannelRealization r = draw_realization(params, stream);
        std::vector<int> sel = K ? ess_select(r.h_B_hat, *K) : full_selection(N);
        const auto phases = irs_optimal_phases(r.h_B_hat, r.b);
        const TrialSnrs snrs = eval_selection(r, std::move(sel), phases, params, scenario);
        if (secrecy_capacity(snrs.bob, snrs.eve) <= params.Rs)
            outages.fetch_add(1, std::memory_order_relaxed);
    });

    return make_estimate(outages.load(), mc.trials);
}

PairedSopEstimate estimate_sop_with_random_baseline(const SystemParams &params,
                                                    const Scenario &scenario,
                                                    std::optional<int> K, const McConfig &mc)
{
    check_inputs(params, K, mc);
    const int N = params.N();
    const int k_on = K.value_or(N);
    std::atomic<std::int64_t> outages_proposed{0};
    std::atomic<std::int64_t> outages_random{0};

    for_each_trial(mc.trials, mc.workers, [&](std::int64_t t) {
        rng::Stream stream(mc.seed, static_cast<std::uint64_t>(t));
        const ChannelRealization r = draw_realization(params, stream);
        // The random subset is drawn after the canonical channel draws so
        // both arms share one realization and stay aligned trial for trial.
        std::vector<int> sel_random = random_selection(N, k_on, stream);
        std::vector<int> sel_proposed = ess_select(r.h_B_hat, k_on);
        const auto phases = irs_optimal_phases(r.h_B_hat, r.b);

        const TrialSnrs proposed =
            eval_selection(r, std::move(sel_proposed), phases, params, scenario);
        if (secrecy_capacity(proposed.bob, proposed.eve) <= params.Rs)
            outages_proposed.fetch_add(1, std::memory_order_relaxed);

        const TrialSnrs random =
            eval_selection(r, std::move(sel_random), phases, params, scenario);
        if (secrecy_capacity(random.bob, random.eve) <= params.Rs)
            outages_random.fetch_add(1, std::memory_order_relaxed);
    });

    PairedSopEstimate pair;
    pair.proposed = make_estimate(outages_proposed.load(), mc.trials);
    pair.random = make_estimate(outages_random.load(), mc.trials);
    return pair;
}

SnrStats estimate_snr_stats(const SystemParams &params, const Scenario &scenario,
                            std::optional<int> K, Side side, const McConfig &mc)
{
    check_inputs(params, K, mc);
    const int N = params.N();
    std::vector<double> values(static_cast<std::size_t>(mc.trials));

    for_each_trial(mc.trials, mc.workers, [&](std::int64_t t) {
        rng::Stream stream(mc.seed, static_cast<std::uint64_t>(t));
        const ChannelRealization r = draw_realization(params, stream);
        std::vector<int> sel = K ? ess_select(r.h_B_hat, *K) : full_selection(N);
        const auto phases = irs_optimal_phases(r.h_B_hat, r.b);
        const TrialSnrs snrs = eval_selection(r, std::move(sel), phases, params, scenario);
        values[static_cast<std::size_t>(t)] = side == Side::Bob ? snrs.bob : snrs.eve;
    });

    // Reductions fold the per-trial array in index order, independent of
    // which worker produced which entry.
    SnrStats stats;
    const double n = static_cast<double>(mc.trials);
    double sum = 0.0;
    for (const double v : values)
        sum += v;
    stats.mean = sum / n;
    double ss = 0.0;
    for (const double v : values)
        ss += (v - stats.mean) * (v - stats.mean);
    stats.variance = mc.trials > 1 ? ss / (n - 1.0) : 0.0;

    std::sort(values.begin(), values.end());
    stats.cdf_grid.resize(100);
    for (int i = 0; i < 100; ++i) {
        auto pos = static_cast<std::size_t>((i + 0.5) / 100.0 * n);
        pos = std::min(pos, values.size() - 1);
        stats.cdf_grid[static_cast<std::size_t>(i)] = values[pos];
    }
    stats.samples = std::move(values);
    return stats;
}

double ks_statistic(const std::vector<double> &sorted_samples,
                    const std::function<double(double)> &cdf)
{
    if (sorted_samples.empty())
        throw std::invalid_argument("ks_statistic: empty sample");
    const double n = static_cast<double>(sorted_samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted_samples.size(); ++i) {
        const double F = cdf(sorted_samples[i]);
        const double lo = F - static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n - F;
        d = std::max(d, std::max(lo, hi));
    }
    return d;
}

} // namespace irssec

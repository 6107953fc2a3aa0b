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

#include "irssec/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>

#include "irssec/analytics.hpp"
#include "irssec/errors.hpp"
#include "irssec/mc.hpp"

namespace irssec
{

namespace
{

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

using Row = nlohmann::ordered_json;

std::string fmt12(double v)
{
    if (std::isnan(v))
        return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

nlohmann::ordered_json params_to_json(const SystemParams &p)
{
    nlohmann::ordered_json j;
    j["M"] = p.M;
    j["N_H"] = p.N_H;
    j["N_V"] = p.N_V;
    j["L"] = p.L;
    j["P"] = p.P;
    j["sigma2_B"] = p.sigma2_B;
    j["sigma2_E"] = p.sigma2_E;
    j["rho"] = p.rho;
    j["Rs"] = p.Rs;
    j["phi1"] = p.phi1;
    j["theta1"] = p.theta1;
    j["phi2"] = p.phi2;
    j["theta2"] = p.theta2;
    j["spacing_bs"] = p.spacing_bs;
    j["spacing_h"] = p.spacing_h;
    j["spacing_v"] = p.spacing_v;
    j["C1"] = p.C1;
    j["alpha1"] = p.alpha1;
    j["d1"] = p.d1;
    j["C2"] = p.C2;
    j["alpha2"] = p.alpha2;
    j["d2"] = p.d2;
    return j;
}

std::vector<int> sorted_unique(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

ExperimentResult run_sop_point(const ExperimentSpec &spec)
{
    ExperimentResult result;
    result.columns = {"scenario",     "N",      "K",          "sop_analytic",
                      "sop_lower",    "sop_series", "series_terms", "series_status",
                      "sop_mc",       "sop_mc_se",  "trials",       "seed"};
    result.rows = nlohmann::ordered_json::array();

    const int N = spec.params.N();
    const int K = spec.ess_K.value_or(N);
    for (const int s : sorted_unique(spec.scenarios)) {
        const Scenario sc = Scenario::from_index(s);
        const GammaParams bob = bob_snr_params(spec.params, sc.bob, spec.ess_K);
        const ExpParams eve = eve_snr_params(spec.params, sc.eve, spec.ess_K);
        const SeriesResult series = sop_series_meijerg(bob, eve, spec.params.Rs);

        Row row;
        row["scenario"] = s;
        row["N"] = N;
        row["K"] = K;
        row["sop_analytic"] = sop_exact(bob, eve, spec.params.Rs);
        row["sop_lower"] = sop_lower_bound(bob, eve, spec.params.Rs);
        row["sop_series"] = series.value;
        row["series_terms"] = series.terms;
        row["series_status"] = to_string(series.status);
        if (spec.mc.trials > 0) {
            const McEstimate mc = estimate_sop(spec.params, sc, spec.ess_K, spec.mc);
            row["sop_mc"] = mc.p_hat;
            row["sop_mc_se"] = mc.std_err;
        } else {
            row["sop_mc"] = kNan;
            row["sop_mc_se"] = kNan;
        }
        row["trials"] = spec.mc.trials;
        row["seed"] = spec.mc.seed;
        result.rows.push_back(std::move(row));
    }
    return result;
}

ExperimentResult run_sweep_k(const ExperimentSpec &spec)
{
    ExperimentResult result;
    result.columns = {"scenario",  "K",      "sop_analytic",      "sop_lower", "sop_mc",
                      "sop_mc_se", "sop_mc_random_ess", "trials",    "seed"};
    result.rows = nlohmann::ordered_json::array();

    for (const int s : sorted_unique(spec.scenarios)) {
        const Scenario sc = Scenario::from_index(s);
        for (const int K : sorted_unique(spec.k_grid)) {
            // The analytic column is the subset-selection parameterization at
            // every K, including K = N, so the curve comes from one family.
            const GammaParams bob = bob_snr_params_order_stats(spec.params, sc.bob, K);
            const ExpParams eve = eve_snr_params(spec.params, sc.eve, K);

            Row row;
            row["scenario"] = s;
            row["K"] = K;
            row["sop_analytic"] = sop_exact(bob, eve, spec.params.Rs);
            row["sop_lower"] = sop_lower_bound(bob, eve, spec.params.Rs);
            if (spec.mc.trials > 0) {
                const PairedSopEstimate pair =
                    estimate_sop_with_random_baseline(spec.params, sc, K, spec.mc);
                row["sop_mc"] = pair.proposed.p_hat;
                row["sop_mc_se"] = pair.proposed.std_err;
                row["sop_mc_random_ess"] = pair.random.p_hat;
            } else {
                row["sop_mc"] = kNan;
                row["sop_mc_se"] = kNan;
                row["sop_mc_random_ess"] = kNan;
            }
            row["trials"] = spec.mc.trials;
            row["seed"] = spec.mc.seed;
            result.rows.push_back(std::move(row));
        }
    }
    return result;
}

ExperimentResult run_sweep_n(const ExperimentSpec &spec)
{
    ExperimentResult result;
    result.columns = {"rho",           "N",
                      "K_opt",         "sop_wo_ess",
                      "sop_opt_ess",   "sop_mc_wo_ess",
                      "sop_mc_wo_ess_se", "sop_mc_opt_ess",
                      "sop_mc_opt_ess_se", "trials",
                      "seed"};
    result.rows = nlohmann::ordered_json::array();

    const Scenario sc = Scenario::from_index(spec.scenarios.front());
    for (const double rho : spec.rho_grid) {
        for (const int n : sorted_unique(spec.n_grid)) {
            SystemParams p = spec.params;
            const int root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
            p.N_H = root;
            p.N_V = root;
            p.rho = rho;

            const GammaParams bob_full = bob_snr_params(p, sc.bob, std::nullopt);
            const ExpParams eve_full = eve_snr_params(p, sc.eve, std::nullopt);
            const OptimalK opt = optimal_k(p, sc, OptimalKMethod::Exact);

            Row row;
            row["rho"] = rho;
            row["N"] = n;
            row["K_opt"] = opt.K_opt;
            row["sop_wo_ess"] = sop_exact(bob_full, eve_full, p.Rs);
            row["sop_opt_ess"] = opt.sop;
            if (spec.mc.trials > 0) {
                const McEstimate wo = estimate_sop(p, sc, std::nullopt, spec.mc);
                const McEstimate at_opt = estimate_sop(p, sc, opt.K_opt, spec.mc);
                row["sop_mc_wo_ess"] = wo.p_hat;
                row["sop_mc_wo_ess_se"] = wo.std_err;
                row["sop_mc_opt_ess"] = at_opt.p_hat;
                row["sop_mc_opt_ess_se"] = at_opt.std_err;
            } else {
                row["sop_mc_wo_ess"] = kNan;
                row["sop_mc_wo_ess_se"] = kNan;
                row["sop_mc_opt_ess"] = kNan;
                row["sop_mc_opt_ess_se"] = kNan;
            }
            row["trials"] = spec.mc.trials;
            row["seed"] = spec.mc.seed;
            result.rows.push_back(std::move(row));
        }
    }
    return result;
}

ExperimentResult run_optimal_k(const ExperimentSpec &spec)
{
    ExperimentResult result;
    result.columns = {"scenario", "method", "K_opt", "sop"};
    result.rows = nlohmann::ordered_json::array();

    for (const int s : sorted_unique(spec.scenarios)) {
        const Scenario sc = Scenario::from_index(s);
        for (const auto method : {OptimalKMethod::Exact, OptimalKMethod::LowerBound}) {
            const OptimalK opt = optimal_k(spec.params, sc, method);
            Row row;
            row["scenario"] = s;
            row["method"] = method == OptimalKMethod::Exact ? "exact" : "lower_bound";
            row["K_opt"] = opt.K_opt;
            row["sop"] = opt.sop;
            result.rows.push_back(std::move(row));
        }
    }
    return result;
}

ExperimentResult run_validate_dist(const ExperimentSpec &spec, bool corrupt_shape)
{
    if (spec.mc.trials < 1)
        throw config_error("validate-dist requires mc.trials >= 1");

    ExperimentResult result;
    result.columns = {"check", "scenario", "K", "observed", "predicted", "tolerance", "pass"};
    result.rows = nlohmann::ordered_json::array();

    const auto add = [&](const char *check, int scenario, int K, double observed,
                         double predicted, double tolerance) {
        Row row;
        row["check"] = check;
        row["scenario"] = scenario;
        row["K"] = K;
        row["observed"] = observed;
        row["predicted"] = predicted;
        row["tolerance"] = tolerance;
        row["pass"] = std::abs(observed - predicted) <= tolerance;
        result.rows.push_back(std::move(row));
    };

    const int N = spec.params.N();
    const int K_ess = std::min(spec.ess_K.value_or(20), N);
    const double n_trials = static_cast<double>(spec.mc.trials);

    for (const int s : sorted_unique(spec.scenarios)) {
        const Scenario sc = Scenario::from_index(s);

        GammaParams bob_fit = bob_snr_params(spec.params, sc.bob, std::nullopt);
        if (corrupt_shape)
            bob_fit.shape *= 1.5; // self-test: predictions must now fail
        const SnrStats bob_obs =
            estimate_snr_stats(spec.params, sc, std::nullopt, Side::Bob, spec.mc);
        add("bob_mean", s, N, bob_obs.mean, bob_fit.mean(),
            3.0 * std::sqrt(bob_obs.variance / n_trials));
        add("bob_variance", s, N, bob_obs.variance, bob_fit.variance(),
            0.05 * bob_fit.variance());

        const ExpParams eve_fit = eve_snr_params(spec.params, sc.eve, std::nullopt);
        const SnrStats eve_obs =
            estimate_snr_stats(spec.params, sc, std::nullopt, Side::Eve, spec.mc);
        const double ks = ks_statistic(eve_obs.samples, [&](double x) {
            return x <= 0.0 ? 0.0 : 1.0 - std::exp(-x / eve_fit.mean);
        });
        add("eve_cdf_ks", s, N, ks, 0.0, 0.01);

        GammaParams bob_ess_fit = bob_snr_params_order_stats(spec.params, sc.bob, K_ess);
        if (corrupt_shape)
            bob_ess_fit.shape *= 1.5;
        const SnrStats bob_ess_obs =
            estimate_snr_stats(spec.params, sc, K_ess, Side::Bob, spec.mc);
        add("bob_mean_ess", s, K_ess, bob_ess_obs.mean, bob_ess_fit.mean(),
            0.03 * bob_ess_fit.mean());

        const ExpParams eve_ess_fit = eve_snr_params(spec.params, sc.eve, K_ess);
        const SnrStats eve_ess_obs =
            estimate_snr_stats(spec.params, sc, K_ess, Side::Eve, spec.mc);
        add("eve_mean_ess", s, K_ess, eve_ess_obs.mean, eve_ess_fit.mean,
            0.03 * eve_ess_fit.mean);
    }
    return result;
}

std::string to_csv(const ExperimentResult &result)
{
    std::string out;
    for (std::size_t i = 0; i < result.columns.size(); ++i) {
        if (i)
            out += ",";
        out += result.columns[i];
    }
    out += "\n";
    for (const auto &row : result.rows) {
        for (std::size_t i = 0; i < result.columns.size(); ++i) {
            if (i)
                out += ",";
            const auto &cell = row.at(result.columns[i]);
            if (cell.is_number_float())
                out += fmt12(cell.get<double>());
            else if (cell.is_boolean())
                out += cell.get<bool>() ? "true" : "false";
            else if (cell.is_string())
                out += cell.get<std::string>();
            else
                out += cell.dump();
        }
        out += "\n";
    }
    return out;
}

void write_output(const ExperimentResult &result, const ExperimentSpec &spec,
                  const std::string &kind)
{
    const std::string payload =
        spec.format == OutputFormat::Csv ? to_csv(result) : result.rows.dump(2) + "\n";

    nlohmann::ordered_json meta;
    meta["tool"] = "irssec";
    meta["version"] = kToolVersion;
    meta["kind"] = kind;
    meta["format"] = to_string(spec.format);
    meta["seed"] = spec.mc.seed;
    meta["trials"] = spec.mc.trials;
    meta["workers"] = spec.mc.workers;
    meta["scenarios"] = spec.scenarios;
    meta["k_grid"] = spec.k_grid;
    meta["n_grid"] = spec.n_grid;
    meta["rho_grid"] = spec.rho_grid;
    if (spec.ess_K)
        meta["ess_K"] = *spec.ess_K;
    meta["params"] = params_to_json(spec.params);

    if (spec.out_path.empty()) {
        std::cout << payload;
        std::cout.flush();
        if (!std::cout)
            throw io_error("failed writing results to stdout");
        std::cerr << meta.dump() << "\n";
        return;
    }

    {
        std::ofstream f(spec.out_path);
        if (!f)
            throw io_error("cannot open output file '" + spec.out_path + "'");
        f << payload;
        f.flush();
        if (!f)
            throw io_error("failed writing output file '" + spec.out_path + "'");
    }
    const std::string meta_path = spec.out_path + ".meta.json";
    std::ofstream m(meta_path);
    if (!m)
        throw io_error("cannot open metadata file '" + meta_path + "'");
    m << meta.dump(2) << "\n";
    m.flush();
    if (!m)
        throw io_error("failed writing metadata file '" + meta_path + "'");
}

} // namespace irssec

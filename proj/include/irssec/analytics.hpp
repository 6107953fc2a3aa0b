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
// Closed-form side of the toolkit: SNR distribution parameters for both
// receivers (with and without element subset selection), the order statistics
// behind the selection analysis, and the secrecy-outage probability in three
// flavors (defining integral, Meijer-G series, lower bound).

#ifndef IRSSEC_ANALYTICS_HPP
#define IRSSEC_ANALYTICS_HPP

#include <optional>

#include "irssec/params.hpp"
#include "irssec/transceiver.hpp"

namespace irssec
{

// Gamma(shape kappa, scale omega) fit of a receiver SNR.
struct GammaParams
{
    double shape = 0.0; // kappa, dimensionless
    double scale = 0.0; // omega, SNR units

    double mean() const { return shape * scale; }
    double variance() const { return shape * scale * scale; }
};

// Exponential fit of the eavesdropper SNR; the mean is the classical lambda.
struct ExpParams
{
    double mean = 0.0;
};

// Order statistics of the K largest of N Rayleigh magnitudes.
struct OrderStats
{
    double mu_bar = 0.0;    // mean of the selected-magnitude average
    double beta_bar = 0.0;  // asymptotic variance of that average
    double threshold = 0.0; // magnitude of the K-th largest element
};

// First and second moments of the in-phase/quadrature parts of the reflected
// sum (the random variable whose squared magnitude is the SNR, up to scale).
struct BobMoments
{
    double m_u = 0.0;      // mean of the in-phase part
    double delta_u2 = 0.0; // variance of the in-phase part
    double delta_v2 = 0.0; // variance of the quadrature part
};

// Moments of the reflected sum. Without `stats` they describe the full-array
// sum of n_or_k elements; with `stats` they use the order-statistics
// magnitudes of the selected subset (n_or_k = K). Outdated CSI gives the
// plain moments; Perfect CSI weights them by rho^2 and adds the aging
// innovation (n_or_k/2)(1-rho^2)beta_B to both variances (mean scales by rho).
BobMoments bob_appendix_moments(const SystemParams &params, int n_or_k,
                                const std::optional<OrderStats> &stats, Csi bob_csi);

// Threshold t = sqrt(-beta ln(K/N)); mu_bar = sqrt(beta) Gamma(3/2, t^2/beta)
// / (K/N); beta_bar = p(1-p) / (N f(mu_bar)^2) with p = 1 - e^{-mu_bar^2/beta}
// and f the Rayleigh pdf. Throws std::invalid_argument unless 1 <= K <= N and
// beta > 0.
OrderStats ess_order_stats(int N, int K, double beta_B);

// Gamma fit of the legitimate user's SNR. Without ess_K (or with ess_K == N)
// this is the moment-matched fit kappa = E^2/V, omega = V/E built from
// bob_appendix_moments; with ess_K < N it is the order-statistics
// parameterization of bob_snr_params_order_stats. Throws std::domain_error
// when the parameters degenerate (rho = 0 under outdated CSI).
GammaParams bob_snr_params(const SystemParams &params, Csi bob_csi,
                           std::optional<int> ess_K = std::nullopt);

// The subset-selection closed forms, valid for any 1 <= K <= N (including
// K = N, where it differs slightly from the moment-matched route above; the
// two derivations are reconciled only approximately and we prefer the
// moment-matched one at K = N).
GammaParams bob_snr_params_order_stats(const SystemParams &params, Csi bob_csi, int K);

// Exponential fit of the eavesdropper's SNR; K_eff = ess_K if given else N.
// Outdated: lambda = P M beta_H rho^2 K_eff beta_E / sigma_hat_E^2;
// Perfect: lambda = (P/sigma_E^2) M beta_H K_eff beta_E.
ExpParams eve_snr_params(const SystemParams &params, Csi eve_csi,
                         std::optional<int> ess_K = std::nullopt);

// The defining outage integral
//   Int_0^inf F_Gamma(2^Rs (1 + x) - 1; kappa, omega) (1/lambda) e^{-x/lambda} dx
// after the substitution u = x/lambda, truncated at u = 50 (tail <= e^-50
// since the integrand is bounded by e^-u). Evaluated on a geometric ladder of
// cells starting at the boundary-layer scale min(omega/(2^Rs lambda), 1) with
// adaptive Gauss-Kronrod 7/15 inside each cell; absolute tolerance 1e-8.
// Throws std::invalid_argument on invalid distribution parameters or Rs < 0,
// irssec::numerical_error if refinement hits its depth limit.
double sop_exact(const GammaParams &bob, const ExpParams &eve, double Rs);

// Closed-form lower bound (lambda / (2^-Rs omega + lambda))^kappa.
double sop_lower_bound(const GammaParams &bob, const ExpParams &eve, double Rs);

enum class SeriesStatus
{
    Converged,    // term magnitude fell below tol
    NotConverged, // p_max terms consumed, or the partial sums misbehaved
    InvalidValue  // numerically converged but outside [0, 1]: not a probability
};

struct SeriesResult
{
    double value = 0.0;
    int terms = 0;
    SeriesStatus status = SeriesStatus::NotConverged;
};

const char *to_string(SeriesStatus status);

// The outage series: sum_p [(-(2^Rs - 1)/omega)^p / p!] G_p / Gamma(kappa)
// with the Meijer-G terms evaluated by Mellin-Barnes contour integration.
// Truncates when a term magnitude drops below tol (Converged) or after p_max
// terms (NotConverged). The series is an approximation of sop_exact and has
// parameter regions where it converges numerically to a non-probability;
// such results are flagged InvalidValue, never returned silently.
SeriesResult sop_series_meijerg(const GammaParams &bob, const ExpParams &eve, double Rs,
                                int p_max = 200, double tol = 1e-8);

enum class OptimalKMethod
{
    Exact,      // minimize sop_exact
    LowerBound  // minimize sop_lower_bound
};

struct OptimalK
{
    int K_opt = 0;
    double sop = 1.0;
};

// Exhaustive scan of K in {1..N} through bob_snr_params / eve_snr_params for
// the given scenario; smallest K wins ties.
OptimalK optimal_k(const SystemParams &params, const Scenario &scenario,
                   OptimalKMethod method);

} // namespace irssec

#endif

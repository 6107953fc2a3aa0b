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
// Per-realization signal processing: optimal surface phases, MRT beamformer,
// element subset selection, instantaneous SNRs and secrecy capacity.

#ifndef IRSSEC_TRANSCEIVER_HPP
#define IRSSEC_TRANSCEIVER_HPP

#include <vector>

#include "irssec/channel.hpp"
#include "irssec/params.hpp"

namespace irssec
{

// Receiver-side channel knowledge. Outdated: the receiver tracks the estimate
// h_hat only, so the aging innovation acts as extra noise (the SNR carries a
// rho^2 factor and an inflated noise variance). Perfect: the receiver knows
// the current channel h; the surface phases are still set from h_hat.
enum class Csi
{
    Outdated,
    Perfect
};

// One of the named CSI scenarios: 1 = (Outdated, Outdated),
// 2 = (Perfect, Perfect), 3 = (Outdated, Perfect) -- the worst case, where
// the eavesdropper has better channel knowledge than the legitimate user.
struct Scenario
{
    Csi bob = Csi::Outdated;
    Csi eve = Csi::Perfect;

    // idx in {1,2,3}; throws std::invalid_argument otherwise.
    static Scenario from_index(int idx);

    // 1..3 for the named combinations, 0 for (Perfect, Outdated).
    int index() const;
};

// Surface configuration applied for one transmission: per-element phases and
// the set of switched-on elements. `selection` holds zero-based element
// indices, distinct and within [0, N); elements outside it contribute exactly
// zero (ideal switch-off).
struct IrsConfig
{
    std::vector<double> phases;
    std::vector<int> selection;

    int K() const { return static_cast<int>(selection.size()); }
};

// phi_n = arg(conj(h_hat_n) b_n), which makes conj(h_hat_n) e^{-j phi_n} b_n
// equal |h_hat_n| (real, nonnegative). Entries with |h_hat_n| == 0 get
// phi_n = arg(b_n): any phase is optimal there and a fixed choice keeps runs
// reproducible.
std::vector<double> irs_optimal_phases(const cvec &h_hat, const cvec &b);

// Indices of the K largest |h_hat_n|, in descending-magnitude order, ties
// broken by the lower index first. Throws std::invalid_argument unless
// 1 <= K <= N.
std::vector<int> ess_select(const cvec &h_hat, int K);

// Full selection {0, 1, ..., N-1}.
std::vector<int> full_selection(int N);

// MRT weights w = H Phi h_hat_B / ||H Phi h_hat_B|| over the selected
// elements, with the rank-1 H folded in analytically: w = a c / (sqrt(M)|c|)
// where c = sum_{n in S} conj(b_n) e^{+j phi_n} h_hat_{B,n}. The beamformer
// uses the error-free phases (the errors are unknown when w is computed).
// Throws std::domain_error when the projected channel is exactly zero
// (including an empty selection).
cvec mrt_beamformer(const ChannelRealization &r, const IrsConfig &irs);

// Instantaneous SNR at the legitimate user over the selected set S with
// noisy phases phi~_n = phi_n + dphi_n, K = |S|:
//   Outdated: (P/sigma_hat^2) M beta_H rho^2 |sum_S conj(h_hat_n) e^{-j phi~_n} b_n|^2,
//             sigma_hat^2 = sigma^2 + P M K beta_H (1 - rho^2) beta_B
//   Perfect:  (P/sigma^2) M beta_H |sum_S conj(h_n) e^{-j phi~_n} b_n|^2
double instant_snr_bob(const ChannelRealization &r, const IrsConfig &irs,
                       const SystemParams &params, Csi bob_csi);

// Same forms for the eavesdropper (her channel never enters the design).
double instant_snr_eve(const ChannelRealization &r, const IrsConfig &irs,
                       const SystemParams &params, Csi eve_csi);

// Reference implementations that assemble the dense M x N cascade matrix and
// the diagonal phase matrix and push them through the full signal model.
// Algebraically identical to the closed forms above; kept as an independent
// cross-check (and exercised as such by the test suite).
double instant_snr_bob_dense(const ChannelRealization &r, const IrsConfig &irs,
                             const SystemParams &params, Csi bob_csi);
double instant_snr_eve_dense(const ChannelRealization &r, const IrsConfig &irs,
                             const SystemParams &params, Csi eve_csi);

// max(0, log2(1 + gamma_B) - log2(1 + gamma_E)).
double secrecy_capacity(double gamma_B, double gamma_E);

// Effective noise power seen by an outdated-CSI receiver: the aging
// innovation reflected through K_on active elements adds
// P M K_on beta_H (1 - rho^2) beta on top of the thermal floor.
inline double outdated_noise_var(const SystemParams &p, int K_on, double beta, double sigma2)
{
    return sigma2 + p.P * p.M * K_on * p.beta_H() * (1.0 - p.rho * p.rho) * beta;
}

} // namespace irssec

#endif

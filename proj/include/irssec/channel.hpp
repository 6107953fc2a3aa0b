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

#ifndef IRSSEC_CHANNEL_HPP
#define IRSSEC_CHANNEL_HPP

#include <complex>
#include <vector>

#include "irssec/params.hpp"
#include "irssec/rng.hpp"

namespace irssec
{

using cvec = std::vector<std::complex<double>>;

// One Monte-Carlo draw of the propagation state. The BS-IRS channel is exactly
// rank one and is kept in factored form (a, b, beta_H); the dense M x N matrix
// sqrt(beta_H) * b * a^H is never materialized.
struct ChannelRealization
{
    cvec a;                    // length-M BS steering vector, unit modulus
    cvec b;                    // length-N IRS steering vector, unit modulus
    double beta_H = 0.0;       // BS-IRS path gain
    double beta_B = 0.0;       // IRS-Bob path gain
    double beta_E = 0.0;       // IRS-Eve path gain
    cvec h_B_hat;              // outdated IRS-Bob channel
    cvec h_B;                  // current IRS-Bob channel: rho*h_B_hat + e_B
    cvec h_E_hat;              // outdated IRS-Eve channel
    cvec h_E;                  // current IRS-Eve channel
    std::vector<double> delta_phi; // per-element phase error, each in [-pi/L, pi/L]
};

// C * d^-alpha. Throws std::invalid_argument for nonpositive C or d.
double path_loss(double C, double d, double alpha);

// rho = J0(2 pi fd_Td), clamped to [0, 1]. J0 first turns negative at
// fd_Td ~ 0.3827; the clamp keeps rho a valid correlation there (all shipped
// configurations stay far below that point).
double rho_from_doppler(double fd_Td);

// Entry m (0-based) = exp(j 2 pi spacing_bs m sin(phi1) sin(theta1)).
cvec steering_bs(const SystemParams &params);

// Entry n uses the row-major grid map k(n) = n mod N_H, l(n) = n / N_H:
// b_n = exp(j 2 pi (k spacing_h cos(theta2) sin(phi2) + l spacing_v sin(theta2))).
cvec steering_irs(const SystemParams &params);

// N i.i.d. CN(0, beta) entries.
cvec sample_user_channel(int N, double beta, rng::Stream &stream);

// rho * h_hat + e with e i.i.d. CN(0, (1 - rho^2) beta); rho = 1 returns
// h_hat unchanged (no draws consumed in that case would break stream alignment,
// so the error vector is drawn regardless and scaled by zero).
cvec evolve_channel(const cvec &h_hat, double rho, double beta, rng::Stream &stream);

// N i.i.d. uniform draws on [-pi/L, pi/L].
std::vector<double> sample_phase_errors(int N, int L, rng::Stream &stream);

// Canonical per-trial draw, in this fixed order: h_B_hat, h_E_hat, e_B, e_E,
// delta_phi. The order is load-bearing for reproducibility contracts.
ChannelRealization draw_realization(const SystemParams &params, rng::Stream &stream);

} // namespace irssec

#endif

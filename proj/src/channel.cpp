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

#include "irssec/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "irssec/specfun.hpp"

namespace irssec
{

namespace
{
constexpr double two_pi = 6.283185307179586476925;

void require(bool ok, const char *message)
{
    if (!ok)
        throw std::invalid_argument(message);
}
} // namespace

void SystemParams::validate() const
{
    require(M >= 1, "SystemParams: M must be >= 1");
    require(N_H >= 1, "SystemParams: N_H must be >= 1");
    require(N_V >= 1, "SystemParams: N_V must be >= 1");
    require(L >= 1, "SystemParams: L must be >= 1");
    require(P > 0.0, "SystemParams: P must be positive");
    require(sigma2_B > 0.0, "SystemParams: sigma2_B must be positive");
    require(sigma2_E > 0.0, "SystemParams: sigma2_E must be positive");
    require(rho >= 0.0 && rho <= 1.0, "SystemParams: rho must lie in [0, 1]");
    require(Rs >= 0.0, "SystemParams: Rs must be nonnegative");
    require(spacing_bs > 0.0, "SystemParams: spacing_bs must be positive");
    require(spacing_h > 0.0, "SystemParams: spacing_h must be positive");
    require(spacing_v > 0.0, "SystemParams: spacing_v must be positive");
    require(C1 > 0.0, "SystemParams: C1 must be positive");
    require(d1 > 0.0, "SystemParams: d1 must be positive");
    require(C2 > 0.0, "SystemParams: C2 must be positive");
    require(d2 > 0.0, "SystemParams: d2 must be positive");
}

double path_loss(double C, double d, double alpha)
{
    if (!(C > 0.0))
        throw std::invalid_argument("path_loss: intercept must be positive");
    if (!(d > 0.0))
        throw std::invalid_argument("path_loss: distance must be positive");
    return C * std::pow(d, -alpha);
}

double rho_from_doppler(double fd_Td)
{
    if (!(fd_Td >= 0.0))
        throw std::invalid_argument("rho_from_doppler: fd_Td must be nonnegative");
    const double rho = specfun::bessel_j0(two_pi * fd_Td);
    if (rho < 0.0)
        return 0.0;
    if (rho > 1.0)
        return 1.0;
    return rho;
}

cvec steering_bs(const SystemParams &params)
{
    const double step = two_pi * params.spacing_bs * std::sin(params.phi1) * std::sin(params.theta1);
    cvec a(params.M);
    for (int m = 0; m < params.M; ++m)
        a[m] = std::polar(1.0, step * m);
    return a;
}

cvec steering_irs(const SystemParams &params)
{
    const double step_h = two_pi * params.spacing_h * std::cos(params.theta2) * std::sin(params.phi2);
    const double step_v = two_pi * params.spacing_v * std::sin(params.theta2);
    const int N = params.N();
    cvec b(N);
    for (int n = 0; n < N; ++n) {
        const int k = n % params.N_H;
        const int l = n / params.N_H;
        b[n] = std::polar(1.0, step_h * k + step_v * l);
    }
    return b;
}

cvec sample_user_channel(int N, double beta, rng::Stream &stream)
{
    if (!(beta > 0.0))
        throw std::invalid_argument("sample_user_channel: beta must be positive");
    cvec h(N);
    for (auto &entry : h)
        entry = stream.cgauss(beta);
    return h;
}

cvec evolve_channel(const cvec &h_hat, double rho, double beta, rng::Stream &stream)
{
    if (!(rho >= 0.0 && rho <= 1.0))
        throw std::invalid_argument("evolve_channel: rho must lie in [0, 1]");
    if (!(beta > 0.0))
        throw std::invalid_argument("evolve_channel: beta must be positive");
    const double evar = (1.0 - rho * rho) * beta;
    cvec h(h_hat.size());
    for (std::size_t n = 0; n < h_hat.size(); ++n) {
        // The innovation is drawn even when rho == 1 (evar == 0 gives an exact
        // zero) so that the stream position is independent of rho.
        const auto e = stream.cgauss(evar);
        h[n] = rho * h_hat[n] + e;
    }
    return h;
}

std::vector<double> sample_phase_errors(int N, int L, rng::Stream &stream)
{
    if (L < 1)
        throw std::invalid_argument("sample_phase_errors: L must be >= 1");
    const double bound = 3.14159265358979323846 / L;
    std::vector<double> dphi(N);
    for (auto &v : dphi)
        v = stream.uniform(-bound, bound);
    return dphi;
}

ChannelRealization draw_realization(const SystemParams &params, rng::Stream &stream)
{
    ChannelRealization r;
    r.a = steering_bs(params);
    r.b = steering_irs(params);
    r.beta_H = params.beta_H();
    r.beta_B = params.beta_B();
    r.beta_E = params.beta_E();
    const int N = params.N();
    r.h_B_hat = sample_user_channel(N, r.beta_B, stream);
    r.h_E_hat = sample_user_channel(N, r.beta_E, stream);
    r.h_B = evolve_channel(r.h_B_hat, params.rho, r.beta_B, stream);
    r.h_E = evolve_channel(r.h_E_hat, params.rho, r.beta_E, stream);
    r.delta_phi = sample_phase_errors(N, params.L, stream);
    return r;
}

} // namespace irssec

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

#include "irssec/transceiver.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

namespace irssec
{

namespace
{
using cplx = std::complex<double>;

// sum_{n in S} conj(h_n) e^{-j(phi_n + dphi_n)} b_n. `dphi` may be null
// (error-free phases, used by the beamformer).
cplx reflected_sum(const cvec &h, const IrsConfig &irs, const cvec &b,
                   const std::vector<double> *dphi)
{
    cplx s = 0.0;
    for (int n : irs.selection) {
        double phase = irs.phases[static_cast<std::size_t>(n)];
        if (dphi)
            phase += (*dphi)[static_cast<std::size_t>(n)];
        s += std::conj(h[static_cast<std::size_t>(n)]) * std::polar(1.0, -phase) *
             b[static_cast<std::size_t>(n)];
    }
    return s;
}

void check_irs(const IrsConfig &irs, std::size_t N)
{
    if (irs.phases.size() != N)
        throw std::invalid_argument("IrsConfig: phases length does not match N");
    for (int n : irs.selection)
        if (n < 0 || static_cast<std::size_t>(n) >= N)
            throw std::invalid_argument("IrsConfig: selection index out of range");
}
} // namespace

Scenario Scenario::from_index(int idx)
{
    switch (idx) {
    case 1:
        return {Csi::Outdated, Csi::Outdated};
    case 2:
        return {Csi::Perfect, Csi::Perfect};
    case 3:
        return {Csi::Outdated, Csi::Perfect};
    default:
        throw std::invalid_argument("Scenario: index must be 1, 2 or 3");
    }
}

int Scenario::index() const
{
    if (bob == Csi::Outdated && eve == Csi::Outdated)
        return 1;
    if (bob == Csi::Perfect && eve == Csi::Perfect)
        return 2;
    if (bob == Csi::Outdated && eve == Csi::Perfect)
        return 3;
    return 0;
}

std::vector<double> irs_optimal_phases(const cvec &h_hat, const cvec &b)
{
    if (h_hat.size() != b.size())
        throw std::invalid_argument("irs_optimal_phases: length mismatch");
    std::vector<double> phi(h_hat.size());
    for (std::size_t n = 0; n < h_hat.size(); ++n) {
        const cplx x = (h_hat[n] == cplx(0.0)) ? b[n] : std::conj(h_hat[n]) * b[n];
        phi[n] = std::arg(x);
    }
    return phi;
}

std::vector<int> ess_select(const cvec &h_hat, int K)
{
    const int N = static_cast<int>(h_hat.size());
    if (K < 1 || K > N)
        throw std::invalid_argument("ess_select: K must lie in [1, N]");
    std::vector<int> idx(static_cast<std::size_t>(N));
    std::iota(idx.begin(), idx.end(), 0);
    // stable partial sort by descending magnitude; equal magnitudes keep
    // ascending index order
    std::stable_sort(idx.begin(), idx.end(), [&h_hat](int i, int j) {
        return std::norm(h_hat[static_cast<std::size_t>(i)]) >
               std::norm(h_hat[static_cast<std::size_t>(j)]);
    });
    idx.resize(static_cast<std::size_t>(K));
    return idx;
}

std::vector<int> full_selection(int N)
{
    std::vector<int> idx(static_cast<std::size_t>(N));
    std::iota(idx.begin(), idx.end(), 0);
    return idx;
}

cvec mrt_beamformer(const ChannelRealization &r, const IrsConfig &irs)
{
    check_irs(irs, r.b.size());
    // c = sum_S conj(b_n) e^{+j phi_n} h_hat_{B,n} = conj(reflected sum with
    // error-free phases)
    const cplx c = std::conj(reflected_sum(r.h_B_hat, irs, r.b, nullptr));
    const double mag = std::abs(c);
    if (mag == 0.0)
        throw std::domain_error("mrt_beamformer: projected channel is zero");
    const int M = static_cast<int>(r.a.size());
    const cplx scale = c / (std::sqrt(static_cast<double>(M)) * mag);
    cvec w(r.a.size());
    for (std::size_t m = 0; m < w.size(); ++m)
        w[m] = r.a[m] * scale;
    return w;
}

double instant_snr_bob(const ChannelRealization &r, const IrsConfig &irs,
                       const SystemParams &params, Csi bob_csi)
{
    check_irs(irs, r.b.size());
    const double MbH = params.M * r.beta_H;
    if (bob_csi == Csi::Outdated) {
        const double s2 = outdated_noise_var(params, irs.K(), r.beta_B, params.sigma2_B);
        const cplx t = reflected_sum(r.h_B_hat, irs, r.b, &r.delta_phi);
        return params.P / s2 * MbH * params.rho * params.rho * std::norm(t);
    }
    const cplx t = reflected_sum(r.h_B, irs, r.b, &r.delta_phi);
    return params.P / params.sigma2_B * MbH * std::norm(t);
}

double instant_snr_eve(const ChannelRealization &r, const IrsConfig &irs,
                       const SystemParams &params, Csi eve_csi)
{
    check_irs(irs, r.b.size());
    const double MbH = params.M * r.beta_H;
    if (eve_csi == Csi::Outdated) {
        const double s2 = outdated_noise_var(params, irs.K(), r.beta_E, params.sigma2_E);
        const cplx t = reflected_sum(r.h_E_hat, irs, r.b, &r.delta_phi);
        return params.P / s2 * MbH * params.rho * params.rho * std::norm(t);
    }
    const cplx t = reflected_sum(r.h_E, irs, r.b, &r.delta_phi);
    return params.P / params.sigma2_E * MbH * std::norm(t);
}

namespace
{

// |(H Phi~ h)^H w|^2 evaluated with the dense cascade matrix
// H = sqrt(beta_H) a b^H and the diagonal phase matrix with off elements
// zeroed. Deliberately brute force.
double dense_received_power(const ChannelRealization &r, const IrsConfig &irs,
                            const cvec &h)
{
    const std::size_t M = r.a.size();
    const std::size_t N = r.b.size();
    // diag entries: e^{+j(phi_n + dphi_n)} on selected elements, else 0
    cvec diag(N, cplx(0.0));
    for (int n : irs.selection) {
        const auto k = static_cast<std::size_t>(n);
        diag[k] = std::polar(1.0, irs.phases[k] + r.delta_phi[k]);
    }
    // dense H, row m, column n
    std::vector<cvec> H(M, cvec(N));
    const double sb = std::sqrt(r.beta_H);
    for (std::size_t m = 0; m < M; ++m)
        for (std::size_t n = 0; n < N; ++n)
            H[m][n] = sb * r.a[m] * std::conj(r.b[n]);
    // g = H Phi~ h
    cvec g(M, cplx(0.0));
    for (std::size_t m = 0; m < M; ++m)
        for (std::size_t n = 0; n < N; ++n)
            g[m] += H[m][n] * diag[n] * h[n];
    const cvec w = mrt_beamformer(r, irs);
    cplx amp = 0.0;
    for (std::size_t m = 0; m < M; ++m)
        amp += std::conj(g[m]) * w[m];
    return std::norm(amp);
}

} // namespace

double instant_snr_bob_dense(const ChannelRealization &r, const IrsConfig &irs,
                             const SystemParams &params, Csi bob_csi)
{
    check_irs(irs, r.b.size());
    if (bob_csi == Csi::Outdated) {
        const double s2 = outdated_noise_var(params, irs.K(), r.beta_B, params.sigma2_B);
        return params.P / s2 * params.rho * params.rho *
               dense_received_power(r, irs, r.h_B_hat);
    }
    return params.P / params.sigma2_B * dense_received_power(r, irs, r.h_B);
}

double instant_snr_eve_dense(const ChannelRealization &r, const IrsConfig &irs,
                             const SystemParams &params, Csi eve_csi)
{
    check_irs(irs, r.b.size());
    if (eve_csi == Csi::Outdated) {
        const double s2 = outdated_noise_var(params, irs.K(), r.beta_E, params.sigma2_E);
        return params.P / s2 * params.rho * params.rho *
               dense_received_power(r, irs, r.h_E_hat);
    }
    return params.P / params.sigma2_E * dense_received_power(r, irs, r.h_E);
}

double secrecy_capacity(double gamma_B, double gamma_E)
{
    if (gamma_B < 0.0 || gamma_E < 0.0)
        throw std::invalid_argument("secrecy_capacity: SNRs must be nonnegative");
    const double cs = std::log2(1.0 + gamma_B) - std::log2(1.0 + gamma_E);
    return cs > 0.0 ? cs : 0.0;
}

} // namespace irssec

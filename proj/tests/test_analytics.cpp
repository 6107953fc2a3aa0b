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
// Closed-form layer: moment identities, order statistics against frozen
// high-precision references, outage probability in its three flavors, and
// the optimal-subset scan. Monte-Carlo agreement lives in the acceptance
// harness; everything here is deterministic.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "irssec/analytics.hpp"
#include "irssec/errors.hpp"
#include "irssec/specfun.hpp"

using namespace irssec;
using specfun::phase_error_char;
using specfun::regularized_lower_gamma;

namespace
{

// shorthand used throughout: quantization moments at the default L = 4
double mu1() { return phase_error_char(1, 4); }
double mu2() { return phase_error_char(2, 4); }

} // namespace

TEST_CASE("ess_order_stats: frozen high-precision references")
{
    const OrderStats a = ess_order_stats(100, 25, 1.0);
    CHECK(a.mu_bar == doctest::Approx(1.5173346504729089).epsilon(1e-12));
    CHECK(a.beta_bar == doctest::Approx(0.0097697699279335027).epsilon(1e-12));
    CHECK(a.threshold == doctest::Approx(std::sqrt(-std::log(0.25))).epsilon(1e-12));

    const OrderStats b = ess_order_stats(100, 20, 1.0);
    CHECK(b.mu_bar == doctest::Approx(1.5911945096514836).epsilon(1e-12));
    CHECK(b.beta_bar == doctest::Approx(0.011431514092153411).epsilon(1e-12));

    // K = N: no truncation, the mean of a Rayleigh magnitude
    const double beta = 0.37;
    const OrderStats full = ess_order_stats(100, 100, beta);
    CHECK(full.mu_bar ==
          doctest::Approx(0.88622692545275801 * std::sqrt(beta)).epsilon(1e-12));
    CHECK(full.threshold == 0.0);

    // scale equivariance: mu_bar ~ sqrt(beta), beta_bar ~ beta
    const OrderStats s1 = ess_order_stats(64, 16, 1.0);
    const OrderStats s2 = ess_order_stats(64, 16, 4.0);
    CHECK(s2.mu_bar == doctest::Approx(2.0 * s1.mu_bar).epsilon(1e-12));
    CHECK(s2.beta_bar == doctest::Approx(4.0 * s1.beta_bar).epsilon(1e-12));

    CHECK_THROWS_AS(ess_order_stats(100, 0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ess_order_stats(100, 101, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ess_order_stats(100, 5, 0.0), std::invalid_argument);
}

TEST_CASE("bob_appendix_moments: full-array identities")
{
    SystemParams p;
    const int N = p.N();
    const double beta = p.beta_B();
    const BobMoments m = bob_appendix_moments(p, N, std::nullopt, Csi::Outdated);

    // second-moment identity: E[u^2 + v^2] = N beta (1 + (pi/4) mu1^2 (N-1))
    const double second = m.m_u * m.m_u + m.delta_u2 + m.delta_v2;
    const double want = N * beta * (1.0 + M_PI / 4 * mu1() * mu1() * (N - 1));
    CHECK(second == doctest::Approx(want).epsilon(1e-12));

    // quadrature variance never sees the in-phase offset
    CHECK(m.delta_v2 ==
          doctest::Approx(0.5 * N * beta * (1.0 - mu2())).epsilon(1e-12));
    CHECK(m.m_u == doctest::Approx(0.5 * N * std::sqrt(M_PI * beta) * mu1()).epsilon(1e-12));

    // no quantization error: the quadrature component vanishes
    SystemParams q = p;
    q.L = 1000000000;
    const BobMoments mq = bob_appendix_moments(q, N, std::nullopt, Csi::Outdated);
    CHECK(std::abs(mq.delta_v2) < 1e-12 * N * beta);
    CHECK(mq.delta_u2 ==
          doctest::Approx(0.5 * N * beta * (2.0 - M_PI / 2)).epsilon(1e-9));
}

TEST_CASE("bob_appendix_moments: perfect CSI is the aged outdated law")
{
    SystemParams p;
    const int N = p.N();
    const double beta = p.beta_B();
    const BobMoments hat = bob_appendix_moments(p, N, std::nullopt, Csi::Outdated);
    const BobMoments til = bob_appendix_moments(p, N, std::nullopt, Csi::Perfect);
    const double r2 = p.rho * p.rho;
    CHECK(til.m_u == doctest::Approx(p.rho * hat.m_u).epsilon(1e-12));
    CHECK(til.delta_u2 ==
          doctest::Approx(r2 * hat.delta_u2 + 0.5 * N * (1 - r2) * beta).epsilon(1e-12));
    CHECK(til.delta_v2 ==
          doctest::Approx(r2 * hat.delta_v2 + 0.5 * N * (1 - r2) * beta).epsilon(1e-12));

    // rho = 1: identical, bit for bit
    SystemParams one = p;
    one.rho = 1.0;
    const BobMoments h1 = bob_appendix_moments(one, N, std::nullopt, Csi::Outdated);
    const BobMoments t1 = bob_appendix_moments(one, N, std::nullopt, Csi::Perfect);
    CHECK(h1.m_u == t1.m_u);
    CHECK(h1.delta_u2 == t1.delta_u2);
    CHECK(h1.delta_v2 == t1.delta_v2);
}

TEST_CASE("bob_appendix_moments: subset variant against its printed forms")
{
    SystemParams p;
    const int K = 20;
    const OrderStats os = ess_order_stats(p.N(), K, p.beta_B());
    const BobMoments m = bob_appendix_moments(p, K, os, Csi::Outdated);
    const double s2 = os.mu_bar * os.mu_bar + os.beta_bar;
    CHECK(m.m_u == doctest::Approx(K * mu1() * os.mu_bar).epsilon(1e-12));
    CHECK(m.delta_u2 ==
          doctest::Approx(K * s2 * (0.5 * (1 + mu2()) - mu1() * mu1()) +
                          double(K) * K * mu1() * mu1() * os.beta_bar)
              .epsilon(1e-12));
    CHECK(m.delta_v2 == doctest::Approx(K * s2 * 0.5 * (1 - mu2())).epsilon(1e-12));
}

TEST_CASE("bob_snr_params: frozen moment-matched fits at the default point")
{
    SystemParams p;
    const GammaParams hat = bob_snr_params(p, Csi::Outdated);
    CHECK(hat.shape == doctest::Approx(88.347631159106072).epsilon(1e-10));
    CHECK(hat.scale == doctest::Approx(1.1892692728778556).epsilon(1e-10));
    CHECK(hat.mean() == doctest::Approx(105.06912306907104).epsilon(1e-10));

    const GammaParams til = bob_snr_params(p, Csi::Perfect);
    CHECK(til.shape == doctest::Approx(53.984864082905759).epsilon(1e-10));
    CHECK(til.scale == doctest::Approx(3.1759449240484288).epsilon(1e-10));
    CHECK(til.mean() == doctest::Approx(171.45295505954888).epsilon(1e-10));

    // mean identity on an independent algebraic path
    const int N = p.N();
    const double sig = p.sigma2_B +
                       p.P * p.M * N * p.beta_H() * (1 - p.rho * p.rho) * p.beta_B();
    const double want = p.P / sig * p.M * p.beta_H() * p.rho * p.rho *
                        (N * p.beta_B() +
                         double(N) * (N - 1) * M_PI / 4 * p.beta_B() * mu1() * mu1());
    CHECK(hat.mean() == doctest::Approx(want).epsilon(1e-12));

    CHECK(hat.variance() == doctest::Approx(hat.shape * hat.scale * hat.scale).epsilon(1e-14));
    SystemParams dead = p;
    dead.rho = 0.0;
    CHECK_THROWS_AS(bob_snr_params(dead, Csi::Outdated), std::domain_error);
}

TEST_CASE("bob_snr_params: subset-size routing")
{
    SystemParams p;
    // absent and K = N both take the moment-matched route
    const GammaParams a = bob_snr_params(p, Csi::Outdated);
    const GammaParams b = bob_snr_params(p, Csi::Outdated, p.N());
    CHECK(a.shape == b.shape);
    CHECK(a.scale == b.scale);
    // K < N takes the order-statistics route
    const GammaParams c = bob_snr_params(p, Csi::Outdated, 20);
    const GammaParams d = bob_snr_params_order_stats(p, Csi::Outdated, 20);
    CHECK(c.shape == d.shape);
    CHECK(c.scale == d.scale);
    CHECK(c.shape != a.shape);
    CHECK_THROWS_AS(bob_snr_params(p, Csi::Outdated, 0), std::invalid_argument);
    CHECK_THROWS_AS(bob_snr_params(p, Csi::Outdated, 101), std::invalid_argument);
}

TEST_CASE("bob_snr_params_order_stats: frozen fits and printed-form cross-checks")
{
    SystemParams p;
    const int K = 20;
    const GammaParams hat = bob_snr_params_order_stats(p, Csi::Outdated, K);
    CHECK(hat.shape == doctest::Approx(50.053878292025992).epsilon(1e-11));
    CHECK(hat.mean() == doctest::Approx(19.782664847700104).epsilon(1e-10));

    const GammaParams til = bob_snr_params_order_stats(p, Csi::Perfect, K);
    CHECK(til.shape == doctest::Approx(31.838928614235254).epsilon(1e-10));
    CHECK(til.mean() == doctest::Approx(24.286646984450538).epsilon(1e-10));

    // direct evaluation of the printed shapes and means
    const OrderStats os = ess_order_stats(p.N(), K, p.beta_B());
    const double s2 = os.mu_bar * os.mu_bar + os.beta_bar;
    const double m1 = mu1(), m2 = mu2();
    const double shape_hat =
        K * m1 * m1 * os.mu_bar * os.mu_bar /
        (2 * s2 * (1 + m2 - 2 * m1 * m1) + 4 * K * os.beta_bar * m1 * m1);
    CHECK(hat.shape == doctest::Approx(shape_hat).epsilon(1e-12));

    const double r2 = p.rho * p.rho;
    const double shape_til =
        r2 * K * m1 * m1 * os.mu_bar * os.mu_bar /
        (2 * r2 * s2 * (1 + m2 - 2 * m1 * m1) + 4 * r2 * K * os.beta_bar * m1 * m1 +
         2 * (1 - r2) * p.beta_B());
    CHECK(til.shape == doctest::Approx(shape_til).epsilon(1e-12));

    const double sig_hat = p.sigma2_B +
                           p.P * p.M * K * p.beta_H() * (1 - r2) * p.beta_B();
    const double mean_hat = p.P * p.M * p.beta_H() * r2 * K * s2 *
                            (1 - m1 * m1 + K * m1 * m1) / sig_hat;
    CHECK(hat.mean() == doctest::Approx(mean_hat).epsilon(1e-12));
    const double mean_til = p.P * p.M * p.beta_H() * r2 * K / p.sigma2_B *
                            (s2 * (1 - m1 * m1 + K * m1 * m1) +
                             K * (1 - r2) * p.beta_B());
    CHECK(til.mean() == doctest::Approx(mean_til).epsilon(1e-12));
}

TEST_CASE("bob_snr_params: the two derivations meet at K = N")
{
    // tracked reconciliation: the order-statistics fit at K = N stays within
    // 2% of the moment-matched mean for N >= 64
    for (int side : {8, 10, 12}) {
        SystemParams p;
        p.N_H = side;
        p.N_V = side;
        const GammaParams l1 = bob_snr_params(p, Csi::Outdated);
        const GammaParams os = bob_snr_params_order_stats(p, Csi::Outdated, p.N());
        CHECK(std::abs(os.mean() - l1.mean()) / l1.mean() < 0.02);
    }
}

TEST_CASE("analytic fits: rho = 1 erases the outdated/perfect distinction")
{
    SystemParams p;
    p.rho = 1.0;
    const GammaParams a = bob_snr_params(p, Csi::Outdated);
    const GammaParams b = bob_snr_params(p, Csi::Perfect);
    CHECK(a.shape == b.shape);
    CHECK(a.scale == b.scale);
    // the subset route reaches the same numbers through a different division
    // order, so equality here is up to rounding
    const GammaParams c = bob_snr_params_order_stats(p, Csi::Outdated, 30);
    const GammaParams d = bob_snr_params_order_stats(p, Csi::Perfect, 30);
    CHECK(c.shape == doctest::Approx(d.shape).epsilon(1e-14));
    CHECK(c.scale == doctest::Approx(d.scale).epsilon(1e-14));
    CHECK(eve_snr_params(p, Csi::Outdated).mean ==
          doctest::Approx(eve_snr_params(p, Csi::Perfect).mean).epsilon(1e-14));
}

TEST_CASE("eve_snr_params: frozen references and subset scaling")
{
    SystemParams p;
    CHECK(eve_snr_params(p, Csi::Outdated).mean ==
          doctest::Approx(1.6410548449886919).epsilon(1e-10));
    CHECK(eve_snr_params(p, Csi::Perfect).mean ==
          doctest::Approx(3.2939707552408977).epsilon(1e-10));
    CHECK(eve_snr_params(p, Csi::Outdated, 20).mean ==
          doctest::Approx(0.47425974819341837).epsilon(1e-10));
    CHECK(eve_snr_params(p, Csi::Perfect, 20).mean ==
          doctest::Approx(0.65879415104817962).epsilon(1e-10));
    // perfect CSI: the mean is exactly linear in the subset size
    CHECK(eve_snr_params(p, Csi::Perfect, 25).mean ==
          doctest::Approx(0.25 * eve_snr_params(p, Csi::Perfect).mean).epsilon(1e-12));
    CHECK_THROWS_AS(eve_snr_params(p, Csi::Perfect, 0), std::invalid_argument);
}

TEST_CASE("sop_exact: unit-shape closed form")
{
    // kappa = 1: SOP = 1 - omega/(omega + 2^Rs lambda) e^{-(2^Rs - 1)/omega}
    for (double omega : {0.5, 2.0, 100.0}) {
        for (double lambda : {0.3, 1.0, 30.0}) {
            for (double Rs : {0.0, 1.0, 3.0}) {
                const double g = std::pow(2.0, Rs);
                const double want =
                    1.0 - omega / (omega + g * lambda) * std::exp(-(g - 1.0) / omega);
                const double got = sop_exact({1.0, omega}, {lambda}, Rs);
                CHECK(got == doctest::Approx(want).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("sop_exact: frozen reference, degenerate limits, range")
{
    CHECK(std::abs(sop_exact({2.5, 1e4}, {1e3}, 3.0) - 0.1318025196) < 1e-8);
    // eavesdropper vanishes: the gamma CDF at the fixed threshold remains
    CHECK(std::abs(sop_exact({2.5, 1.0}, {1e-12}, 1.0) -
                   regularized_lower_gamma(2.5, 1.0)) < 1e-9);
    // boundary-layer stress: tiny omega/lambda ratios stay inside [0, 1]
    for (double kappa : {0.5, 1.0, 7.0})
        for (double omega : {1e-2, 1.0, 1e4})
            for (double lambda : {1e-2, 1.0, 1e4}) {
                const double v = sop_exact({kappa, omega}, {lambda}, 4.0);
                CHECK(v >= 0.0);
                CHECK(v <= 1.0);
            }
}

TEST_CASE("sop_exact: monotone in every argument")
{
    double prev = -1.0;
    for (double Rs : {0.5, 1.0, 2.0, 3.0, 4.0}) {
        const double v = sop_exact({2.5, 50.0}, {2.0}, Rs);
        CHECK(v > prev);
        prev = v;
    }
    prev = -1.0;
    for (double lambda : {0.1, 1.0, 10.0, 100.0}) {
        const double v = sop_exact({2.5, 50.0}, {lambda}, 3.0);
        CHECK(v > prev);
        prev = v;
    }
    prev = 2.0;
    for (double omega : {1.0, 10.0, 100.0, 1000.0}) {
        const double v = sop_exact({2.5, omega}, {2.0}, 3.0);
        CHECK(v < prev);
        prev = v;
    }
    prev = 2.0;
    for (double kappa : {0.5, 1.0, 2.0, 5.0}) {
        const double v = sop_exact({kappa, 50.0}, {2.0}, 3.0);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("sop_exact: argument validation")
{
    CHECK_THROWS_AS(sop_exact({0.0, 1.0}, {1.0}, 3.0), std::invalid_argument);
    CHECK_THROWS_AS(sop_exact({1.0, 0.0}, {1.0}, 3.0), std::invalid_argument);
    CHECK_THROWS_AS(sop_exact({1.0, 1.0}, {0.0}, 3.0), std::invalid_argument);
    CHECK_THROWS_AS(sop_exact({1.0, 1.0}, {1.0}, -0.5), std::invalid_argument);
}

TEST_CASE("sop_lower_bound: closed form, frozen reference, bound property")
{
    CHECK(std::abs(sop_lower_bound({2.5, 1e4}, {1e3}, 3.0) - 0.1316872428) < 1e-8);
    CHECK(sop_lower_bound({3.0, 10.0}, {2.0}, 1.0) ==
          doctest::Approx(std::pow(2.0 / (10.0 / 2.0 + 2.0), 3.0)).epsilon(1e-12));
    // Rs = 0, kappa = 1: bound and exact integral coincide
    CHECK(std::abs(sop_lower_bound({1.0, 3.0}, {2.0}, 0.0) -
                   sop_exact({1.0, 3.0}, {2.0}, 0.0)) < 1e-9);
    // dominant eavesdropper: the bound saturates at 1
    CHECK(sop_lower_bound({2.0, 1.0}, {1e12}, 1.0) == doctest::Approx(1.0).epsilon(1e-9));

    for (double kappa : {0.5, 2.0, 10.0, 50.0})
        for (double ratio : {1.0, 10.0, 316.0, 1e4})
            for (double Rs : {1.0, 3.0, 4.0}) {
                const double lb = sop_lower_bound({kappa, ratio}, {1.0}, Rs);
                const double ex = sop_exact({kappa, ratio}, {1.0}, Rs);
                CHECK(lb <= ex + 1e-9);
            }
}

TEST_CASE("sop_series_meijerg: agrees with the integral at the default operating point")
{
    SystemParams p;
    const GammaParams bob = bob_snr_params(p, Csi::Outdated);
    const ExpParams eve = eve_snr_params(p, Csi::Perfect);
    const SeriesResult r = sop_series_meijerg(bob, eve, p.Rs);
    REQUIRE(r.status == SeriesStatus::Converged);
    CHECK(r.terms <= 25);
    CHECK(std::abs(r.value - sop_exact(bob, eve, p.Rs)) < 1e-4);

    // Rs = 0: the threshold factor collapses to one effective term, and
    // Pr(gamma_B <= gamma_E) = (1 + omega/lambda)^-kappa exactly, which the
    // series, the bound, and the integral must all reproduce (moderate shape;
    // large shapes cancel catastrophically on the contour at this z)
    const GammaParams mod{2.5, 1.0};
    const ExpParams unit{1.0};
    const double closed = std::pow(2.0, -2.5);
    const SeriesResult r0 = sop_series_meijerg(mod, unit, 0.0);
    REQUIRE(r0.status == SeriesStatus::Converged);
    CHECK(r0.terms <= 3);
    CHECK(std::abs(r0.value - closed) < 1e-6);
    CHECK(std::abs(sop_exact(mod, unit, 0.0) - closed) < 1e-6);
    CHECK(std::abs(sop_lower_bound(mod, unit, 0.0) - closed) < 1e-12);
}

TEST_CASE("sop_series_meijerg: misbehaving regimes are flagged, not returned")
{
    SystemParams p;
    // small-subset regime: the series settles on a value above 1
    const GammaParams bob = bob_snr_params_order_stats(p, Csi::Outdated, 10);
    const ExpParams eve = eve_snr_params(p, Csi::Perfect, 10);
    const SeriesResult r = sop_series_meijerg(bob, eve, p.Rs);
    CHECK(r.status == SeriesStatus::InvalidValue);
    CHECK(r.status != SeriesStatus::Converged);

    // starved term budget
    const GammaParams bob_full = bob_snr_params(p, Csi::Outdated);
    const ExpParams eve_full = eve_snr_params(p, Csi::Perfect);
    const SeriesResult starved = sop_series_meijerg(bob_full, eve_full, p.Rs, 2);
    CHECK(starved.status == SeriesStatus::NotConverged);

    CHECK(std::string(to_string(SeriesStatus::Converged)) == "converged");
    CHECK(std::string(to_string(SeriesStatus::NotConverged)) == "not-converged");
    CHECK(std::string(to_string(SeriesStatus::InvalidValue)) == "invalid-value");
}

TEST_CASE("optimal_k: frozen scan results at the default operating point")
{
    SystemParams p;
    const Scenario s3 = Scenario::from_index(3);
    const OptimalK ex = optimal_k(p, s3, OptimalKMethod::Exact);
    CHECK(ex.K_opt == 62);
    CHECK(ex.sop == doctest::Approx(0.0128403193897).epsilon(1e-6));
    const OptimalK lb = optimal_k(p, s3, OptimalKMethod::LowerBound);
    CHECK(lb.K_opt == 56);
    CHECK(lb.sop == doctest::Approx(0.00818052276307).epsilon(1e-6));

    const OptimalK ex1 = optimal_k(p, Scenario::from_index(1), OptimalKMethod::Exact);
    CHECK(ex1.K_opt == 77);
    const OptimalK lb1 = optimal_k(p, Scenario::from_index(1), OptimalKMethod::LowerBound);
    CHECK(lb1.K_opt == 74);
    const OptimalK ex2 = optimal_k(p, Scenario::from_index(2), OptimalKMethod::Exact);
    CHECK(ex2.K_opt == 87);
    const OptimalK lb2 = optimal_k(p, Scenario::from_index(2), OptimalKMethod::LowerBound);
    CHECK(lb2.K_opt == 85);
}

TEST_CASE("optimal_k: switching off elements only pays when it hurts someone")
{
    // negligible eavesdropper, no channel aging, no quantization: every
    // element helps the legitimate user and the full surface wins
    SystemParams p;
    p.rho = 1.0;
    p.L = 1000000;
    p.sigma2_E = 1e-3;
    const OptimalK k = optimal_k(p, Scenario::from_index(3), OptimalKMethod::Exact);
    CHECK(k.K_opt == p.N());
}

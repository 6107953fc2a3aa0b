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
// Scalar special functions against reference values computed with 30-digit
// arbitrary-precision arithmetic and frozen here as decimal literals.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "irssec/specfun.hpp"

using namespace irssec::specfun;

TEST_CASE("si: removable singularity, reference points, evenness")
{
    CHECK(si(0.0) == 1.0);
    CHECK(si(M_PI / 4) == doctest::Approx(0.90031631615710607).epsilon(1e-14));
    CHECK(si(M_PI / 2) == doctest::Approx(0.63661977236758134).epsilon(1e-14));
    CHECK(std::abs(si(M_PI)) < 1e-15);
    CHECK(si(-1.3) == si(1.3));
    // tiny arguments must not lose precision to cancellation
    CHECK(si(1e-9) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("phase_error_char: si(p pi / L) with integer arguments")
{
    CHECK(phase_error_char(0, 4) == 1.0);
    CHECK(phase_error_char(1, 4) == doctest::Approx(0.90031631615710607).epsilon(1e-14));
    CHECK(phase_error_char(2, 4) == doctest::Approx(0.63661977236758134).epsilon(1e-14));
    CHECK(std::abs(phase_error_char(3, 1)) < 1e-15); // si(3 pi) = 0
    CHECK(phase_error_char(-2, 4) == phase_error_char(2, 4));
    // no quantization: the characteristic function degenerates to 1
    CHECK(phase_error_char(1, 1000000000) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(phase_error_char(1, 0), std::invalid_argument);
}

TEST_CASE("bessel_j0: reference points across all three evaluation regimes")
{
    CHECK(bessel_j0(0.0) == 1.0);
    // power-series regime
    CHECK(std::abs(bessel_j0(1.0) - 0.76519768655796655) < 1e-13);
    CHECK(std::abs(bessel_j0(2 * M_PI * 0.0473) - 0.97804042860480174) < 1e-13);
    CHECK(std::abs(bessel_j0(2 * M_PI * 0.1) - 0.90371264209246631) < 1e-13);
    CHECK(std::abs(bessel_j0(2.4048255576957728)) < 1e-13); // first zero
    CHECK(std::abs(bessel_j0(8.0) - 0.17165080713755391) < 1e-12);
    // ODE-stepping regime
    CHECK(std::abs(bessel_j0(15.7) - (-0.14007021182904853)) < 1e-12);
    CHECK(std::abs(bessel_j0(55.1) - (-0.066371221537043559)) < 1e-12);
    CHECK(std::abs(bessel_j0(100.0) - 0.019985850304223122) < 1e-12);
    // Hankel regime: continuous across the switchover at 100
    CHECK(std::abs(bessel_j0(100.000001) - 0.019985850304223122) < 1e-6);
    // even function
    CHECK(bessel_j0(-3.7) == bessel_j0(3.7));
}

TEST_CASE("gamma_fn / lgamma_fn: factorials, half-integers, large arguments")
{
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(0.5) == doctest::Approx(1.7724538509055160).epsilon(1e-13));
    CHECK(gamma_fn(1.5) == doctest::Approx(0.88622692545275801).epsilon(1e-13));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-13));
    CHECK(gamma_fn(20.0) == doctest::Approx(1.21645100408832e17).epsilon(1e-12));
    CHECK(lgamma_fn(20.0) == doctest::Approx(std::log(1.21645100408832e17)).epsilon(1e-12));
    CHECK(lgamma_fn(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-13));
    CHECK_THROWS_AS(gamma_fn(0.0), std::invalid_argument);
    CHECK_THROWS_AS(gamma_fn(-1.5), std::invalid_argument);
}

TEST_CASE("incomplete gamma family: reference values and identities")
{
    // Gamma(3/2, ln 4) appears in the K/N = 1/4 selection threshold
    CHECK(upper_incomplete_gamma(1.5, std::log(4.0)) ==
          doctest::Approx(0.37933366261822723).epsilon(1e-12));
    CHECK(upper_incomplete_gamma(1.5, 1.3863) ==
          doctest::Approx(0.37933200280272998).epsilon(1e-12));
    // Gamma(a, 0) = Gamma(a); Gamma(1, x) = e^-x
    CHECK(upper_incomplete_gamma(1.5, 0.0) == doctest::Approx(gamma_fn(1.5)).epsilon(1e-13));
    for (double x : {0.1, 1.0, 5.0, 30.0})
        CHECK(upper_incomplete_gamma(1.0, x) == doctest::Approx(std::exp(-x)).epsilon(1e-12));

    CHECK(regularized_lower_gamma(1.0, 1.0) ==
          doctest::Approx(0.63212055882855768).epsilon(1e-13));
    CHECK(regularized_lower_gamma(3.0, 3.0) ==
          doctest::Approx(0.57680991887315648).epsilon(1e-12));
    CHECK(regularized_lower_gamma(2.5, 0.0) == 0.0);
    CHECK(regularized_lower_gamma(2.5, 1e4) == doctest::Approx(1.0).epsilon(1e-12));

    // P + Q = 1 across both evaluation branches (series and continued fraction)
    for (double x : {0.1, 1.0, 3.0, 3.4999, 3.5001, 10.0, 40.0}) {
        const double p = regularized_lower_gamma(2.5, x);
        const double q = regularized_upper_gamma(2.5, x);
        CHECK(p + q == doctest::Approx(1.0).epsilon(1e-13));
    }
    // Q(a, x) = Gamma(a, x) / Gamma(a)
    CHECK(regularized_upper_gamma(1.5, std::log(4.0)) ==
          doctest::Approx(0.37933366261822723 / 0.88622692545275801).epsilon(1e-12));
    // monotone in x
    double prev = -1.0;
    for (double x = 0.0; x <= 12.0; x += 0.5) {
        const double p = regularized_lower_gamma(4.0, x);
        CHECK(p >= prev);
        prev = p;
    }
    CHECK_THROWS_AS(upper_incomplete_gamma(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(regularized_lower_gamma(1.0, -0.1), std::invalid_argument);
}

TEST_CASE("rayleigh_quantile: reference points and CDF round trip")
{
    CHECK(rayleigh_quantile(0.5, 1.0) == doctest::Approx(0.83255461115769776).epsilon(1e-14));
    CHECK(rayleigh_quantile(0.75, 2.0) == doctest::Approx(1.6651092223153955).epsilon(1e-14));
    CHECK(rayleigh_quantile(0.0, 3.0) == 0.0);
    const double beta = 0.37;
    for (double q : {0.01, 0.5, 0.99}) {
        const double x = rayleigh_quantile(q, beta);
        CHECK(1.0 - std::exp(-x * x / beta) == doctest::Approx(q).epsilon(1e-12));
    }
    CHECK_THROWS_AS(rayleigh_quantile(-0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(rayleigh_quantile(1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(rayleigh_quantile(0.5, 0.0), std::invalid_argument);
}

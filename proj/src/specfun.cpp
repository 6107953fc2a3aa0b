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

#include "irssec/specfun.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

namespace irssec::specfun
{

double si(double x)
{
    if (!std::isfinite(x))
        throw std::invalid_argument("si: argument must be finite");
    double ax = std::fabs(x);
    if (ax < 1e-4) // Taylor: 1 - x^2/6 + x^4/120, remainder < 3e-22
        return 1.0 - x * x / 6.0 + x * x * x * x / 120.0;
    return std::sin(x) / x;
}

double phase_error_char(int p, int L)
{
    if (L < 1)
        throw std::invalid_argument("phase_error_char: L must be >= 1");
    constexpr double pi = 3.14159265358979323846;
    return si(static_cast<double>(p) * pi / static_cast<double>(L));
}

// ---------------------------------------------------------------- bessel_j0

namespace
{

constexpr double pi_const = 3.14159265358979323846;

// Defining series J0(x) = sum_k (-x^2/4)^k / (k!)^2, accurate for |x| <= 8
// (worst-case cancellation there costs ~3 digits, leaving ~1e-14 absolute).
double j0_series(double x)
{
    const double t = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 80; ++k) {
        term *= -t / (static_cast<double>(k) * k);
        sum += term;
        if (std::fabs(term) < 1e-18 * std::fabs(sum) + 1e-300)
            break;
    }
    return sum;
}

// d/dx of the defining series, same validity range.
double j0_series_deriv(double x)
{
    const double t = 0.25 * x * x;
    double u = 1.0, sum = 1.0; // sum_j (-t)^j / ((j+1) (j!)^2), j=0 term = 1
    for (int j = 1; j <= 80; ++j) {
        u *= -t / (static_cast<double>(j) * j);
        const double term = u / (j + 1.0);
        sum += term;
        if (std::fabs(term) < 1e-18 * std::fabs(sum) + 1e-300)
            break;
    }
    return -0.5 * x * sum;
}

// Taylor coefficients of J0 about x = a from (J0(a), J0'(a)), via the Bessel
// ODE  x J'' + J' + x J = 0:
//   c_{m+2} = -[(m+1)^2 c_{m+1} + a c_m + c_{m-1}] / (a (m+2)(m+1)).
constexpr int kAnchorCoeffs = 40;

std::array<double, kAnchorCoeffs> j0_taylor_coeffs(double a, double f, double fp)
{
    std::array<double, kAnchorCoeffs> c{};
    c[0] = f;
    c[1] = fp;
    for (int m = 0; m + 2 < kAnchorCoeffs; ++m) {
        const double prev = (m >= 1) ? c[m - 1] : 0.0;
        c[m + 2] = -((m + 1.0) * (m + 1.0) * c[m + 1] + a * c[m] + prev) /
                   (a * (m + 2.0) * (m + 1.0));
    }
    return c;
}

// Anchor table on x = 8, 10, ..., 100; built once by stepping the ODE Taylor
// expansion (step 2 leaves truncation ~1e-21 with 40 coefficients).
struct J0Anchors
{
    static constexpr int count = 47; // (100 - 8)/2 + 1
    std::array<std::array<double, kAnchorCoeffs>, count> coeffs;

    J0Anchors()
    {
        double a = 8.0;
        double f = j0_series(a);
        double fp = j0_series_deriv(a);
        for (int i = 0; i < count; ++i) {
            coeffs[i] = j0_taylor_coeffs(a, f, fp);
            if (i + 1 == count)
                break;
            const double h = 2.0; // step to the next anchor
            double val = 0.0, der = 0.0;
            for (int k = kAnchorCoeffs - 1; k >= 1; --k) {
                val = val * h + coeffs[i][k];
                der = der * h + coeffs[i][k] * k;
            }
            val = val * h + coeffs[i][0];
            f = val;
            fp = der;
            a += h;
        }
    }
};

// Hankel expansion for x > 100: J0 = sqrt(2/(pi x)) Re[e^{i(x-pi/4)} S],
// S = sum_m i^m a_m / x^m, a_0 = 1, a_{m+1} = -a_m (2m+1)^2 / (8(m+1)).
double j0_asymptotic(double x)
{
    std::complex<double> s(0.0, 0.0);
    double am = 1.0;
    std::complex<double> ipow(1.0, 0.0);
    const std::complex<double> iunit(0.0, 1.0);
    double prev = std::numeric_limits<double>::infinity();
    for (int m = 0; m < 40; ++m) {
        const double mag = std::fabs(am);
        if (mag > prev)
            break; // asymptotic tail started growing
        s += ipow * am;
        if (mag < 1e-18)
            break;
        prev = mag;
        am *= -(2.0 * m + 1.0) * (2.0 * m + 1.0) / (8.0 * (m + 1.0) * x);
        ipow *= iunit;
    }
    const std::complex<double> phase = std::exp(std::complex<double>(0.0, x - 0.25 * pi_const));
    return std::sqrt(2.0 / (pi_const * x)) * (phase * s).real();
}

} // namespace

double bessel_j0(double x)
{
    if (!std::isfinite(x))
        throw std::invalid_argument("bessel_j0: argument must be finite");
    const double ax = std::fabs(x);
    if (ax <= 8.0)
        return j0_series(ax);
    if (ax <= 100.0) {
        static const J0Anchors anchors; // thread-safe magic static
        int idx = static_cast<int>(std::lround((ax - 8.0) / 2.0));
        if (idx < 0)
            idx = 0;
        if (idx >= J0Anchors::count)
            idx = J0Anchors::count - 1;
        const double a = 8.0 + 2.0 * idx;
        const double h = ax - a;
        const auto &c = anchors.coeffs[idx];
        double val = 0.0;
        for (int k = kAnchorCoeffs - 1; k >= 0; --k)
            val = val * h + c[k];
        return val;
    }
    return j0_asymptotic(ax);
}

// ------------------------------------------------------------------- gamma

namespace
{

// Lanczos g = 7, 9 coefficients.
constexpr std::array<double, 9> lanczos = {
    0.99999999999980993,     676.5203681218851,      -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7};

double lanczos_sum(double a)
{
    double s = lanczos[0];
    for (int k = 1; k < 9; ++k)
        s += lanczos[k] / (a - 1.0 + k);
    return s;
}

} // namespace

double lgamma_fn(double a)
{
    if (!(a > 0.0))
        throw std::invalid_argument("lgamma_fn: argument must be positive");
    if (a < 0.5) // reflection; sin(pi a) > 0 on (0, 1)
        return std::log(pi_const / std::sin(pi_const * a)) - lgamma_fn(1.0 - a);
    const double t = a + 6.5; // a + g - 0.5
    return 0.91893853320467274178 /* ln sqrt(2 pi) */
           + (a - 0.5) * std::log(t) - t + std::log(lanczos_sum(a));
}

double gamma_fn(double a)
{
    if (!(a > 0.0))
        throw std::invalid_argument("gamma_fn: argument must be positive");
    if (a > 171.61447887182298) // Gamma overflows double
        return std::numeric_limits<double>::infinity();
    if (a < 0.5)
        return pi_const / (std::sin(pi_const * a) * gamma_fn(1.0 - a));
    const double t = a + 6.5;
    return 2.5066282746310002 /* sqrt(2 pi) */
           * std::pow(t, a - 0.5) * std::exp(-t) * lanczos_sum(a);
}

// ------------------------------------------------------- incomplete gamma

namespace
{

constexpr int kItMax = 500;
constexpr double kEps = 1e-15;
constexpr double kFpMin = 1e-300;

// P(a,x) by series, valid (fast) for x < a+1.
double gamma_p_series(double a, double x)
{
    if (x <= 0.0)
        return 0.0;
    double ap = a, del = 1.0 / a, sum = del;
    for (int i = 0; i < kItMax; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * kEps)
            break;
    }
    return sum * std::exp(-x + a * std::log(x) - lgamma_fn(a));
}

// Q(a,x) by modified Lentz continued fraction, valid (fast) for x >= a+1.
double gamma_q_cf(double a, double x)
{
    double b = x + 1.0 - a;
    double c = 1.0 / kFpMin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kItMax; ++i) {
        const double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kFpMin)
            d = kFpMin;
        c = b + an / c;
        if (std::fabs(c) < kFpMin)
            c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps)
            break;
    }
    return std::exp(-x + a * std::log(x) - lgamma_fn(a)) * h;
}

void check_gamma_args(const char *who, double a, double x)
{
    if (!(a > 0.0))
        throw std::invalid_argument(std::string(who) + ": shape must be positive");
    if (!(x >= 0.0))
        throw std::invalid_argument(std::string(who) + ": argument must be nonnegative");
}

} // namespace

double regularized_lower_gamma(double a, double x)
{
    check_gamma_args("regularized_lower_gamma", a, x);
    if (x == 0.0)
        return 0.0;
    return (x < a + 1.0) ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double regularized_upper_gamma(double a, double x)
{
    check_gamma_args("regularized_upper_gamma", a, x);
    if (x == 0.0)
        return 1.0;
    return (x < a + 1.0) ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double upper_incomplete_gamma(double a, double x)
{
    check_gamma_args("upper_incomplete_gamma", a, x);
    return regularized_upper_gamma(a, x) * gamma_fn(a);
}

double rayleigh_quantile(double q, double beta)
{
    if (!(beta > 0.0))
        throw std::invalid_argument("rayleigh_quantile: beta must be positive");
    if (!(q >= 0.0) || q >= 1.0)
        throw std::invalid_argument("rayleigh_quantile: q must lie in [0, 1)");
    return std::sqrt(-beta * std::log1p(-q));
}

} // namespace irssec::specfun

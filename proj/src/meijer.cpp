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

#include "irssec/meijer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "irssec/errors.hpp"
#include "irssec/specfun.hpp"

namespace irssec::meijer
{

namespace
{
using cplx = std::complex<double>;

constexpr double pi = 3.14159265358979323846;

// Lanczos g = 7, 9 coefficients (same set as the real-valued gamma).
constexpr double lanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};
} // namespace

cplx clgamma(cplx x)
{
    // shift left-half arguments up until Lanczos applies; the product logs
    // pick up branch offsets of 2*pi*i which callers never observe
    cplx shift = 0.0;
    while (x.real() < 0.5) {
        if (x == cplx(0.0) || (x.imag() == 0.0 && x.real() == std::floor(x.real())))
            return {std::numeric_limits<double>::infinity(), 0.0}; // pole
        shift += std::log(x);
        x += 1.0;
    }
    cplx acc = lanczos[0];
    for (int k = 1; k < 9; ++k)
        acc += lanczos[k] / (x - 1.0 + static_cast<double>(k));
    const cplx t = x + 6.5;
    return 0.91893853320467274178 /* ln sqrt(2 pi) */
           + (x - 0.5) * std::log(t) - t + std::log(acc) - shift;
}

double theorem_series_g_term(double kappa, double z, int p)
{
    if (!(kappa > 0.0))
        throw std::invalid_argument("theorem_series_g_term: kappa must be positive");
    if (!(z > 0.0))
        throw std::invalid_argument("theorem_series_g_term: z must be positive");
    if (p < 0)
        throw std::invalid_argument("theorem_series_g_term: p must be nonnegative");

    // No pole collision exists for this parameter set after cancellation, but
    // an integer kappa sits closest to one; nudge as a belt-and-braces guard.
    double k = kappa;
    if (std::abs(k - std::round(k)) < 1e-9)
        k += 1e-9;

    const double c = p - std::min(k, 1.0) / 2.0;
    const double lnz = std::log(z);
    const double lgk = specfun::lgamma_fn(k);
    const double a_right = p - c;     // Re of Gamma(p - s) argument, in (0, 1/2]
    const double a_left = k - p + c;  // Re of Gamma(kappa - p + s) argument, > 0

    const auto f = [&](double y) {
        const cplx e = clgamma(cplx(a_right, -y)) + clgamma(cplx(a_left, y)) - lgk +
                       cplx(c, y) * lnz;
        return std::exp(e.real()) * std::cos(e.imag());
    };

    const auto trapezoid = [&](double h) {
        double peak = std::abs(f(0.0));
        double sum = 0.5 * f(0.0);
        int quiet = 0;
        for (long i = 1; i < 4000000L; ++i) {
            const double v = f(static_cast<double>(i) * h);
            const double mag = std::abs(v);
            sum += v;
            peak = std::max(peak, mag);
            // the integrand oscillates, so a single small sample may be a
            // cosine zero; require a quiet run before cutting the tail
            if (mag < 1e-18 * std::max(peak, 1e-300)) {
                if (++quiet >= 4)
                    return sum * h;
            } else {
                quiet = 0;
            }
        }
        throw numerical_error("theorem_series_g_term: contour tail does not decay");
    };

    double h = 0.25;
    double prev = trapezoid(h);
    for (int iter = 0; iter < 14; ++iter) {
        h *= 0.5;
        const double cur = trapezoid(h);
        if (std::abs(cur - prev) <= 1e-10 * std::max(std::abs(cur), 1e-30)) {
            const double sign = (p % 2 == 0) ? 1.0 : -1.0;
            return sign * cur / pi;
        }
        prev = cur;
    }
    throw numerical_error("theorem_series_g_term: step refinement did not settle");
}

} // namespace irssec::meijer

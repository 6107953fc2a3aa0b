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

#ifndef IRSSEC_SPECFUN_HPP
#define IRSSEC_SPECFUN_HPP

// Self-contained scalar special functions and distribution primitives.
// All functions are pure and safe to call concurrently.

namespace irssec::specfun
{

// sin(x)/x with the removable singularity filled: si(0) = 1. Even in x.
double si(double x);

// Characteristic function of a uniform phase error on [-pi/L, pi/L]:
// mu_p = si(p*pi/L). Even in p; mu_0 = 1. Throws std::invalid_argument for L < 1.
double phase_error_char(int p, int L);

// Bessel function of the first kind, order zero. Absolute accuracy better than
// 1e-12 on |x| <= 100. Switchover: defining power series for |x| <= 8,
// Taylor stepping along the Bessel ODE on anchor points 8,10,...,100, and the
// Hankel large-argument expansion beyond 100.
double bessel_j0(double x);

// Gamma function for a > 0 (Lanczos approximation, relative error <~ 1e-13).
// Throws std::invalid_argument for a <= 0.
double gamma_fn(double a);

// ln Gamma(a) for a > 0.
double lgamma_fn(double a);

// Non-regularized upper incomplete gamma Gamma(a, x) = int_x^inf t^(a-1)e^-t dt,
// a > 0, x >= 0. Series for x < a+1, continued fraction otherwise.
double upper_incomplete_gamma(double a, double x);

// Regularized lower incomplete gamma P(a, x) = 1 - Gamma(a,x)/Gamma(a).
// The CDF of the Gamma(shape a, scale 1) law. a > 0, x >= 0.
double regularized_lower_gamma(double a, double x);

// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double regularized_upper_gamma(double a, double x);

// Quantile of the Rayleigh law with pdf f(x) = 2x/beta * exp(-x^2/beta):
// Q(q) = sqrt(-beta * ln(1-q)). Requires 0 <= q < 1, beta > 0.
double rayleigh_quantile(double q, double beta);

} // namespace irssec::specfun

#endif

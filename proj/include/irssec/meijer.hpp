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
// Numerical Mellin-Barnes evaluation of the one Meijer-G shape the outage
// series needs. Kept separate from the rest of the analytics because contour
// integration has its own bag of tricks.

#ifndef IRSSEC_MEIJER_HPP
#define IRSSEC_MEIJER_HPP

#include <complex>

namespace irssec::meijer
{

// log Gamma on the complex plane, Lanczos for Re(x) >= 0.5 and an upward
// recurrence below that. The imaginary part is NOT reduced to a principal
// branch: callers only ever exponentiate sums of these values, where a 2*pi*i
// ambiguity is invisible. Poles (nonpositive integers) yield +inf real part.
std::complex<double> clgamma(std::complex<double> x);

// The p-th term kernel of the outage series, already divided by Gamma(kappa):
//
//   T_p = G^{2,2}_{3,3}[ z | 1, 1+p-kappa, 1+p ; 1, p, 1+p ] / Gamma(kappa).
//
// After cancelling the coincident parameter pairs, the defining contour
// integral collapses to
//
//   T_p = (-1)^p / (2 pi Gamma(kappa)) * Int Gamma(p-s) Gamma(kappa-p+s) z^s dy,
//
// s = c + iy on the vertical line c = p - min(kappa, 1)/2, which separates the
// right pole family {p, p+1, ...} from the left one {p-kappa, p-kappa-1, ...}
// for every kappa > 0. Evaluated by trapezoidal sums with step halving
// (initial h = 0.25, relative step-doubling tolerance 1e-10); the integrand
// decays like e^{-pi|y|}, so the tail is cut once |integrand| stays below
// 1e-18 of its running peak. Requires kappa > 0, z > 0, p >= 0; throws
// std::invalid_argument otherwise and irssec::numerical_error if the step
// refinement fails to settle.
double theorem_series_g_term(double kappa, double z, int p);

} // namespace irssec::meijer

#endif

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

#ifndef IRSSEC_PARAMS_HPP
#define IRSSEC_PARAMS_HPP

#include <cmath>

namespace irssec
{

// Every physical constant of the model, in linear units (watts, meters,
// radians, dimensionless gains). dB/dBm conversion happens once at config
// load; nothing downstream ever sees logarithmic units.
//
// Defaults are the reference setup: M=4, N=10x10, L=4, P=5 dBm, noise
// -120 dBm, rho=0.9, Rs=3 bits/s/Hz, BS-IRS hop C1=-26 dB / d1=10 m /
// alpha1=2.2, IRS-user hop C2=-28 dB / d2=80 m / alpha2=3.67, half-wavelength
// spacings. Angles are arbitrary non-degenerate values; every SNR statistic
// is provably invariant to them (unit-modulus steering phases cancel).
struct SystemParams
{
    int M = 4;       // BS antennas
    int N_H = 10;    // IRS horizontal elements
    int N_V = 10;    // IRS vertical elements
    int L = 4;       // phase quantization levels

    double P = 3.1622776601683794e-3;        // transmit power, W (5 dBm)
    double sigma2_B = 1e-15;                 // Bob noise power, W (-120 dBm)
    double sigma2_E = 1e-15;                 // Eve noise power, W (-120 dBm)
    double rho = 0.9;                        // outdated-CSI correlation, [0,1]
    double Rs = 3.0;                         // target secrecy rate, bits/s/Hz

    double phi1 = 0.7853981633974483;        // azimuth AoD at BS  (pi/4)
    double theta1 = 1.0471975511965976;      // elevation AoD at BS (pi/3)
    double phi2 = 0.7853981633974483;        // azimuth AoA at IRS (pi/4)
    double theta2 = 1.0471975511965976;      // elevation AoA at IRS (pi/3)

    double spacing_bs = 0.5;                 // BS antenna spacing, wavelengths
    double spacing_h = 0.5;                  // IRS horizontal spacing
    double spacing_v = 0.5;                  // IRS vertical spacing

    double C1 = 2.5118864315095794e-3;       // BS-IRS path-loss intercept (-26 dB)
    double alpha1 = 2.2;                     // BS-IRS path-loss exponent
    double d1 = 10.0;                        // BS-IRS distance, m
    double C2 = 1.5848931924611134e-3;       // IRS-user intercept (-28 dB)
    double alpha2 = 3.67;                    // IRS-user exponent
    double d2 = 80.0;                        // IRS-user distance, m

    int N() const { return N_H * N_V; }
    double beta_H() const { return C1 * std::pow(d1, -alpha1); }
    double beta_B() const { return C2 * std::pow(d2, -alpha2); }
    double beta_E() const { return C2 * std::pow(d2, -alpha2); } // co-located statistics

    // Throws std::invalid_argument naming the offending field.
    void validate() const;

    bool operator==(const SystemParams &) const = default;
};

} // namespace irssec

#endif

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

#ifndef IRSSEC_RNG_HPP
#define IRSSEC_RNG_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace irssec::rng
{

// Seedable, splittable random stream (xoshiro256++). Each Monte-Carlo trial
// uses an independent substream keyed by (seed, substream index), which makes
// results reproducible independently of worker count or scheduling.
class Stream
{
  public:
    explicit Stream(std::uint64_t seed) : Stream(seed, 0) {}

    Stream(std::uint64_t seed, std::uint64_t substream)
    {
        // splitmix64 expansion of the (seed, substream) key; the golden-ratio
        // multiplier decorrelates consecutive substream indices.
        std::uint64_t x = seed ^ (0x9E3779B97F4A7C15ULL * (substream + 1));
        bool all_zero = true;
        for (auto &word : state_) {
            x += 0x9E3779B97F4A7C15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
            word = z ^ (z >> 31);
            all_zero = all_zero && word == 0;
        }
        if (all_zero)
            state_[0] = 1; // xoshiro forbids the all-zero state
    }

    std::uint64_t next()
    {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Circularly-symmetric complex Gaussian CN(0, var): E|z|^2 = var, real and
    // imaginary parts independent N(0, var/2). Polar form; |z| is then exactly
    // Rayleigh with scale parameter var.
    std::complex<double> cgauss(double var)
    {
        const double u = 1.0 - uniform01(); // (0, 1], keeps the log finite
        const double r = std::sqrt(-var * std::log(u));
        const double phi = 6.283185307179586476925 * uniform01();
        return {r * std::cos(phi), r * std::sin(phi)};
    }

  private:
    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    std::array<std::uint64_t, 4> state_{};
};

} // namespace irssec::rng

#endif

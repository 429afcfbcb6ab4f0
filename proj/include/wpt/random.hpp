// SPDX-License-Identifier: Apache-2.0
//
// wptsim - wireless power transfer signal design and rectenna simulation
// Copyright (C) 2026 The wptsim authors
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

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace wpt
{

/// Seeded random stream. Every stochastic operation takes one of these
/// explicitly; trial `i` of an experiment with seed `s` always uses
/// `RandomStream(s, i)`, so results do not depend on how trials are
/// distributed over threads.
class RandomStream
{
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream = 0)
    {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
        engine_.seed(seq);
    }

    double normal() { return normal_(engine_); }

    // Uniform on [0, 1).
    double uniform()
    {
        const double u = uniform_(engine_);
        return u < 1.0 ? u : std::nextafter(1.0, 0.0);
    }

    // Uniform on [0, 2*pi).
    double phase()
    {
        constexpr double two_pi = 2.0 * std::numbers::pi;
        const double p = two_pi * uniform();
        return p < two_pi ? p : 0.0;
    }

    // Circularly symmetric complex Gaussian CN(0, variance).
    std::complex<double> complex_normal(double variance = 1.0)
    {
        const double s = std::sqrt(0.5 * variance);
        const double re = normal_(engine_);
        const double im = normal_(engine_);
        return {s * re, s * im};
    }

    std::mt19937_64 &engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

} // namespace wpt

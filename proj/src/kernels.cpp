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

#include "wpt/kernels.hpp"

#include <cmath>
#include <numbers>

namespace wpt::kernels
{

EvenMoments power_moments_serial(std::span<const double> y)
{
    EvenMoments out;
    if (y.empty())
        return out;
    double s2 = 0.0;
    double s4 = 0.0;
    for (double v : y)
    {
        const double v2 = v * v;
        s2 += v2;
        s4 += v2 * v2;
    }
    const double n = static_cast<double>(y.size());
    out.m2 = s2 / n;
    out.m4 = s4 / n;
    return out;
}

EvenMoments power_moments(std::span<const double> y)
{
    EvenMoments out;
    if (y.empty())
        return out;
    const auto n = static_cast<std::ptrdiff_t>(y.size());
    const double *data = y.data();
    double s2 = 0.0;
    double s4 = 0.0;
#pragma omp parallel for reduction(+ : s2, s4) schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
    {
        const double v2 = data[i] * data[i];
        s2 += v2;
        s4 += v2 * v2;
    }
    out.m2 = s2 / static_cast<double>(n);
    out.m4 = s4 / static_cast<double>(n);
    return out;
}

double fourth_order_sum_serial(std::span<const cplx> c)
{
    const auto n = static_cast<std::ptrdiff_t>(c.size());
    cplx acc = 0.0;
    for (std::ptrdiff_t n1 = 0; n1 < n; ++n1)
        for (std::ptrdiff_t n2 = 0; n2 < n; ++n2)
            for (std::ptrdiff_t n3 = 0; n3 < n; ++n3)
            {
                const std::ptrdiff_t n4 = n1 + n2 - n3;
                if (n4 < 0 || n4 >= n)
                    continue;
                acc += c[n1] * c[n2] * std::conj(c[n3]) * std::conj(c[n4]);
            }
    return acc.real();
}

double fourth_order_sum(std::span<const cplx> c)
{
    const auto n = static_cast<std::ptrdiff_t>(c.size());
    if (n == 0)
        return 0.0;
    const cplx *data = c.data();
    double total = 0.0;
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (std::ptrdiff_t k = 0; k < 2 * n - 1; ++k)
    {
        cplx a = 0.0;
        const std::ptrdiff_t lo = k < n ? 0 : k - n + 1;
        const std::ptrdiff_t hi = k < n ? k : n - 1;
        for (std::ptrdiff_t i = lo; i <= hi; ++i)
            a += data[i] * data[k - i];
        total += std::norm(a);
    }
    return total;
}

namespace
{

inline double sample_at(std::span<const cplx> c, std::span<const std::uint64_t> cycles, std::uint64_t k,
                        std::uint64_t samples)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double y = 0.0;
    for (std::size_t t = 0; t < c.size(); ++t)
    {
        // Reduce the phase exactly in integers before converting to radians.
        const std::uint64_t idx = (cycles[t] % samples) * k % samples;
        const double angle = two_pi * static_cast<double>(idx) / static_cast<double>(samples);
        y += c[t].real() * std::cos(angle) - c[t].imag() * std::sin(angle);
    }
    return y;
}

} // namespace

std::vector<double> synthesize_serial(std::span<const cplx> c, std::span<const std::uint64_t> cycles,
                                      std::size_t samples)
{
    std::vector<double> y(samples);
    for (std::size_t k = 0; k < samples; ++k)
        y[k] = sample_at(c, cycles, k, samples);
    return y;
}

std::vector<double> synthesize(std::span<const cplx> c, std::span<const std::uint64_t> cycles, std::size_t samples)
{
    std::vector<double> y(samples);
    const auto s = static_cast<std::ptrdiff_t>(samples);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < s; ++k)
        y[static_cast<std::size_t>(k)] = sample_at(c, cycles, static_cast<std::uint64_t>(k), samples);
    return y;
}

} // namespace wpt::kernels

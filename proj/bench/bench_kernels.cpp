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

// Serial reference kernels against their OpenMP counterparts.

#include "wpt/harness.hpp"
#include "wpt/kernels.hpp"
#include "wpt/random.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace
{

std::vector<wpt::kernels::cplx> coefficients(std::size_t n)
{
    wpt::RandomStream rng(1);
    std::vector<wpt::kernels::cplx> c(n);
    for (auto &x : c)
        x = rng.complex_normal(1.0);
    return c;
}

template <bool Parallel> void fourth_order(benchmark::State &state)
{
    const auto c = coefficients(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(Parallel ? wpt::kernels::fourth_order_sum(c)
                                          : wpt::kernels::fourth_order_sum_serial(c));
    state.SetComplexityN(state.range(0));
}

template <bool Parallel> void synthesis(benchmark::State &state)
{
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto c = coefficients(n);
    std::vector<std::uint64_t> cycles(n);
    for (std::size_t i = 0; i < n; ++i)
        cycles[i] = n + i;
    const std::size_t samples = 8 * cycles.back();
    for (auto _ : state)
        benchmark::DoNotOptimize(Parallel ? wpt::kernels::synthesize(c, cycles, samples)
                                          : wpt::kernels::synthesize_serial(c, cycles, samples));
}

template <bool Parallel> void moments(benchmark::State &state)
{
    wpt::RandomStream rng(2);
    std::vector<double> y(static_cast<std::size_t>(state.range(0)));
    for (auto &x : y)
        x = rng.normal();
    for (auto _ : state)
        benchmark::DoNotOptimize(Parallel ? wpt::kernels::power_moments(y) : wpt::kernels::power_moments_serial(y));
}

template <wpt::Execution Exec> void monte_carlo(benchmark::State &state)
{
    wpt::ExperimentSpec spec;
    spec.strategy = wpt::Strategy::waveform({wpt::DesignTag::smf, 3.0});
    spec.channel = {wpt::ChannelKind::selective, static_cast<std::size_t>(state.range(0)), 1, 8};
    spec.trials = 1000;
    spec.seed = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(wpt::run_monte_carlo(spec, Exec).mean);
}

} // namespace

BENCHMARK(fourth_order<false>)->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(fourth_order<true>)->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(synthesis<false>)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(synthesis<true>)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(moments<false>)->Arg(1 << 12)->Arg(1 << 20);
BENCHMARK(moments<true>)->Arg(1 << 12)->Arg(1 << 20);
BENCHMARK(monte_carlo<wpt::Execution::serial>)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(monte_carlo<wpt::Execution::parallel>)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

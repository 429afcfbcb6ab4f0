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

#include "wpt/harness.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>

using namespace wpt;

namespace
{

ExperimentSpec waveform_spec(DesignMethod m, ChannelKind kind, std::size_t n, std::size_t trials = 300)
{
    ExperimentSpec s;
    s.name = "t";
    s.strategy = Strategy::waveform(m);
    s.channel = {kind, n, 1, 8};
    s.trials = trials;
    s.seed = 2024;
    return s;
}

bool same_bits(const std::vector<double> &a, const std::vector<double> &b)
{
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

} // namespace

TEST_CASE("serial and parallel runs are bit-identical")
{
    auto spec = waveform_spec({DesignTag::smf, 3.0}, ChannelKind::selective, 16);
    spec.epsilon = 0.5;
    const auto a = run_monte_carlo(spec, Execution::serial);
    const auto b = run_monte_carlo(spec, Execution::parallel);
    CHECK(same_bits(a.samples, b.samples));
    CHECK(std::memcmp(&a.mean, &b.mean, sizeof(double)) == 0);
    CHECK(std::memcmp(&a.ci95, &b.ci95, sizeof(double)) == 0);
    CHECK(same_bits(run_monte_carlo(spec).samples, a.samples));
}

TEST_CASE("different seeds give different draws")
{
    auto spec = waveform_spec({DesignTag::up}, ChannelKind::flat, 4, 20);
    const auto a = run_monte_carlo(spec);
    spec.seed += 1;
    CHECK(!same_bits(a.samples, run_monte_carlo(spec).samples));
}

TEST_CASE("a deterministic channel gives an exact mean and zero-width interval")
{
    const auto r = run_monte_carlo(waveform_spec({DesignTag::up}, ChannelKind::unit, 8, 50));
    const RectennaParams p;
    const double expected = p.k2 * p.r_ant + p.k4 * p.r_ant * p.r_ant * (8.0 + 1.0 / 16.0);
    CHECK(r.mean == doctest::Approx(expected).epsilon(1e-14));
    CHECK(r.ci95 == 0.0);
    CHECK(r.redraws == 0);
}

TEST_CASE("report labels")
{
    auto spec = waveform_spec({DesignTag::smf, 3.0}, ChannelKind::selective, 16, 10);
    const auto r = run_monte_carlo(spec);
    CHECK(r.strategy == "SMF(beta=3)");
    CHECK(r.beta == 3.0);
    CHECK(r.tones == 16);
    CHECK(r.trials == 10);
    CHECK(r.seed == 2024);
    CHECK(r.samples.size() == 10);
    CHECK_FALSE(r.flash_l);
    CHECK(r.second_mean + r.fourth_mean == doctest::Approx(r.mean).epsilon(1e-12));
}

TEST_CASE("baseline on common channels")
{
    auto spec = waveform_spec({DesignTag::smf, 3.0}, ChannelKind::selective, 16, 400);
    spec.baseline = Strategy::waveform({DesignTag::up});
    const auto r = run_monte_carlo(spec);
    REQUIRE(r.gain);
    CHECK(*r.gain == doctest::Approx(r.mean / *r.baseline_mean).epsilon(1e-12));
    CHECK(*r.gain > 1.4);
    CHECK(*r.gain_ci95 > 0.0);
    CHECK(*r.baseline_strategy == "UP");

    const auto up = run_monte_carlo(waveform_spec({DesignTag::up}, ChannelKind::selective, 16, 400));
    CHECK(*r.baseline_mean == doctest::Approx(up.mean).epsilon(1e-12));
}

TEST_CASE("ASS falls behind UP on flat channels")
{
    const auto ass = run_monte_carlo(waveform_spec({DesignTag::ass}, ChannelKind::flat, 16, 1000));
    const auto up = run_monte_carlo(waveform_spec({DesignTag::up}, ChannelKind::flat, 16, 1000));
    CHECK(ass.mean < up.mean);
}

TEST_CASE("uncorrelated CSIT gives the UP expectation")
{
    // Needs i.i.d. tones (L = N). With fewer taps, neighbouring tones are
    // correlated and the outcome depends on the weight profile.
    auto upmf = waveform_spec({DesignTag::upmf}, ChannelKind::selective, 16, 1000);
    upmf.channel.taps = 16;
    upmf.epsilon = 0.0;
    auto up = waveform_spec({DesignTag::up}, ChannelKind::selective, 16, 1000);
    up.channel.taps = 16;
    const auto a = run_monte_carlo(upmf);
    const auto b = run_monte_carlo(up);
    CHECK(std::abs(a.mean - b.mean) <= a.ci95 + b.ci95);

    upmf.channel.taps = 8;
    up.channel.taps = 8;
    const auto c = run_monte_carlo(upmf);
    const auto d = run_monte_carlo(up);
    CHECK(std::abs(c.mean - d.mean) > c.ci95 + d.ci95);
}

TEST_CASE("estimation noise degrades the matched design")
{
    auto clean = waveform_spec({DesignTag::smf, 3.0}, ChannelKind::selective, 16, 500);
    auto noisy = clean;
    noisy.estimation_noise = 1.0;
    CHECK(run_monte_carlo(noisy).mean < run_monte_carlo(clean).mean);
}

TEST_CASE("modulation and diversity strategies")
{
    ExperimentSpec s;
    s.strategy = Strategy::modulation(ModulationScheme::flash(2.0), 2000);
    s.channel = {ChannelKind::unit, 1, 1};
    s.power_w = 0.01;
    s.trials = 50;
    const auto r = run_monte_carlo(s);
    CHECK(r.fourth_mean == doctest::Approx(4.0 * 0.1435875).epsilon(0.05));
    CHECK(r.strategy == "Flash(l=2)");
    CHECK(r.flash_l == 2.0);

    ExperimentSpec d;
    d.strategy = Strategy::diversity({}, 200);
    d.channel = {ChannelKind::unit, 1, 2};
    d.power_w = 0.01;
    d.trials = 100;
    CHECK(run_monte_carlo(d).fourth_mean == doctest::Approx(1.5 * 0.1435875).epsilon(0.03));
}

TEST_CASE("spec validation")
{
    auto s = waveform_spec({DesignTag::up}, ChannelKind::flat, 4);
    s.trials = 0;
    CHECK_THROWS_AS(run_monte_carlo(s), std::invalid_argument);

    s = waveform_spec({DesignTag::mf}, ChannelKind::flat, 4);
    s.channel.antennas = 2;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);

    s = waveform_spec({DesignTag::up}, ChannelKind::flat, 4);
    s.sweep = SweepAxis{SweepAxisKind::tones, {4, 2}};
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s.sweep = SweepAxis{SweepAxisKind::tones, {2, NAN}};
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);

    s = waveform_spec({DesignTag::up}, ChannelKind::unit, 4);
    s.epsilon = 0.5;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);

    s = waveform_spec({DesignTag::up}, ChannelKind::flat, 4);
    s.epsilon = 1.0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);

    ExperimentSpec m;
    m.strategy = Strategy::modulation({SchemeTag::bpsk});
    m.channel = {ChannelKind::flat, 4, 1};
    CHECK_THROWS_AS(m.validate(), std::invalid_argument);
}

TEST_CASE("frame overheads")
{
    const FrameConfig f;
    CHECK(f.duty_cycle() == doctest::Approx(0.964488).epsilon(1e-9));
    CHECK(f.duty_cycle() >= 0.960);
    CHECK(f.duty_cycle() <= 0.970);
    CHECK(f.pilot_fraction() == doctest::Approx(512e-6));
    CHECK(f.prev_fraction() == doctest::Approx(0.035));
    CHECK_NOTHROW(f.validate());
    FrameConfig bad;
    bad.t_prev_s = 1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = {};
    bad.t_pilot_s = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("sweeps")
{
    SUBCASE("beta endpoints reproduce UPMF and MF exactly")
    {
        auto spec = waveform_spec({DesignTag::smf, 0.0}, ChannelKind::selective, 16, 200);
        spec.sweep = SweepAxis{SweepAxisKind::beta, {0.0, 1.0}};
        const auto t = sweep(spec);
        REQUIRE(t.points.size() == 2);
        const auto upmf = run_monte_carlo(waveform_spec({DesignTag::upmf}, ChannelKind::selective, 16, 200));
        const auto mf = run_monte_carlo(waveform_spec({DesignTag::mf}, ChannelKind::selective, 16, 200));
        CHECK(same_bits(t.points[0].report.samples, upmf.samples));
        CHECK(same_bits(t.points[1].report.samples, mf.samples));
    }
    SUBCASE("flash l is strictly increasing")
    {
        ExperimentSpec spec;
        spec.strategy = Strategy::modulation(ModulationScheme::flash(1.0), 2000);
        spec.channel = {ChannelKind::unit, 1, 1};
        spec.trials = 100;
        spec.sweep = SweepAxis{SweepAxisKind::flash_l, {1, 2, 3, 4, 5}};
        const auto t = sweep(spec);
        for (std::size_t i = 1; i < t.points.size(); ++i)
            CHECK(t.points[i].report.mean > t.points[i - 1].report.mean);
        CHECK(t.points[2].report.flash_l == 3.0);
    }
    SUBCASE("tone sweep applies to the channel")
    {
        auto spec = waveform_spec({DesignTag::up}, ChannelKind::flat, 1, 20);
        spec.sweep = SweepAxis{SweepAxisKind::tones, {2, 4}};
        const auto t = sweep(spec);
        CHECK(t.points[1].report.tones == 4);
        CHECK_THROWS_AS(apply_sweep_value(spec, SweepAxisKind::tones, 2.5), std::invalid_argument);
        CHECK_THROWS_AS(apply_sweep_value(spec, SweepAxisKind::beta, 2.0), std::invalid_argument);
        CHECK_THROWS_AS(sweep(waveform_spec({DesignTag::up}, ChannelKind::flat, 1)), std::invalid_argument);
    }
    SUBCASE("sweep axis names")
    {
        for (auto k : {SweepAxisKind::tones, SweepAxisKind::antennas, SweepAxisKind::beta, SweepAxisKind::flash_l,
                       SweepAxisKind::velocity, SweepAxisKind::epsilon})
            CHECK(sweep_axis_from_string(to_string(k)) == k);
        CHECK_THROWS_AS(sweep_axis_from_string("power"), std::invalid_argument);
    }
}

TEST_CASE("mobility")
{
    auto spec = waveform_spec({DesignTag::smf, 3.0}, ChannelKind::selective, 16, 200);
    spec.mobility = MobilitySettings{};
    spec.mobility->frames = 10;

    SUBCASE("a static terminal keeps the static gain")
    {
        const auto m = run_mobility(spec);
        CHECK(m.epsilon == max_gauss_markov_coefficient);
        auto st = spec;
        st.mobility.reset();
        st.baseline = Strategy::waveform({DesignTag::up});
        st.trials = 2000;
        const auto s = run_monte_carlo(st);
        CHECK(std::abs(m.gain - *s.gain) <= m.gain_ci95 + *s.gain_ci95);
        CHECK(m.adaptive_series.size() == 10);
        CHECK(m.duty_cycle == doctest::Approx(0.964488));
        CHECK(m.baseline.strategy == "UP");
    }
    SUBCASE("fast terminals lose the gain")
    {
        spec.mobility->velocity_mps = 1.0;
        const auto m = run_mobility(spec);
        CHECK(m.correlation == doctest::Approx(0.1077).epsilon(0.01));
        CHECK(m.gain < 1.1);
        CHECK(m.adaptive.velocity_mps == 1.0);
    }
    SUBCASE("serial and parallel agree")
    {
        spec.mobility->velocity_mps = 0.05;
        const auto a = run_mobility(spec, Execution::serial);
        const auto b = run_mobility(spec, Execution::parallel);
        CHECK(same_bits(a.adaptive.samples, b.adaptive.samples));
        CHECK(same_bits(a.baseline_series, b.baseline_series));
    }
    SUBCASE("mobility needs its own entry point")
    {
        CHECK_THROWS_AS(run_monte_carlo(spec), std::invalid_argument);
        auto plain = spec;
        plain.mobility.reset();
        CHECK_THROWS_AS(run_mobility(plain), std::invalid_argument);
    }
}

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

#include "wpt/channel.hpp"
#include "wpt/errors.hpp"
#include "wpt/random.hpp"
#include "wpt/rectenna.hpp"
#include "wpt/waveform.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>

using namespace wpt;

namespace
{

const DesignMethod siso_methods[] = {{DesignTag::up},   {DesignTag::ass},       {DesignTag::upmf},
                                     {DesignTag::mf},   {DesignTag::max_papr},  {DesignTag::smf, 3.0},
                                     {DesignTag::smf, -0.5}, {DesignTag::smf, 50.0}};

bool bitwise_equal(const std::vector<cplx> &a, const std::vector<cplx> &b)
{
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(cplx)) == 0;
}

} // namespace

TEST_CASE("uniform power weights")
{
    const auto w = design_waveform({DesignTag::up}, 4, 1, 1.0);
    REQUIRE(w.weights.size() == 4);
    for (const auto &x : w.weights)
        CHECK(std::abs(x) == doctest::Approx(0.70711).epsilon(1e-5));
    CHECK(w.transmit_power() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(design_waveform({DesignTag::mf}, 4, 1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(design_waveform({DesignTag::up}, 4, 1, 0.0), DomainError);
}

TEST_CASE("every design meets the power constraint")
{
    RandomStream rng(42);
    for (int i = 0; i < 100; ++i)
    {
        const auto kind = i % 2 ? ChannelKind::selective : ChannelKind::flat;
        const auto h = sample_channel({kind, 16, 1, 8}, rng);
        for (const auto &m : siso_methods)
        {
            const auto w = design_waveform(m, h, 0.5);
            CHECK(std::abs(w.transmit_power() - 0.5) <= 1e-12 * 0.5);
        }
        const auto h2 = sample_channel({kind, 16, 2, 8}, rng);
        for (const DesignMethod m : {DesignMethod{DesignTag::miso_upmf}, DesignMethod{DesignTag::miso_smf, 3.0},
                                     DesignMethod{DesignTag::up}})
            CHECK(std::abs(design_waveform(m, h2, 0.5).transmit_power() - 0.5) <= 1e-12 * 0.5);
    }
}

TEST_CASE("scaled matched filter specializations are bit-identical")
{
    RandomStream rng(43);
    for (int i = 0; i < 100; ++i)
    {
        const auto h = sample_channel({ChannelKind::selective, 16, 1, 8}, rng);
        CHECK(bitwise_equal(design_waveform({DesignTag::smf, 0.0}, h, 1.0).weights,
                            design_waveform({DesignTag::upmf}, h, 1.0).weights));
        CHECK(bitwise_equal(design_waveform({DesignTag::smf, 1.0}, h, 1.0).weights,
                            design_waveform({DesignTag::mf}, h, 1.0).weights));
        CHECK(bitwise_equal(design_waveform({DesignTag::smf, -1.0}, h, 1.0).weights,
                            design_waveform({DesignTag::max_papr}, h, 1.0).weights));
    }
}

TEST_CASE("matched phases make every received tone real and positive")
{
    RandomStream rng(44);
    const auto h = sample_channel({ChannelKind::selective, 16, 2, 8}, rng);
    for (const DesignMethod m : {DesignMethod{DesignTag::miso_upmf}, DesignMethod{DesignTag::miso_smf, 2.0}})
    {
        const auto rx = received_tones(design_waveform(m, h, 1.0), h);
        for (std::size_t n = 0; n < 16; ++n)
        {
            CHECK(rx.coefficients[n].real() > 0.0);
            CHECK(std::abs(rx.coefficients[n].imag()) <= 1e-14 * std::abs(rx.coefficients[n]));
            // received amplitude of MRT is the beam amplitude times ||h_n||
        }
    }
}

TEST_CASE("amplitude profiles")
{
    RandomStream rng(45);
    const auto h = sample_channel({ChannelKind::selective, 8, 1, 8}, rng);
    const auto mf = design_waveform({DesignTag::mf}, h, 1.0);
    const auto maxp = design_waveform({DesignTag::max_papr}, h, 1.0);
    const double r0 = std::abs(mf.weights[0]) / std::abs(h(0, 0));
    const double q0 = std::abs(maxp.weights[0]) * std::abs(h(0, 0));
    for (std::size_t n = 1; n < 8; ++n)
    {
        CHECK(std::abs(mf.weights[n]) / std::abs(h(n, 0)) == doctest::Approx(r0).epsilon(1e-12));
        CHECK(std::abs(maxp.weights[n]) * std::abs(h(n, 0)) == doctest::Approx(q0).epsilon(1e-12));
    }
}

TEST_CASE("all power on the strongest tone")
{
    ChannelFreqResponse h(ChannelKind::selective, 4, 1, 2.45e9, 625e3);
    h.gains = {0.5, cplx{0.0, 2.0}, -1.0, cplx{0.0, -2.0}};
    const auto w = design_waveform({DesignTag::ass}, h, 1.0);
    CHECK(w.weights[0] == cplx{0.0, 0.0});
    CHECK(w.weights[2] == cplx{0.0, 0.0});
    CHECK(w.weights[3] == cplx{0.0, 0.0}); // tie goes to the lower index
    CHECK(std::abs(w.weights[1]) == doctest::Approx(std::sqrt(2.0)));
    CHECK((w.weights[1] * h(1, 0)).imag() == doctest::Approx(0.0));
}

TEST_CASE("large beta approaches all-strongest-tone")
{
    const RectennaParams p;
    RandomStream rng(46);
    int compared = 0;
    for (int i = 0; i < 200; ++i)
    {
        const auto h = sample_channel({ChannelKind::selective, 16, 1, 8}, rng);
        std::vector<double> g(16);
        for (std::size_t n = 0; n < 16; ++n)
            g[n] = std::abs(h(n, 0));
        std::sort(g.begin(), g.end());
        if (g[14] > 0.9 * g[15])
            continue;
        ++compared;
        const double z_smf = zdc_multisine_freq(received_tones(design_waveform({DesignTag::smf, 50.0}, h, 1.0), h), p);
        const double z_ass = zdc_multisine_freq(received_tones(design_waveform({DesignTag::ass}, h, 1.0), h), p);
        CHECK(z_smf == doctest::Approx(z_ass).epsilon(0.01));
    }
    CHECK(compared > 20);
}

TEST_CASE("MAX PAPR equalizes the received tones")
{
    // Equal real received tones give the largest possible PAPR, 2N.
    RandomStream rng(47);
    const auto h = sample_channel({ChannelKind::selective, 8, 1, 8}, rng);
    auto rx = received_tones(design_waveform({DesignTag::max_papr}, h, 1.0), h);
    for (std::size_t n = 1; n < 8; ++n)
        CHECK(std::abs(rx.coefficients[n]) == doctest::Approx(std::abs(rx.coefficients[0])).epsilon(1e-12));
    rx.base_frequency_hz = 8 * rx.spacing_hz; // a grid that can be sampled
    CHECK(papr(rx) == doctest::Approx(16.0).epsilon(1e-6));

    auto up = received_tones(design_waveform({DesignTag::up}, h, 1.0), h);
    up.base_frequency_hz = 8 * up.spacing_hz;
    CHECK(papr(up) < papr(rx));
}

TEST_CASE("papr of simple signals")
{
    CHECK(papr(make_tone_vector({1.0})) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(papr(make_tone_vector({1.0, 1.0, 1.0, 1.0})) == doctest::Approx(8.0).epsilon(1e-9));
    CHECK_THROWS_AS(papr(make_tone_vector({0.0, 0.0})), DomainError);
}

TEST_CASE("degenerate and mismatched channels")
{
    ChannelFreqResponse zero(ChannelKind::selective, 4, 1, 2.45e9, 625e3);
    for (const DesignMethod m : {DesignMethod{DesignTag::upmf}, DesignMethod{DesignTag::mf},
                                 DesignMethod{DesignTag::max_papr}, DesignMethod{DesignTag::smf, 3.0}})
        CHECK_THROWS_AS(design_waveform(m, zero, 1.0), DegenerateChannelError);

    RandomStream rng(48);
    const auto h2 = sample_channel({ChannelKind::flat, 4, 2}, rng);
    CHECK_THROWS_AS(design_waveform({DesignTag::mf}, h2, 1.0), DimensionError);
    const auto h1 = sample_channel({ChannelKind::flat, 4, 1}, rng);
    CHECK_THROWS_AS(received_tones(design_waveform({DesignTag::miso_upmf}, h2, 1.0), h1), DimensionError);
    CHECK_THROWS_AS(design_waveform({DesignTag::smf, std::nan("")}, h1, 1.0), DomainError);
}

TEST_CASE("a null tone is skipped by MAX PAPR")
{
    ChannelFreqResponse h(ChannelKind::selective, 3, 1, 2.45e9, 625e3);
    h.gains = {1.0, 0.0, 2.0};
    const auto w = design_waveform({DesignTag::max_papr}, h, 1.0);
    CHECK(w.weights[1] == cplx{0.0, 0.0});
    CHECK(w.transmit_power() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("design names")
{
    CHECK(design_tag_from_string("MAX-PAPR") == DesignTag::max_papr);
    CHECK(design_tag_from_string("miso-smf") == DesignTag::miso_smf);
    CHECK_THROWS_AS(design_tag_from_string("optimal"), std::invalid_argument);
    CHECK(DesignMethod{DesignTag::smf, 3.0}.label() == "SMF(beta=3)");
    CHECK(DesignMethod{DesignTag::upmf}.label() == "UPMF");
    for (auto tag : {DesignTag::up, DesignTag::ass, DesignTag::upmf, DesignTag::mf, DesignTag::max_papr,
                     DesignTag::smf, DesignTag::miso_upmf, DesignTag::miso_smf})
        CHECK(design_tag_from_string(to_string(tag)) == tag);
}

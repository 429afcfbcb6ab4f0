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

#include "oracles.hpp"

#include "wpt/errors.hpp"
#include "wpt/random.hpp"
#include "wpt/rectenna.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace wpt;

namespace
{

std::vector<cplx> random_coefficients(RandomStream &rng, std::size_t n)
{
    std::vector<cplx> c(n);
    for (auto &x : c)
        x = rng.complex_normal(0.02);
    return c;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

} // namespace

TEST_CASE("default rectenna coefficients")
{
    const RectennaParams p;
    CHECK(p.k2 == 0.0034);
    CHECK(p.k4 == 0.3829);
    CHECK(p.r_ant == 50.0);
    CHECK(p.k4 * p.r_ant / p.k2 == doctest::Approx(5630.88).epsilon(1e-4));
    CHECK_NOTHROW(p.validate());
}

TEST_CASE("taylor coefficients from diode parameters")
{
    const double is = 5e-6, n = 1.05, vt = 25.85e-3;
    const auto t = taylor_coefficients(is, n, vt);
    const double nvt = n * vt;
    CHECK(t.k2 == doctest::Approx(is / (2.0 * nvt * nvt)).epsilon(1e-14));
    CHECK(t.k4 == doctest::Approx(is / (24.0 * nvt * nvt * nvt * nvt)).epsilon(1e-14));

    CHECK_THROWS_AS(taylor_coefficients(0.0, n, vt), DomainError);
    CHECK_THROWS_AS(taylor_coefficients(is, -1.0, vt), DomainError);
    CHECK_THROWS_AS(taylor_coefficients(is, n, 0.0), DomainError);

    auto p = RectennaParams::from_diode({is, n, vt}, 50.0);
    CHECK_NOTHROW(p.validate());
    p.k4 *= 1.0 + 1e-9;
    CHECK_THROWS_AS(p.validate(), DomainError);
}

TEST_CASE("invalid params are rejected by validate")
{
    RectennaParams p;
    p.k2 = 0.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = {};
    p.r_ant = -50.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = {};
    p.k4 = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(p.validate(), DomainError);
}

TEST_CASE("continuous wave at 10 mW")
{
    // c = sqrt(2 P): k2 R P + 3/2 k4 R^2 P^2
    const RectennaParams p;
    const auto z = zdc_terms_single_tone(std::sqrt(0.02), p);
    CHECK(z.second == doctest::Approx(0.0017).epsilon(1e-13));
    CHECK(z.fourth == doctest::Approx(0.1435875).epsilon(1e-13));
    CHECK(z.total() == doctest::Approx(0.1452875).epsilon(1e-13));

    const auto tv = make_tone_vector({std::sqrt(0.02)});
    CHECK(zdc_multisine_freq(tv, p) == doctest::Approx(0.1452875).epsilon(1e-13));
    CHECK(zdc_modulated(1.0, 1.0, 0.01, p) == doctest::Approx(0.1452875).epsilon(1e-13));
}

TEST_CASE("frequency-domain z_DC matches a direct time average")
{
    const RectennaParams p;
    RandomStream rng(101);
    for (int trial = 0; trial < 40; ++trial)
    {
        const std::size_t n = 1 + trial % 16;
        const auto c = random_coefficients(rng, n);
        const auto ref = oracle::zdc_time(c, p.k2, p.k4, p.r_ant);
        const auto z = zdc_terms_multisine(make_tone_vector(c), p);
        CHECK(rel(z.second, ref.second) < 1e-11);
        CHECK(rel(z.fourth, ref.fourth) < 1e-11);

        const auto zt = zdc_terms_time(synthesize(make_tone_vector(c)), p);
        CHECK(rel(zt.fourth, ref.fourth) < 1e-11);
    }
}

TEST_CASE("uniform tones with aligned phases")
{
    // N tones of amplitude a, all real: E{y^4} = 3/8 a^4 (2N^3 + N)/3.
    const RectennaParams p;
    for (std::size_t n : {1u, 2u, 5u, 16u})
    {
        std::vector<cplx> c(n, cplx{0.1, 0.0});
        const auto z = zdc_terms_multisine(make_tone_vector(c), p);
        const double a4 = 1e-4;
        const double expected = p.k4 * p.r_ant * p.r_ant * 0.375 * a4 * oracle::quadruple_count(n);
        CHECK(rel(z.fourth, expected) < 1e-13);
        CHECK(oracle::quadruple_count(n) == doctest::Approx((2.0 * n * n * n + n) / 3.0));
    }
}

TEST_CASE("common phase rotation leaves z_DC unchanged")
{
    const RectennaParams p;
    RandomStream rng(7);
    auto c = random_coefficients(rng, 12);
    const double z0 = zdc_multisine_freq(make_tone_vector(c), p);
    for (auto &x : c)
        x *= std::polar(1.0, 2.1);
    CHECK(rel(zdc_multisine_freq(make_tone_vector(c), p), z0) < 1e-13);
}

TEST_CASE("tone vector validation")
{
    CHECK_THROWS_AS(make_tone_vector({}).validate(), DomainError);

    ToneVector t = make_tone_vector({1.0, 1.0, 1.0});
    t.spacing_hz = 0.0;
    CHECK_THROWS_AS(t.validate(), DomainError);

    // y^2 would alias into DC unless 2 f0 > (N - 1) spacing
    t = make_tone_vector({1.0, 1.0, 1.0});
    t.base_frequency_hz = 1.0;
    CHECK_THROWS_AS(t.validate(), DomainError);
    t.base_frequency_hz = 1.5;
    CHECK_NOTHROW(t.validate());

    t = make_tone_vector({1.0, cplx{std::numeric_limits<double>::infinity(), 0.0}});
    CHECK_THROWS_AS(t.validate(), DomainError);
    CHECK_THROWS_AS(zdc_multisine_freq(t, RectennaParams{}), DomainError);
}

TEST_CASE("synthesized signal on a realistic grid")
{
    // A 2.45 GHz carrier over a 1 Hz spacing is far too many cycles per
    // period to sample; a small rational grid is the supported case.
    ToneVector t = make_tone_vector({1.0, cplx{0.0, 1.0}, 0.5}, 625e3);
    const auto s = synthesize(t);
    CHECK(s.samples.size() == 8 * 5);
    CHECK(s.sample_rate_hz == doctest::Approx(8 * 5 * 625e3));

    t.base_frequency_hz = 2.45e9;
    t.spacing_hz = 1.0;
    CHECK_THROWS_AS(synthesize(t), DomainError);
    CHECK_NOTHROW(zdc_multisine_freq(t, RectennaParams{}));
}

TEST_CASE("serial and parallel synthesis agree bit for bit")
{
    RandomStream rng(3);
    const auto t = make_tone_vector(random_coefficients(rng, 16));
    CHECK(synthesize(t).samples == synthesize_serial(t).samples);
}

TEST_CASE("modulated carrier moments")
{
    const RectennaParams p;
    CHECK(zdc_modulated(1.0, 2.0, 0.01, p) == doctest::Approx(0.0017 + 2.0 * 0.1435875).epsilon(1e-13));
    CHECK_THROWS_AS(zdc_modulated(1.0, 0.9, 0.01, p), MomentError);
    CHECK_THROWS_AS(zdc_modulated(1.0, 1.0, 0.0, p), DomainError);
    CHECK_THROWS_AS(zdc_modulated(-1.0, 1.0, 1.0, p), DomainError);
}

TEST_CASE("empty sample buffer")
{
    CHECK_THROWS_AS(zdc_time_domain(SampledSignal{}, RectennaParams{}), DomainError);
}

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

#include "wpt/rectenna.hpp"

#include "wpt/errors.hpp"
#include "wpt/kernels.hpp"

#include <cmath>
#include <string>

namespace wpt
{

TaylorCoefficients taylor_coefficients(double saturation_current_a, double ideality, double thermal_voltage_v)
{
    if (!(saturation_current_a > 0.0) || !(ideality > 0.0) || !(thermal_voltage_v > 0.0))
        throw DomainError("taylor_coefficients: i_s, n and v_t must all be positive");
    const double nvt = ideality * thermal_voltage_v;
    const double nvt2 = nvt * nvt;
    return {saturation_current_a / (2.0 * nvt2), saturation_current_a / (24.0 * nvt2 * nvt2)};
}

RectennaParams RectennaParams::from_diode(const DiodeParams &diode, double r_ant)
{
    const auto k = taylor_coefficients(diode.saturation_current_a, diode.ideality, diode.thermal_voltage_v);
    RectennaParams p;
    p.k2 = k.k2;
    p.k4 = k.k4;
    p.r_ant = r_ant;
    p.diode = diode;
    p.validate();
    return p;
}

void RectennaParams::validate() const
{
    if (!(k2 > 0.0) || !std::isfinite(k2))
        throw DomainError("rectenna: k2 must be positive and finite");
    if (!(k4 > 0.0) || !std::isfinite(k4))
        throw DomainError("rectenna: k4 must be positive and finite");
    if (!(r_ant > 0.0) || !std::isfinite(r_ant))
        throw DomainError("rectenna: r_ant must be positive and finite");
    if (diode)
    {
        const auto k = taylor_coefficients(diode->saturation_current_a, diode->ideality, diode->thermal_voltage_v);
        if (std::abs(k.k2 - k2) > 1e-12 * std::abs(k.k2) || std::abs(k.k4 - k4) > 1e-12 * std::abs(k.k4))
            throw DomainError("rectenna: k2/k4 disagree with the diode parameters");
    }
}

namespace
{

struct Rational
{
    std::uint64_t num = 0;
    std::uint64_t den = 1;
};

// Continued-fraction expansion of x > 0, stopping at relative error 1e-12.
Rational to_rational(double x)
{
    constexpr std::uint64_t max_den = 1000000;
    std::uint64_t h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double r = x;
    for (int iter = 0; iter < 64; ++iter)
    {
        const double a_d = std::floor(r);
        if (a_d > 1e15)
            break;
        const auto a = static_cast<std::uint64_t>(a_d);
        const std::uint64_t h2 = a * h1 + h0;
        const std::uint64_t k2 = a * k1 + k0;
        if (k2 > max_den)
            break;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        if (std::abs(static_cast<double>(h1) / static_cast<double>(k1) - x) <= 1e-12 * x)
            return {h1, k1};
        const double frac = r - a_d;
        if (frac <= 0.0)
            break;
        r = 1.0 / frac;
    }
    if (k1 != 0 && std::abs(static_cast<double>(h1) / static_cast<double>(k1) - x) <= 1e-12 * x)
        return {h1, k1};
    throw DomainError("tone grid: base_frequency/spacing is not a rational with denominator <= 1e6");
}

struct Grid
{
    std::vector<std::uint64_t> cycles; // cycles per fundamental period for each tone
    std::uint64_t samples = 0;         // samples per fundamental period
    double period_s = 0.0;
};

Grid period_grid(const ToneVector &tones)
{
    tones.validate();
    const Rational ratio = to_rational(tones.base_frequency_hz / tones.spacing_hz);
    Grid g;
    g.cycles.resize(tones.size());
    for (std::size_t n = 0; n < tones.size(); ++n)
        g.cycles[n] = ratio.num + n * ratio.den;
    g.samples = 8 * g.cycles.back();
    constexpr std::uint64_t max_samples = std::uint64_t{1} << 25;
    if (g.samples > max_samples)
        throw DomainError("synthesize: one signal period needs " + std::to_string(g.samples) +
                          " samples; choose a base frequency closer to a small multiple of the spacing");
    g.period_s = static_cast<double>(ratio.den) / tones.spacing_hz;
    return g;
}

} // namespace

void ToneVector::validate() const
{
    if (coefficients.empty())
        throw DomainError("tone vector is empty");
    if (!(spacing_hz > 0.0) || !std::isfinite(spacing_hz))
        throw DomainError("tone vector: spacing must be positive");
    // Every DC term of y^2 and y^4 comes from index pairs with
    // n1 + n2 = n3 + n4 only when 2 f_0 exceeds the occupied bandwidth.
    const double bandwidth = static_cast<double>(coefficients.size() - 1) * spacing_hz;
    if (!(2.0 * base_frequency_hz > bandwidth) || !std::isfinite(base_frequency_hz))
        throw DomainError("tone vector: base frequency must exceed half the occupied bandwidth");
    for (const auto &c : coefficients)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw DomainError("tone vector: non-finite coefficient");
}

ToneVector make_tone_vector(std::vector<cplx> coefficients, double spacing_hz)
{
    ToneVector t;
    t.base_frequency_hz = static_cast<double>(coefficients.size()) * spacing_hz;
    t.coefficients = std::move(coefficients);
    t.spacing_hz = spacing_hz;
    return t;
}

SampledSignal synthesize(const ToneVector &tones)
{
    const Grid g = period_grid(tones);
    SampledSignal s;
    s.samples = kernels::synthesize(tones.coefficients, g.cycles, g.samples);
    s.sample_rate_hz = static_cast<double>(g.samples) / g.period_s;
    return s;
}

SampledSignal synthesize_serial(const ToneVector &tones)
{
    const Grid g = period_grid(tones);
    SampledSignal s;
    s.samples = kernels::synthesize_serial(tones.coefficients, g.cycles, g.samples);
    s.sample_rate_hz = static_cast<double>(g.samples) / g.period_s;
    return s;
}

ZdcTerms zdc_terms_coefficients(const std::vector<cplx> &coefficients, const RectennaParams &params)
{
    double power = 0.0;
    for (const auto &c : coefficients)
        power += std::norm(c);
    const double quad = kernels::fourth_order_sum(coefficients);
    return {params.k2 * params.r_ant * 0.5 * power, params.k4 * params.r_ant * params.r_ant * 0.375 * quad};
}

ZdcTerms zdc_terms_multisine(const ToneVector &tones, const RectennaParams &params)
{
    tones.validate();
    return zdc_terms_coefficients(tones.coefficients, params);
}

double zdc_multisine_freq(const ToneVector &tones, const RectennaParams &params)
{
    return zdc_terms_multisine(tones, params).total();
}

ZdcTerms zdc_terms_single_tone(cplx c, const RectennaParams &params)
{
    const double a2 = std::norm(c);
    return {params.k2 * params.r_ant * 0.5 * a2, params.k4 * params.r_ant * params.r_ant * 0.375 * a2 * a2};
}

ZdcTerms zdc_terms_time(const SampledSignal &signal, const RectennaParams &params)
{
    if (signal.samples.empty())
        throw DomainError("zdc_time_domain: empty sample buffer");
    const auto m = kernels::power_moments(signal.samples);
    return {params.k2 * params.r_ant * m.m2, params.k4 * params.r_ant * params.r_ant * m.m4};
}

double zdc_time_domain(const SampledSignal &signal, const RectennaParams &params)
{
    return zdc_terms_time(signal, params).total();
}

double zdc_modulated(double m2, double m4, double p_avg_w, const RectennaParams &params)
{
    if (!(p_avg_w > 0.0))
        throw DomainError("zdc_modulated: average power must be positive");
    if (!(m2 >= 0.0))
        throw DomainError("zdc_modulated: m2 must be non-negative");
    if (m4 < m2 * m2 * (1.0 - 1e-12))
        throw MomentError("zdc_modulated: m4 < m2^2 is not a valid moment pair");
    return params.k2 * params.r_ant * m2 * p_avg_w +
           1.5 * params.k4 * params.r_ant * params.r_ant * m4 * p_avg_w * p_avg_w;
}

} // namespace wpt

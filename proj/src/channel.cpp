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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wpt
{

std::string_view to_string(ChannelKind kind)
{
    switch (kind)
    {
    case ChannelKind::flat:
        return "flat";
    case ChannelKind::selective:
        return "selective";
    case ChannelKind::unit:
        return "unit";
    }
    return "?";
}

ChannelKind channel_kind_from_string(std::string_view name)
{
    if (name == "flat" || name == "ff")
        return ChannelKind::flat;
    if (name == "selective" || name == "fs")
        return ChannelKind::selective;
    if (name == "unit")
        return ChannelKind::unit;
    throw std::invalid_argument("unknown channel kind '" + std::string(name) + "'");
}

ChannelFreqResponse::ChannelFreqResponse(ChannelKind kind_, std::size_t tones_, std::size_t antennas_, double f0,
                                         double spacing)
    : kind(kind_), tones(tones_), antennas(antennas_), f0_hz(f0), spacing_hz(spacing), gains(tones_ * antennas_)
{
}

double ChannelFreqResponse::tone_norm(std::size_t n) const
{
    double s = 0.0;
    for (const auto &h : tone(n))
        s += std::norm(h);
    return std::sqrt(s);
}

void ChannelFreqResponse::validate() const
{
    if (tones < 1 || antennas < 1)
        throw DimensionError("channel: need at least one tone and one antenna");
    if (gains.size() != tones * antennas)
        throw DimensionError("channel: gain count " + std::to_string(gains.size()) + " does not match N*M = " +
                             std::to_string(tones * antennas));
    for (const auto &h : gains)
        if (!std::isfinite(h.real()) || !std::isfinite(h.imag()))
            throw DomainError("channel: non-finite gain");
}

void ChannelSpec::validate() const
{
    if (tones < 1)
        throw std::invalid_argument("channel spec: N must be >= 1");
    if (antennas < 1)
        throw std::invalid_argument("channel spec: M must be >= 1");
    if (kind == ChannelKind::selective && taps < 1)
        throw std::invalid_argument("channel spec: L must be >= 1");
    if (!(spacing_hz > 0.0) || !(f0_hz > 0.0))
        throw std::invalid_argument("channel spec: f0 and spacing must be positive");
}

void MobilityProfile::validate() const
{
    if (!(velocity_mps >= 0.0))
        throw std::invalid_argument("mobility: velocity must be >= 0");
    if (!(carrier_hz > 0.0))
        throw std::invalid_argument("mobility: carrier frequency must be > 0");
    if (!(interval_s > 0.0))
        throw std::invalid_argument("mobility: interval must be > 0");
}

namespace
{

// Fills h with a fresh draw of h.taps CN(0, 1/L) delay taps per antenna.
void draw_selective(ChannelFreqResponse &h, RandomStream &rng)
{
    const std::size_t n_tones = h.tones;
    const std::size_t n_taps = h.taps;
    const double tap_var = 1.0 / static_cast<double>(n_taps);
    std::vector<cplx> taps(n_taps);
    for (std::size_t m = 0; m < h.antennas; ++m)
    {
        for (auto &t : taps)
            t = rng.complex_normal(tap_var);
        for (std::size_t n = 0; n < n_tones; ++n)
        {
            cplx acc = 0.0;
            for (std::size_t l = 0; l < n_taps; ++l)
            {
                // exact integer phase reduction keeps L=1 perfectly flat
                const std::size_t idx = (n * l) % n_tones;
                const double angle =
                    -2.0 * std::numbers::pi * static_cast<double>(idx) / static_cast<double>(n_tones);
                acc += taps[l] * std::polar(1.0, angle);
            }
            h(n, m) = acc;
        }
    }
}

} // namespace

ChannelFreqResponse sample_channel(const ChannelSpec &spec, RandomStream &rng)
{
    spec.validate();
    ChannelFreqResponse h(spec.kind, spec.tones, spec.antennas, spec.f0_hz, spec.spacing_hz);
    const std::size_t n_tones = spec.tones;
    const std::size_t n_ant = spec.antennas;

    switch (spec.kind)
    {
    case ChannelKind::unit:
        for (auto &g : h.gains)
            g = 1.0;
        break;
    case ChannelKind::flat:
        for (std::size_t m = 0; m < n_ant; ++m)
        {
            const cplx g = rng.complex_normal(1.0);
            for (std::size_t n = 0; n < n_tones; ++n)
                h(n, m) = g;
        }
        break;
    case ChannelKind::selective:
        h.taps = spec.taps;
        draw_selective(h, rng);
        break;
    }
    return h;
}

double jakes_epsilon(const MobilityProfile &profile)
{
    profile.validate();
    const double x = 2.0 * std::numbers::pi * profile.doppler_hz() * profile.interval_s;
    return std::cyl_bessel_j(0.0, x);
}

double gauss_markov_coefficient(double correlation)
{
    if (!std::isfinite(correlation))
        throw DomainError("gauss_markov_coefficient: non-finite correlation");
    return std::min(std::abs(correlation), max_gauss_markov_coefficient);
}

ChannelFreqResponse evolve_gauss_markov(const ChannelFreqResponse &previous, double epsilon, RandomStream &rng)
{
    if (!(epsilon >= 0.0 && epsilon < 1.0))
        throw DomainError("evolve_gauss_markov: epsilon must lie in [0, 1)");
    if (previous.kind == ChannelKind::unit)
        throw std::invalid_argument("evolve_gauss_markov: the unit channel is static");
    previous.validate();

    ChannelFreqResponse next = previous;
    const double innovation = std::sqrt(1.0 - epsilon * epsilon);
    if (previous.kind == ChannelKind::flat)
    {
        for (std::size_t m = 0; m < previous.antennas; ++m)
        {
            const cplx g = rng.complex_normal(1.0);
            for (std::size_t n = 0; n < previous.tones; ++n)
                next(n, m) = epsilon * previous(n, m) + innovation * g;
        }
    }
    else if (previous.taps > 0)
    {
        ChannelFreqResponse g = previous;
        draw_selective(g, rng);
        for (std::size_t i = 0; i < next.gains.size(); ++i)
            next.gains[i] = epsilon * previous.gains[i] + innovation * g.gains[i];
    }
    else
    {
        for (std::size_t n = 0; n < previous.tones; ++n)
            for (std::size_t m = 0; m < previous.antennas; ++m)
                next(n, m) = epsilon * previous(n, m) + innovation * rng.complex_normal(1.0);
    }
    return next;
}

ChannelFreqResponse ls_estimate(std::span<const cplx> pilot, const ChannelFreqResponse &received)
{
    received.validate();
    if (pilot.size() != received.tones)
        throw DimensionError("ls_estimate: " + std::to_string(pilot.size()) + " pilots for " +
                             std::to_string(received.tones) + " tones");
    for (const auto &p : pilot)
        if (std::abs(p) == 0.0)
            throw DomainError("ls_estimate: zero pilot entry");

    ChannelFreqResponse est = received;
    for (std::size_t n = 0; n < received.tones; ++n)
        for (std::size_t m = 0; m < received.antennas; ++m)
            est(n, m) = received(n, m) / pilot[n];
    return est;
}

ChannelFreqResponse observe_pilots(const ChannelFreqResponse &channel, std::span<const cplx> pilot,
                                   double noise_variance, RandomStream &rng)
{
    channel.validate();
    if (pilot.size() != channel.tones)
        throw DimensionError("observe_pilots: pilot length does not match tone count");
    if (!(noise_variance >= 0.0))
        throw DomainError("observe_pilots: noise variance must be >= 0");
    ChannelFreqResponse rx = channel;
    for (std::size_t n = 0; n < channel.tones; ++n)
        for (std::size_t m = 0; m < channel.antennas; ++m)
        {
            rx(n, m) = channel(n, m) * pilot[n];
            if (noise_variance > 0.0)
                rx(n, m) += rng.complex_normal(noise_variance);
        }
    return rx;
}

} // namespace wpt

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

#include "wpt/waveform.hpp"

#include "wpt/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace wpt
{

std::string_view to_string(DesignTag tag)
{
    switch (tag)
    {
    case DesignTag::up:
        return "UP";
    case DesignTag::ass:
        return "ASS";
    case DesignTag::upmf:
        return "UPMF";
    case DesignTag::mf:
        return "MF";
    case DesignTag::max_papr:
        return "MAXPAPR";
    case DesignTag::smf:
        return "SMF";
    case DesignTag::miso_upmf:
        return "MISO_UPMF";
    case DesignTag::miso_smf:
        return "MISO_SMF";
    }
    return "?";
}

DesignTag design_tag_from_string(std::string_view name)
{
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    std::replace(s.begin(), s.end(), '-', '_');
    if (s == "up")
        return DesignTag::up;
    if (s == "ass")
        return DesignTag::ass;
    if (s == "upmf")
        return DesignTag::upmf;
    if (s == "mf")
        return DesignTag::mf;
    if (s == "maxpapr" || s == "max_papr")
        return DesignTag::max_papr;
    if (s == "smf")
        return DesignTag::smf;
    if (s == "miso_upmf")
        return DesignTag::miso_upmf;
    if (s == "miso_smf")
        return DesignTag::miso_smf;
    throw std::invalid_argument("unknown design method '" + std::string(name) + "'");
}

std::string DesignMethod::label() const
{
    std::string out(to_string(tag));
    if (tag == DesignTag::smf || tag == DesignTag::miso_smf)
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "(beta=%g)", beta);
        out += buf;
    }
    return out;
}

double WaveformWeights::transmit_power() const
{
    double s = 0.0;
    for (const auto &w : weights)
        s += std::norm(w);
    return 0.5 * s;
}

namespace
{

void check_power(double power_w)
{
    if (!(power_w > 0.0) || !std::isfinite(power_w))
        throw DomainError("design_waveform: transmit power must be positive");
}

WaveformWeights empty_weights(const DesignMethod &method, std::size_t tones, std::size_t antennas, double power_w)
{
    WaveformWeights w;
    w.method = method;
    w.tones = tones;
    w.antennas = antennas;
    w.power_w = power_w;
    w.weights.assign(tones * antennas, cplx{0.0, 0.0});
    return w;
}

// Unit-norm beam along conj(h_n); antenna 0 when the tone is in a null.
void write_matched_beam(WaveformWeights &w, const ChannelFreqResponse &h, std::size_t n, double amplitude,
                        double gain)
{
    if (gain > 0.0)
    {
        const double s = amplitude / gain;
        for (std::size_t m = 0; m < h.antennas; ++m)
            w(n, m) = s * std::conj(h(n, m));
    }
    else
    {
        w(n, 0) = amplitude;
    }
}

// Shared by UPMF (beta = 0), MF (beta = 1), MAX PAPR (beta = -1) and SMF,
// SISO and MISO alike: amplitude ||h_n||^beta, matched phase/beam.
WaveformWeights scaled_matched_filter(const DesignMethod &method, const ChannelFreqResponse &h, double beta,
                                      double power_w)
{
    const std::size_t n_tones = h.tones;
    std::vector<double> gain(n_tones);
    double g_max = 0.0;
    for (std::size_t n = 0; n < n_tones; ++n)
    {
        gain[n] = h.tone_norm(n);
        g_max = std::max(g_max, gain[n]);
    }

    if (!(g_max > 0.0))
        throw DegenerateChannelError("design_waveform: " + method.label() + " is undefined on an all-zero channel");

    std::vector<double> amp(n_tones);
    double total = 0.0;
    for (std::size_t n = 0; n < n_tones; ++n)
    {
        if (beta < 0.0 && !(gain[n] >= inversion_floor * g_max && gain[n] > 0.0))
            amp[n] = 0.0;
        else
            amp[n] = std::pow(gain[n], beta);
        total += amp[n] * amp[n];
    }
    if (!(total > 0.0) || !std::isfinite(total))
        throw DegenerateChannelError("design_waveform: " + method.label() + " is undefined on an all-zero channel");

    const double scale = std::sqrt(2.0 * power_w / total);
    auto w = empty_weights(method, n_tones, h.antennas, power_w);
    for (std::size_t n = 0; n < n_tones; ++n)
        write_matched_beam(w, h, n, scale * amp[n], gain[n]);
    return w;
}

} // namespace

WaveformWeights design_waveform(const DesignMethod &method, std::size_t tones, std::size_t antennas, double power_w)
{
    if (method.needs_channel())
        throw std::invalid_argument("design_waveform: " + method.label() + " requires a channel");
    if (tones < 1 || antennas < 1)
        throw DimensionError("design_waveform: need N >= 1 and M >= 1");
    check_power(power_w);
    auto w = empty_weights(method, tones, antennas, power_w);
    const double amplitude = std::sqrt(2.0 * power_w / static_cast<double>(tones * antennas));
    std::fill(w.weights.begin(), w.weights.end(), cplx{amplitude, 0.0});
    return w;
}

WaveformWeights design_waveform(const DesignMethod &method, const ChannelFreqResponse &channel, double power_w)
{
    channel.validate();
    check_power(power_w);
    if (!std::isfinite(method.beta))
        throw DomainError("design_waveform: beta must be finite");
    if (!method.is_miso() && method.tag != DesignTag::up && channel.antennas != 1)
        throw DimensionError("design_waveform: " + method.label() + " is a single-antenna design but M = " +
                             std::to_string(channel.antennas));

    switch (method.tag)
    {
    case DesignTag::up:
        return design_waveform(method, channel.tones, channel.antennas, power_w);
    case DesignTag::ass: {
        std::size_t best = 0;
        double best_gain = -1.0;
        for (std::size_t n = 0; n < channel.tones; ++n)
        {
            const double g = std::abs(channel(n, 0));
            if (g > best_gain)
            {
                best_gain = g;
                best = n;
            }
        }
        auto w = empty_weights(method, channel.tones, 1, power_w);
        write_matched_beam(w, channel, best, std::sqrt(2.0 * power_w), best_gain);
        return w;
    }
    case DesignTag::upmf:
    case DesignTag::miso_upmf:
        return scaled_matched_filter(method, channel, 0.0, power_w);
    case DesignTag::mf:
        return scaled_matched_filter(method, channel, 1.0, power_w);
    case DesignTag::max_papr:
        return scaled_matched_filter(method, channel, -1.0, power_w);
    case DesignTag::smf:
    case DesignTag::miso_smf:
        return scaled_matched_filter(method, channel, method.beta, power_w);
    }
    throw std::invalid_argument("design_waveform: unknown method");
}

ToneVector received_tones(const WaveformWeights &weights, const ChannelFreqResponse &channel)
{
    channel.validate();
    if (weights.tones != channel.tones || weights.antennas != channel.antennas ||
        weights.weights.size() != channel.gains.size())
        throw DimensionError("received_tones: weights are " + std::to_string(weights.tones) + "x" +
                             std::to_string(weights.antennas) + " but the channel is " +
                             std::to_string(channel.tones) + "x" + std::to_string(channel.antennas));
    ToneVector out;
    out.spacing_hz = channel.spacing_hz;
    out.base_frequency_hz = channel.f0_hz;
    out.coefficients.resize(channel.tones);
    for (std::size_t n = 0; n < channel.tones; ++n)
    {
        cplx acc = 0.0;
        for (std::size_t m = 0; m < channel.antennas; ++m)
            acc += channel(n, m) * weights(n, m);
        out.coefficients[n] = acc;
    }
    return out;
}

namespace
{

// y at a fractional sample position u (in units of samples of a period of
// length `samples`).
double eval_at(const ToneVector &tones, const std::vector<double> &cycles, double u, double samples)
{
    double y = 0.0;
    for (std::size_t n = 0; n < tones.size(); ++n)
    {
        const double turns = cycles[n] * u / samples;
        const double angle = 2.0 * std::numbers::pi * (turns - std::floor(turns));
        const auto &c = tones.coefficients[n];
        y += c.real() * std::cos(angle) - c.imag() * std::sin(angle);
    }
    return y;
}

} // namespace

double papr(const ToneVector &tones)
{
    const SampledSignal sig = synthesize(tones);
    const auto &y = sig.samples;
    const std::size_t s = y.size();

    double mean_sq = 0.0;
    double max_sq = 0.0;
    for (double v : y)
    {
        mean_sq += v * v;
        max_sq = std::max(max_sq, v * v);
    }
    mean_sq /= static_cast<double>(s);
    if (!(mean_sq > 0.0))
        throw DomainError("papr: zero signal");

    // Tone frequencies in cycles per period, recovered from the sample rate.
    const double period = static_cast<double>(s) / sig.sample_rate_hz;
    std::vector<double> cycles(tones.size());
    for (std::size_t n = 0; n < tones.size(); ++n)
        cycles[n] = std::round((tones.base_frequency_hz + static_cast<double>(n) * tones.spacing_hz) * period);

    // Refine every sampled local maximum that could hide the true peak:
    // at 8x oversampling a sample is within cos^2(pi/8) of its lobe peak.
    const double threshold = 0.8 * max_sq;
    const double samples_d = static_cast<double>(s);
    double peak = max_sq;
    for (std::size_t k = 0; k < s; ++k)
    {
        const double v = y[k] * y[k];
        if (v < threshold)
            continue;
        const double prev = y[(k + s - 1) % s] * y[(k + s - 1) % s];
        const double next = y[(k + 1) % s] * y[(k + 1) % s];
        if (v < prev || v < next)
            continue;

        constexpr double inv_phi = 0.6180339887498949;
        double a = static_cast<double>(k) - 1.0;
        double b = static_cast<double>(k) + 1.0;
        double x1 = b - inv_phi * (b - a);
        double x2 = a + inv_phi * (b - a);
        double f1 = std::pow(eval_at(tones, cycles, x1, samples_d), 2);
        double f2 = std::pow(eval_at(tones, cycles, x2, samples_d), 2);
        for (int it = 0; it < 80; ++it)
        {
            if (f1 < f2)
            {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + inv_phi * (b - a);
                f2 = std::pow(eval_at(tones, cycles, x2, samples_d), 2);
            }
            else
            {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - inv_phi * (b - a);
                f1 = std::pow(eval_at(tones, cycles, x1, samples_d), 2);
            }
        }
        peak = std::max({peak, f1, f2});
    }
    return peak / mean_sq;
}

} // namespace wpt

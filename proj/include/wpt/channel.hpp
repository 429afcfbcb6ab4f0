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

#include "wpt/random.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace wpt
{

using cplx = std::complex<double>;

/// `unit` is a deterministic h = 1 channel (cable-connected rectenna).
enum class ChannelKind
{
    flat,
    selective,
    unit
};

std::string_view to_string(ChannelKind kind);
ChannelKind channel_kind_from_string(std::string_view name);

inline constexpr double speed_of_light_mps = 3e8;

/// N x M frequency response, row-major by (tone n, antenna m).
struct ChannelFreqResponse
{
    ChannelKind kind = ChannelKind::flat;
    std::size_t tones = 1;
    std::size_t antennas = 1;
    double f0_hz = 2.45e9;
    double spacing_hz = 625e3;
    std::size_t taps = 0; // selective: delay taps it was drawn from, 0 if unknown
    std::vector<cplx> gains;

    ChannelFreqResponse() = default;
    ChannelFreqResponse(ChannelKind kind, std::size_t tones, std::size_t antennas, double f0_hz, double spacing_hz);

    cplx &operator()(std::size_t n, std::size_t m) { return gains[n * antennas + m]; }
    const cplx &operator()(std::size_t n, std::size_t m) const { return gains[n * antennas + m]; }

    std::span<const cplx> tone(std::size_t n) const { return {gains.data() + n * antennas, antennas}; }

    // ||h_n|| over antennas
    double tone_norm(std::size_t n) const;

    void validate() const;
};

struct ChannelSpec
{
    ChannelKind kind = ChannelKind::flat;
    std::size_t tones = 16;
    std::size_t antennas = 1;
    std::size_t taps = 8; // selective only
    double f0_hz = 2.45e9;
    double spacing_hz = 625e3;

    void validate() const;
};

struct MobilityProfile
{
    double velocity_mps = 0.0;
    double carrier_hz = 2.45e9;
    double interval_s = 1.0;

    double doppler_hz() const { return velocity_mps * carrier_hz / speed_of_light_mps; }
    void validate() const;
};

/// Flat: one CN(0,1) gain per antenna shared by all tones.
/// Selective: L taps CN(0,1/L) per antenna, h_{n,m} = sum_l tap_{l,m} e^{-j 2 pi n l / N}.
/// Unit: h = 1 everywhere.
ChannelFreqResponse sample_channel(const ChannelSpec &spec, RandomStream &rng);

/// Time correlation J0(2 pi f_D T) between successive channel instances.
/// Signed and unclamped; use gauss_markov_coefficient() before evolving.
double jakes_epsilon(const MobilityProfile &profile);

/// Largest correlation admitted by the Gauss-Markov recursion.
inline constexpr double max_gauss_markov_coefficient = 1.0 - 1e-9;

/// Maps a Jakes correlation onto the recursion coefficient in [0, 1).
/// The magnitude is kept: the received z_DC of a matched design depends on
/// the correlation only through its square, and a sign flip of the
/// correlated part is indistinguishable from a common phase rotation.
double gauss_markov_coefficient(double correlation);

/// h_k = eps h_{k-1} + sqrt(1 - eps^2) g_k. The innovation is shared by all
/// tones for flat channels. For selective ones it is a fresh draw from the
/// same tap model, so the process stays stationary; with L = N (or taps
/// unknown) it is i.i.d. across tones.
ChannelFreqResponse evolve_gauss_markov(const ChannelFreqResponse &previous, double epsilon, RandomStream &rng);

/// Per-tone LS estimate received / pilot, applied to every antenna
/// (antennas are sounded on orthogonal pilot resources).
ChannelFreqResponse ls_estimate(std::span<const cplx> pilot, const ChannelFreqResponse &received);

/// received = h * pilot + w with w ~ CN(0, noise_variance), per tone and antenna.
ChannelFreqResponse observe_pilots(const ChannelFreqResponse &channel, std::span<const cplx> pilot,
                                   double noise_variance, RandomStream &rng);

} // namespace wpt

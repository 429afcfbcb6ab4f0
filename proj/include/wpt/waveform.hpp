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

#include "wpt/channel.hpp"
#include "wpt/rectenna.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace wpt
{

enum class DesignTag
{
    up,        // uniform power, no CSIT
    ass,       // all power on the strongest tone
    upmf,      // uniform power, matched phases
    mf,        // amplitude proportional to channel strength
    max_papr,  // amplitude inversely proportional to channel strength
    smf,       // amplitude proportional to channel strength^beta
    miso_upmf, // UPMF in frequency, MRT across antennas
    miso_smf   // SMF on ||h_n||, MRT across antennas
};

std::string_view to_string(DesignTag tag);
DesignTag design_tag_from_string(std::string_view name);

struct DesignMethod
{
    DesignTag tag = DesignTag::up;
    double beta = 0.0; // SMF exponent

    bool needs_channel() const { return tag != DesignTag::up; }
    bool is_miso() const { return tag == DesignTag::miso_upmf || tag == DesignTag::miso_smf; }
    std::string label() const;
};

/// Channels weaker than this fraction of the strongest tone receive no
/// power under inverting (negative-exponent) allocations.
inline constexpr double inversion_floor = 1e-6;

/// N x M transmit coefficients, row-major by (tone, antenna); the sum of
/// |w|^2 equals 2P.
struct WaveformWeights
{
    DesignMethod method;
    std::size_t tones = 0;
    std::size_t antennas = 0;
    double power_w = 0.0;
    std::vector<cplx> weights;

    cplx &operator()(std::size_t n, std::size_t m) { return weights[n * antennas + m]; }
    const cplx &operator()(std::size_t n, std::size_t m) const { return weights[n * antennas + m]; }

    // 1/2 sum |w|^2
    double transmit_power() const;
};

/// Channel-independent design (UP only). UP with M > 1 spreads power
/// uniformly over frequency and space.
WaveformWeights design_waveform(const DesignMethod &method, std::size_t tones, std::size_t antennas, double power_w);

/// Design from CSIT. SISO tags require M = 1.
WaveformWeights design_waveform(const DesignMethod &method, const ChannelFreqResponse &channel, double power_w);

/// Tone n of the result is sum_m h_{n,m} w_{n,m}, on the channel's grid.
ToneVector received_tones(const WaveformWeights &weights, const ChannelFreqResponse &channel);

/// Peak of y(t)^2 over one period divided by the mean of y(t)^2.
double papr(const ToneVector &tones);

} // namespace wpt

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

#include "wpt/modulation.hpp"
#include "wpt/rectenna.hpp"

#include <cstddef>
#include <string_view>

namespace wpt
{

// Closed-form z_DC predictions for uniform-power and matched waveforms,
// modulated carriers, and transmit diversity.

enum class ChannelClass
{
    ff,
    fs
};

enum class ScalingStrategy
{
    up,
    upmf
};

struct ScalingCase
{
    ChannelClass channel = ChannelClass::ff;
    ScalingStrategy strategy = ScalingStrategy::up;
    std::size_t tones = 16;
    std::size_t antennas = 1;
    double epsilon = 1.0; // CSIT time correlation; the formulas use eps^2 and eps^4
    double power_w = 1.0;
    RectennaParams params;

    void validate() const;
};

struct ScalingValue
{
    double second = 0.0;
    double fourth = 0.0;
    // The value comes from a large-N (and large-M) approximation and is not
    // exact at finite sizes; Monte Carlo is the reference there.
    bool asymptotic = false;

    double total() const { return second + fourth; }
};

/// Waveform cells. M = 1 selects the single-antenna row, M > 1 the
/// many-antenna row:
///   UP, FF:    k2 R P + 2 k4 R^2 P^2 N
///   UP, FS:    k2 R P + 3 k4 R^2 P^2
///   UPMF, FF, M = 1:  as UP
///   UPMF, FS, M = 1:  k2 R P + 3 k4 R^2 P^2 + eps^4 pi^2/16 k4 R^2 P^2 N
///   UPMF, M > 1:      eps^2 k2 R P M + (1 - eps^2) k2 R P + eps^4 k4 R^2 P^2 N M^2
///                     + c (1 - eps^2)^2 k4 R^2 P^2 (c N for FF, c = 2; c = 3 for FS)
ScalingValue scaling_waveform(const ScalingCase &c);

/// k2 R P + 3/2 k4 R^2 P^2 E|m|^4
ScalingValue scaling_modulation(const ModulationScheme &scheme, double power_w, const RectennaParams &params);

enum class TdScalingKind
{
    cw,
    td_cw,
    td_modulation,
    td_multisine
};

TdScalingKind td_scaling_kind_from_string(std::string_view name);

/// k2 R P + 3/2 k4 R^2 P^2 G with G = 1, G_td, G_td G_mod or G_td G_mt.
ScalingValue scaling_td(TdScalingKind kind, std::size_t antennas, double power_w, const RectennaParams &params,
                        const ModulationScheme &scheme = ModulationScheme::cw(), std::size_t tones = 1);

} // namespace wpt

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

#include "wpt/scaling.hpp"

#include "wpt/diversity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wpt
{

void ScalingCase::validate() const
{
    if (tones < 1 || antennas < 1)
        throw std::invalid_argument("scaling: N and M must be >= 1");
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("scaling: epsilon must lie in [0, 1]");
    if (!(power_w > 0.0))
        throw std::invalid_argument("scaling: power must be positive");
}

ScalingValue scaling_waveform(const ScalingCase &c)
{
    c.validate();
    const double k2rp = c.params.k2 * c.params.r_ant * c.power_w;
    const double k4r2p2 = c.params.k4 * c.params.r_ant * c.params.r_ant * c.power_w * c.power_w;
    const double n = static_cast<double>(c.tones);
    const double m = static_cast<double>(c.antennas);
    const double e2 = c.epsilon * c.epsilon;
    const double e4 = e2 * e2;
    const bool ff = c.channel == ChannelClass::ff;

    ScalingValue v;
    v.asymptotic = true;
    if (c.strategy == ScalingStrategy::up)
    {
        v.second = k2rp;
        v.fourth = ff ? 2.0 * k4r2p2 * n : 3.0 * k4r2p2;
        return v;
    }

    if (c.antennas == 1)
    {
        v.second = k2rp;
        if (ff)
            v.fourth = 2.0 * k4r2p2 * n;
        else
            v.fourth = 3.0 * k4r2p2 + e4 * std::numbers::pi * std::numbers::pi / 16.0 * k4r2p2 * n;
        return v;
    }

    const double decorrelated = (1.0 - e2) * (1.0 - e2);
    v.second = e2 * k2rp * m + (1.0 - e2) * k2rp;
    v.fourth = e4 * k4r2p2 * n * m * m + (ff ? 2.0 * decorrelated * k4r2p2 * n : 3.0 * decorrelated * k4r2p2);
    return v;
}

ScalingValue scaling_modulation(const ModulationScheme &scheme, double power_w, const RectennaParams &params)
{
    if (!(power_w > 0.0))
        throw std::invalid_argument("scaling: power must be positive");
    ScalingValue v;
    v.second = params.k2 * params.r_ant * power_w;
    v.fourth = 1.5 * params.k4 * params.r_ant * params.r_ant * theoretical_m4(scheme) * power_w * power_w;
    return v;
}

TdScalingKind td_scaling_kind_from_string(std::string_view name)
{
    if (name == "cw")
        return TdScalingKind::cw;
    if (name == "td-cw" || name == "td_cw")
        return TdScalingKind::td_cw;
    if (name == "td-mod" || name == "td_mod" || name == "td-modulation")
        return TdScalingKind::td_modulation;
    if (name == "td-multisine" || name == "td_multisine")
        return TdScalingKind::td_multisine;
    throw std::invalid_argument("unknown transmit-diversity kind '" + std::string(name) + "'");
}

ScalingValue scaling_td(TdScalingKind kind, std::size_t antennas, double power_w, const RectennaParams &params,
                        const ModulationScheme &scheme, std::size_t tones)
{
    if (!(power_w > 0.0))
        throw std::invalid_argument("scaling: power must be positive");
    double gain = 1.0;
    bool asymptotic = false;
    switch (kind)
    {
    case TdScalingKind::cw:
        break;
    case TdScalingKind::td_cw:
        gain = td_gain_theoretical(antennas);
        break;
    case TdScalingKind::td_modulation:
        gain = td_gain_theoretical(antennas) * theoretical_m4(scheme);
        break;
    case TdScalingKind::td_multisine:
        gain = td_gain_theoretical(antennas) * td_multisine_gain(tones);
        asymptotic = true;
        break;
    }
    ScalingValue v;
    v.second = params.k2 * params.r_ant * power_w;
    v.fourth = 1.5 * params.k4 * params.r_ant * params.r_ant * power_w * power_w * gain;
    v.asymptotic = asymptotic;
    return v;
}

} // namespace wpt

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
#include "wpt/modulation.hpp"
#include "wpt/rectenna.hpp"

#include <string>
#include <vector>

namespace wpt
{

/// Antenna-dependent phase per slot, row-major by (slot, antenna), each in [0, 2 pi).
struct PhaseSchedule
{
    std::size_t slots = 0;
    std::size_t antennas = 1;
    double slot_rate_hz = 2.5e6;
    std::vector<double> phases;

    double operator()(std::size_t slot, std::size_t m) const { return phases[slot * antennas + m]; }
};

PhaseSchedule td_phase_schedule(std::size_t antennas, std::size_t slots, RandomStream &rng,
                                double slot_rate_hz = 2.5e6);

enum class TdCarrier
{
    cw,
    modulated,
    multisine
};

struct TdKind
{
    TdCarrier carrier = TdCarrier::cw;
    ModulationScheme scheme;  // modulated only
    std::size_t tones = 1;    // multisine only

    std::size_t tone_count() const { return carrier == TdCarrier::multisine ? tones : 1; }
    std::string label() const;
};

/// Per-slot transmit coefficients w_{n,m}(slot), laid out [slot][antenna][tone].
struct TdSignal
{
    TdKind kind;
    std::size_t slots = 0;
    std::size_t antennas = 0;
    std::size_t tones = 0;
    double power_w = 0.0;
    std::vector<cplx> symbols; // modulation symbol per slot (1 for unmodulated carriers)
    std::vector<cplx> weights;

    const cplx &operator()(std::size_t slot, std::size_t m, std::size_t n) const
    {
        return weights[(slot * antennas + m) * tones + n];
    }

    // 1/2 sum over antennas and tones of |w|^2 in one slot
    double slot_power(std::size_t slot) const;
};

/// CW: s = sqrt(2P/M); modulated: sqrt(2P/M) m(t) with a common symbol;
/// multisine: in-phase UP multisine with s = sqrt(2P/(N M)). Antenna m's
/// schedule phase rotates everything it sends in a slot.
TdSignal td_baseband(const TdKind &kind, const PhaseSchedule &schedule, double power_w, RandomStream &rng);

/// z_DC evaluated slot by slot on the effective received coefficients,
/// then averaged over slots.
ZdcTerms td_zdc(const TdSignal &signal, const ChannelFreqResponse &channel, const RectennaParams &params);

/// G_td = 1 + (M - 1)/M
double td_gain_theoretical(std::size_t antennas);

/// Large-N approximation G_mt ~ 2N/3.
double td_multisine_gain(std::size_t tones);

/// Finite-N multisine gain on a unit channel: the number of index
/// quadruples with n1 + n2 = n3 + n4, counted by enumeration, over N^2.
double td_multisine_gain_exact(std::size_t tones);

} // namespace wpt

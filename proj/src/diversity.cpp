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

#include "wpt/diversity.hpp"

#include "wpt/errors.hpp"
#include "wpt/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace wpt
{

PhaseSchedule td_phase_schedule(std::size_t antennas, std::size_t slots, RandomStream &rng, double slot_rate_hz)
{
    if (antennas < 1 || slots < 1)
        throw std::invalid_argument("td_phase_schedule: need M >= 1 and at least one slot");
    if (!(slot_rate_hz > 0.0))
        throw std::invalid_argument("td_phase_schedule: slot rate must be positive");
    PhaseSchedule s;
    s.slots = slots;
    s.antennas = antennas;
    s.slot_rate_hz = slot_rate_hz;
    s.phases.resize(slots * antennas);
    for (auto &p : s.phases)
        p = rng.phase();
    return s;
}

std::string TdKind::label() const
{
    switch (carrier)
    {
    case TdCarrier::cw:
        return "TD-CW";
    case TdCarrier::modulated:
        return "TD-" + scheme.label();
    case TdCarrier::multisine:
        return "TD-Multisine(N=" + std::to_string(tones) + ")";
    }
    return "TD-?";
}

double TdSignal::slot_power(std::size_t slot) const
{
    double s = 0.0;
    for (std::size_t m = 0; m < antennas; ++m)
        for (std::size_t n = 0; n < tones; ++n)
            s += std::norm((*this)(slot, m, n));
    return 0.5 * s;
}

TdSignal td_baseband(const TdKind &kind, const PhaseSchedule &schedule, double power_w, RandomStream &rng)
{
    if (schedule.antennas < 1 || schedule.phases.size() != schedule.slots * schedule.antennas)
        throw DimensionError("td_baseband: malformed phase schedule");
    if (!(power_w > 0.0))
        throw DomainError("td_baseband: power must be positive");
    if (kind.carrier == TdCarrier::multisine && kind.tones < 1)
        throw std::invalid_argument("td_baseband: multisine needs N >= 1");
    if (kind.carrier == TdCarrier::modulated)
        kind.scheme.validate();

    TdSignal sig;
    sig.kind = kind;
    sig.slots = schedule.slots;
    sig.antennas = schedule.antennas;
    sig.tones = kind.tone_count();
    sig.power_w = power_w;
    sig.symbols.assign(sig.slots, cplx{1.0, 0.0});
    sig.weights.resize(sig.slots * sig.antennas * sig.tones);

    const double amplitude =
        std::sqrt(2.0 * power_w / static_cast<double>(sig.antennas * sig.tones));
    for (std::size_t k = 0; k < sig.slots; ++k)
    {
        if (kind.carrier == TdCarrier::modulated)
            sig.symbols[k] = draw_symbol(kind.scheme, rng);
        const cplx base = amplitude * sig.symbols[k];
        for (std::size_t m = 0; m < sig.antennas; ++m)
        {
            const cplx w = base * std::polar(1.0, schedule(k, m));
            for (std::size_t n = 0; n < sig.tones; ++n)
                sig.weights[(k * sig.antennas + m) * sig.tones + n] = w;
        }
    }
    return sig;
}

ZdcTerms td_zdc(const TdSignal &signal, const ChannelFreqResponse &channel, const RectennaParams &params)
{
    channel.validate();
    if (channel.antennas != signal.antennas || channel.tones != signal.tones)
        throw DimensionError("td_zdc: channel is " + std::to_string(channel.tones) + "x" +
                             std::to_string(channel.antennas) + " but the signal is " +
                             std::to_string(signal.tones) + "x" + std::to_string(signal.antennas));
    if (signal.slots == 0)
        throw DomainError("td_zdc: no slots");

    std::vector<double> second(signal.slots);
    std::vector<double> fourth(signal.slots);
    const auto slots = static_cast<std::ptrdiff_t>(signal.slots);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t ks = 0; ks < slots; ++ks)
    {
        const auto k = static_cast<std::size_t>(ks);
        std::vector<cplx> rx(signal.tones);
        for (std::size_t n = 0; n < signal.tones; ++n)
        {
            cplx acc = 0.0;
            for (std::size_t m = 0; m < signal.antennas; ++m)
                acc += channel(n, m) * signal(k, m, n);
            rx[n] = acc;
        }
        const ZdcTerms z = signal.tones == 1 ? zdc_terms_single_tone(rx[0], params) : zdc_terms_coefficients(rx, params);
        second[k] = z.second;
        fourth[k] = z.fourth;
    }
    const double n = static_cast<double>(signal.slots);
    return {compensated_sum(second) / n, compensated_sum(fourth) / n};
}

double td_gain_theoretical(std::size_t antennas)
{
    if (antennas < 1)
        throw std::invalid_argument("td_gain_theoretical: M must be >= 1");
    const double m = static_cast<double>(antennas);
    return 1.0 + (m - 1.0) / m;
}

double td_multisine_gain(std::size_t tones)
{
    if (tones < 1)
        throw std::invalid_argument("td_multisine_gain: N must be >= 1");
    return 2.0 * static_cast<double>(tones) / 3.0;
}

double td_multisine_gain_exact(std::size_t tones)
{
    if (tones < 1)
        throw std::invalid_argument("td_multisine_gain_exact: N must be >= 1");
    const auto n = static_cast<std::ptrdiff_t>(tones);
    std::uint64_t count = 0;
    for (std::ptrdiff_t n1 = 0; n1 < n; ++n1)
        for (std::ptrdiff_t n2 = 0; n2 < n; ++n2)
            for (std::ptrdiff_t n3 = 0; n3 < n; ++n3)
            {
                const std::ptrdiff_t n4 = n1 + n2 - n3;
                if (n4 >= 0 && n4 < n)
                    ++count;
            }
    const double nd = static_cast<double>(tones);
    return static_cast<double>(count) / (nd * nd);
}

} // namespace wpt

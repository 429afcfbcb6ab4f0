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

#include "wpt/presets.hpp"

#include <stdexcept>

namespace wpt
{

namespace
{

const json tone_axis = {{"axis", "N"}, {"values", {1, 2, 4, 8, 16}}};

json waveform(const char *method, double beta = 0.0)
{
    json s = {{"family", "waveform"}, {"method", method}};
    if (beta != 0.0)
        s["beta"] = beta;
    return s;
}

json modulation(const char *scheme, double l = 1.0)
{
    json s = {{"family", "modulation"}, {"scheme", scheme}, {"symbols", 1000}};
    if (l != 1.0)
        s["l"] = l;
    return s;
}

// Channel with the tone spacing of a band of bandwidth_hz split into 16
// tones. Selective channels get one tap per 1.25 MHz of bandwidth, which
// keeps the delay spread fixed as the band changes.
json channel(const char *kind, double bandwidth_hz, std::size_t antennas = 1)
{
    json c = {{"kind", kind}, {"M", antennas}, {"spacing_hz", bandwidth_hz / 16.0}};
    if (std::string(kind) == "selective")
        c["taps"] = static_cast<std::size_t>(bandwidth_hz / 1.25e6);
    return c;
}

std::vector<json> siso_tone_sweep(const char *name, const char *kind, double bandwidth_hz)
{
    std::vector<json> out;
    for (const json &s : {waveform("up"), waveform("ass"), waveform("upmf"), waveform("mf"), waveform("max_papr"),
                          waveform("smf", 3.0)})
        out.push_back({{"name", name},
                       {"strategy", s},
                       {"channel", channel(kind, bandwidth_hz)},
                       {"trials", 1000},
                       {"sweep", tone_axis}});
    return out;
}

std::vector<json> mobility_bundle()
{
    std::vector<json> out;
    for (double t_frame : {1.0, 0.2})
        out.push_back({{"name", t_frame == 1.0 ? "fig8-1s" : "fig8-200ms"},
                       {"strategy", waveform("smf", 3.0)},
                       {"baseline", waveform("up")},
                       {"channel", channel("selective", 10e6)},
                       {"trials", 500},
                       {"mobility", {{"frames", 20}, {"frame", {{"t_frame", t_frame}}}}},
                       {"sweep", {{"axis", "velocity"}, {"values", {0.01, 0.05, 0.5, 1.0}}}}});
    return out;
}

std::vector<json> miso_bundle()
{
    std::vector<json> out;
    for (const char *kind : {"flat", "selective"})
    {
        for (const json &s : {waveform("up"), waveform("upmf"), waveform("smf", 3.0)})
            out.push_back({{"name", "fig9"}, {"strategy", s}, {"channel", channel(kind, 10e6, 1)},
                           {"trials", 1000}, {"sweep", tone_axis}});
        for (const json &s : {waveform("miso_upmf"), waveform("miso_smf", 3.0)})
            out.push_back({{"name", "fig9"}, {"strategy", s}, {"channel", channel(kind, 10e6, 2)},
                           {"trials", 1000}, {"sweep", tone_axis}});
    }
    return out;
}

// Modulated carriers over a cable: unit channel, N = M = 1.
std::vector<json> modulation_bundle(const char *name, bool flash_sweep)
{
    std::vector<json> out;
    const json cable = {{"kind", "unit"}, {"N", 1}, {"M", 1}};
    for (const json &s : {modulation("cw"), modulation("bpsk"), modulation("qpsk"), modulation("qam16"),
                          modulation("cscg"), modulation("rg")})
        out.push_back({{"name", name}, {"strategy", s}, {"channel", cable}, {"trials", 1000}});
    json flash = {{"name", name}, {"strategy", modulation("flash", 2.0)}, {"channel", cable}, {"trials", 1000}};
    if (flash_sweep)
        flash["sweep"] = {{"axis", "l"}, {"values", {2, 3, 4, 5}}};
    out.push_back(std::move(flash));
    return out;
}

std::vector<json> diversity_bundle()
{
    const json cw = {{"family", "diversity"}, {"carrier", "cw"}, {"slots", 1000}};
    const json cscg = {{"family", "diversity"}, {"carrier", "modulated"}, {"scheme", "cscg"}, {"slots", 1000}};
    return {
        {{"name", "fig12"}, {"strategy", cw}, {"channel", {{"kind", "flat"}, {"N", 1}}}, {"trials", 1000},
         {"sweep", {{"axis", "M"}, {"values", {1, 2, 4, 8}}}}},
        {{"name", "fig12"}, {"strategy", cscg}, {"channel", {{"kind", "flat"}, {"N", 1}}}, {"trials", 1000},
         {"sweep", {{"axis", "M"}, {"values", {1, 2}}}}},
    };
}

std::vector<Preset> build_presets()
{
    return {
        {"fig6a", "SISO designs vs N, frequency-flat channel, 10 MHz band", siso_tone_sweep("fig6a", "flat", 10e6)},
        {"fig6b", "SISO designs vs N, frequency-selective channel, 10 MHz band",
         siso_tone_sweep("fig6b", "selective", 10e6)},
        {"fig6c", "SISO designs vs N, frequency-selective channel, 2.5 MHz band",
         siso_tone_sweep("fig6c", "selective", 2.5e6)},
        {"fig7", "SISO designs vs N for a second rectifier; the z_DC model is rectifier-agnostic up to k2/k4",
         [] {
             auto a = siso_tone_sweep("fig7", "flat", 10e6);
             auto b = siso_tone_sweep("fig7", "selective", 10e6);
             a.insert(a.end(), b.begin(), b.end());
             return a;
         }()},
        {"fig8", "SMF(beta=3) over UP vs velocity with 1 s and 200 ms frames", mobility_bundle()},
        {"fig9", "one- and two-antenna designs vs N, flat and selective channels", miso_bundle()},
        {"fig10", "modulated carriers over a cable", modulation_bundle("fig10", false)},
        {"fig12", "transmit diversity vs number of antennas", diversity_bundle()},
        {"fig13", "modulated carriers and flash signalling l = 2..5", modulation_bundle("fig13", true)},
    };
}

} // namespace

std::vector<ExperimentSpec> Preset::specs(std::uint64_t seed) const
{
    std::vector<ExperimentSpec> out;
    for (json c : configs)
    {
        c["seed"] = seed;
        out.push_back(spec_from_json(c));
    }
    return out;
}

const std::vector<Preset> &presets()
{
    static const std::vector<Preset> all = build_presets();
    return all;
}

const Preset &find_preset(const std::string &name)
{
    for (const auto &p : presets())
        if (p.name == name)
            return p;
    throw std::invalid_argument("unknown preset '" + name + "'");
}

std::vector<ReportRow> run_spec(const ExperimentSpec &spec, Execution exec)
{
    if (spec.sweep)
        return report_rows(sweep(spec, exec));
    if (spec.mobility)
        return report_rows(run_mobility(spec, exec));
    return report_rows(run_monte_carlo(spec, exec));
}

} // namespace wpt

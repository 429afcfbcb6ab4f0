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

#include "wpt/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>

namespace wpt
{

namespace
{

std::string join(const std::string &prefix, const std::string &key)
{
    return prefix.empty() ? key : prefix + "." + key;
}

// Read-only view of one JSON object that knows its dotted path.
class Section
{
  public:
    Section(const json &j, std::string path) : j_(j), path_(std::move(path))
    {
        if (!j_.is_object())
            throw ConfigError(path_, "expected an object");
    }

    void allow(std::initializer_list<const char *> keys) const
    {
        std::set<std::string> known(keys.begin(), keys.end());
        for (const auto &item : j_.items())
            if (!known.count(item.key()))
                throw ConfigError(join(path_, item.key()), "unknown key");
    }

    bool has(const char *key) const { return j_.contains(key) && !j_.at(key).is_null(); }

    const json &raw(const char *key) const
    {
        if (!has(key))
            throw ConfigError(join(path_, key), "missing");
        return j_.at(key);
    }

    Section sub(const char *key) const { return Section(raw(key), join(path_, key)); }

    double number(const char *key) const
    {
        const json &v = raw(key);
        if (!v.is_number())
            throw ConfigError(join(path_, key), "expected a number");
        const double d = v.get<double>();
        if (!std::isfinite(d))
            throw ConfigError(join(path_, key), "must be finite");
        return d;
    }
    double number(const char *key, double fallback) const { return has(key) ? number(key) : fallback; }

    std::uint64_t integer(const char *key) const
    {
        const json &v = raw(key);
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
            throw ConfigError(join(path_, key), "expected a non-negative integer");
        return v.get<std::uint64_t>();
    }
    std::size_t count(const char *key, std::size_t fallback) const
    {
        return has(key) ? static_cast<std::size_t>(integer(key)) : fallback;
    }

    std::string text(const char *key) const
    {
        const json &v = raw(key);
        if (!v.is_string())
            throw ConfigError(join(path_, key), "expected a string");
        return v.get<std::string>();
    }

    // Runs a parser that throws std::invalid_argument on bad names and
    // re-throws with this key attached.
    template <class Fn> auto parse(const char *key, Fn &&fn) const
    {
        const std::string s = text(key);
        try
        {
            return fn(s);
        }
        catch (const std::invalid_argument &e)
        {
            throw ConfigError(join(path_, key), e.what());
        }
    }

    const std::string &path() const { return path_; }

  private:
    const json &j_;
    std::string path_;
};

StrategyFamily family_from_string(const std::string &s)
{
    if (s == "waveform")
        return StrategyFamily::waveform;
    if (s == "modulation")
        return StrategyFamily::modulation;
    if (s == "diversity")
        return StrategyFamily::diversity;
    throw std::invalid_argument("expected waveform, modulation or diversity, got '" + s + "'");
}

TdCarrier carrier_from_string(const std::string &s)
{
    if (s == "cw")
        return TdCarrier::cw;
    if (s == "modulated")
        return TdCarrier::modulated;
    if (s == "multisine")
        return TdCarrier::multisine;
    throw std::invalid_argument("expected cw, modulated or multisine, got '" + s + "'");
}

std::string_view carrier_name(TdCarrier c)
{
    switch (c)
    {
    case TdCarrier::cw:
        return "cw";
    case TdCarrier::modulated:
        return "modulated";
    case TdCarrier::multisine:
        return "multisine";
    }
    return "?";
}

std::string scheme_name(const ModulationScheme &s)
{
    switch (s.tag)
    {
    case SchemeTag::cw:
        return "cw";
    case SchemeTag::bpsk:
        return "bpsk";
    case SchemeTag::qpsk:
        return "qpsk";
    case SchemeTag::psk:
        return "psk" + std::to_string(s.order);
    case SchemeTag::qam16:
        return "qam16";
    case SchemeTag::cscg:
        return "cscg";
    case SchemeTag::real_gaussian:
        return "rg";
    case SchemeTag::flash:
        return "flash";
    }
    return "?";
}

ModulationScheme read_scheme(const Section &s)
{
    const double l = s.number("l", 1.0);
    return s.parse("scheme", [&](const std::string &name) { return scheme_from_string(name, l); });
}

Strategy read_strategy(const Section &s)
{
    s.allow({"family", "method", "beta", "scheme", "l", "carrier", "tones", "symbols", "slots"});
    const StrategyFamily family = s.has("family") ? s.parse("family", family_from_string) : StrategyFamily::waveform;
    Strategy st;
    switch (family)
    {
    case StrategyFamily::waveform: {
        DesignMethod m;
        m.tag = s.parse("method", design_tag_from_string);
        m.beta = s.number("beta", 0.0);
        st = Strategy::waveform(m);
        break;
    }
    case StrategyFamily::modulation:
        st = Strategy::modulation(read_scheme(s), s.count("symbols", 1000));
        break;
    case StrategyFamily::diversity: {
        TdKind k;
        k.carrier = s.has("carrier") ? s.parse("carrier", carrier_from_string) : TdCarrier::cw;
        if (k.carrier == TdCarrier::modulated)
            k.scheme = read_scheme(s);
        k.tones = s.count("tones", 1);
        st = Strategy::diversity(k, s.count("slots", 1000));
        break;
    }
    }
    return st;
}

FrameConfig read_frame(const Section &s)
{
    s.allow({"t_frame", "t_pilot", "t_prev", "estimation_noise"});
    FrameConfig f;
    f.t_frame_s = s.number("t_frame", f.t_frame_s);
    f.t_pilot_s = s.number("t_pilot", f.t_pilot_s);
    f.t_prev_s = s.number("t_prev", f.t_prev_s);
    f.estimation_noise = s.number("estimation_noise", f.estimation_noise);
    try
    {
        f.validate();
    }
    catch (const std::invalid_argument &e)
    {
        throw ConfigError(s.path(), e.what());
    }
    return f;
}

json strategy_to_json(const Strategy &st)
{
    switch (st.family)
    {
    case StrategyFamily::waveform:
        return {{"family", "waveform"}, {"method", std::string(to_string(st.design.tag))}, {"beta", st.design.beta}};
    case StrategyFamily::modulation:
        return {{"family", "modulation"}, {"scheme", scheme_name(st.scheme)}, {"l", st.scheme.l},
                {"symbols", st.symbols}};
    case StrategyFamily::diversity: {
        json j = {{"family", "diversity"},
                  {"carrier", std::string(carrier_name(st.td.carrier))},
                  {"tones", st.td.tones},
                  {"slots", st.symbols}};
        if (st.td.carrier == TdCarrier::modulated)
        {
            j["scheme"] = scheme_name(st.td.scheme);
            j["l"] = st.td.scheme.l;
        }
        return j;
    }
    }
    return {};
}

} // namespace

ExperimentSpec spec_from_json(const json &doc)
{
    const Section root(doc, "");
    root.allow({"name", "strategy", "baseline", "channel", "P", "rectenna", "trials", "seed", "epsilon",
                "estimation_noise", "mobility", "sweep"});

    ExperimentSpec spec;
    if (root.has("name"))
        spec.name = root.text("name");
    spec.strategy = read_strategy(root.sub("strategy"));
    if (root.has("baseline"))
        spec.baseline = read_strategy(root.sub("baseline"));

    if (root.has("channel"))
    {
        const Section c = root.sub("channel");
        c.allow({"kind", "N", "M", "taps", "f0_hz", "spacing_hz"});
        if (c.has("kind"))
            spec.channel.kind = c.parse("kind", channel_kind_from_string);
        spec.channel.tones = c.count("N", spec.channel.tones);
        spec.channel.antennas = c.count("M", spec.channel.antennas);
        spec.channel.taps = c.count("taps", spec.channel.taps);
        spec.channel.f0_hz = c.number("f0_hz", spec.channel.f0_hz);
        spec.channel.spacing_hz = c.number("spacing_hz", spec.channel.spacing_hz);
    }
    if (spec.strategy.family == StrategyFamily::modulation && !(root.has("channel") && root.sub("channel").has("N")))
        spec.channel.tones = 1;
    if (spec.strategy.family == StrategyFamily::diversity && !(root.has("channel") && root.sub("channel").has("N")))
        spec.channel.tones = spec.strategy.td.tone_count();

    spec.power_w = root.number("P", spec.power_w);
    if (root.has("rectenna"))
    {
        const Section r = root.sub("rectenna");
        r.allow({"k2", "k4", "r_ant", "diode"});
        spec.params.r_ant = r.number("r_ant", spec.params.r_ant);
        if (r.has("diode"))
        {
            const Section d = r.sub("diode");
            d.allow({"saturation_current_a", "ideality", "thermal_voltage_v"});
            DiodeParams diode;
            diode.saturation_current_a = d.number("saturation_current_a");
            diode.ideality = d.number("ideality", 1.0);
            diode.thermal_voltage_v = d.number("thermal_voltage_v");
            if (r.has("k2") || r.has("k4"))
                throw ConfigError(join(r.path(), "diode"), "give either diode parameters or k2/k4, not both");
            try
            {
                spec.params = RectennaParams::from_diode(diode, spec.params.r_ant);
            }
            catch (const std::exception &e)
            {
                throw ConfigError(d.path(), e.what());
            }
        }
        else
        {
            spec.params.k2 = r.number("k2", spec.params.k2);
            spec.params.k4 = r.number("k4", spec.params.k4);
        }
    }

    if (root.has("trials"))
        spec.trials = static_cast<std::size_t>(root.integer("trials"));
    if (root.has("seed"))
        spec.seed = root.integer("seed");
    if (root.has("epsilon"))
        spec.epsilon = root.number("epsilon");
    spec.estimation_noise = root.number("estimation_noise", spec.estimation_noise);

    if (root.has("mobility"))
    {
        const Section m = root.sub("mobility");
        m.allow({"velocity_mps", "carrier_hz", "frames", "frame"});
        MobilitySettings mob;
        mob.velocity_mps = m.number("velocity_mps", mob.velocity_mps);
        mob.carrier_hz = m.number("carrier_hz", mob.carrier_hz);
        mob.frames = m.count("frames", mob.frames);
        if (m.has("frame"))
            mob.frame = read_frame(m.sub("frame"));
        spec.mobility = mob;
    }

    if (root.has("sweep"))
    {
        const Section s = root.sub("sweep");
        s.allow({"axis", "values"});
        SweepAxis axis;
        axis.kind = s.parse("axis", sweep_axis_from_string);
        const json &values = s.raw("values");
        if (!values.is_array())
            throw ConfigError("sweep.values", "expected an array of numbers");
        for (const auto &v : values)
        {
            if (!v.is_number())
                throw ConfigError("sweep.values", "expected an array of numbers");
            axis.values.push_back(v.get<double>());
        }
        spec.sweep = axis;
    }

    try
    {
        spec.validate();
    }
    catch (const std::exception &e)
    {
        throw ConfigError("", e.what());
    }
    return spec;
}

ExperimentSpec load_spec(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("", "cannot open config file " + path.string());
    json doc;
    try
    {
        doc = json::parse(in);
    }
    catch (const json::parse_error &e)
    {
        throw ConfigError("", path.string() + ": " + e.what());
    }
    return spec_from_json(doc);
}

json spec_to_json(const ExperimentSpec &spec)
{
    json j = {{"name", spec.name},
              {"strategy", strategy_to_json(spec.strategy)},
              {"channel",
               {{"kind", std::string(to_string(spec.channel.kind))},
                {"N", spec.channel.tones},
                {"M", spec.channel.antennas},
                {"taps", spec.channel.taps},
                {"f0_hz", spec.channel.f0_hz},
                {"spacing_hz", spec.channel.spacing_hz}}},
              {"P", spec.power_w},
              {"rectenna", {{"k2", spec.params.k2}, {"k4", spec.params.k4}, {"r_ant", spec.params.r_ant}}},
              {"trials", spec.trials},
              {"seed", spec.seed},
              {"estimation_noise", spec.estimation_noise}};
    if (spec.baseline)
        j["baseline"] = strategy_to_json(*spec.baseline);
    if (spec.epsilon)
        j["epsilon"] = *spec.epsilon;
    if (spec.mobility)
        j["mobility"] = {{"velocity_mps", spec.mobility->velocity_mps},
                         {"carrier_hz", spec.mobility->carrier_hz},
                         {"frames", spec.mobility->frames},
                         {"frame",
                          {{"t_frame", spec.mobility->frame.t_frame_s},
                           {"t_pilot", spec.mobility->frame.t_pilot_s},
                           {"t_prev", spec.mobility->frame.t_prev_s},
                           {"estimation_noise", spec.mobility->frame.estimation_noise}}}};
    if (spec.sweep)
        j["sweep"] = {{"axis", std::string(to_string(spec.sweep->kind))}, {"values", spec.sweep->values}};
    return j;
}

} // namespace wpt

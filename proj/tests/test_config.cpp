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
#include "wpt/presets.hpp"
#include "wpt/random.hpp"
#include "wpt/serialization.hpp"

#include <doctest.h>

#include <sstream>

using namespace wpt;

TEST_CASE("channel json round trip")
{
    RandomStream rng(1);
    const auto h = sample_channel({ChannelKind::selective, 4, 2, 3}, rng);
    const json j = channel_to_json(h);
    CHECK(j["kind"] == "selective");
    CHECK(j["N"] == 4);
    CHECK(j["M"] == 2);
    CHECK(j["gains"].size() == 8);
    CHECK(j["gains"][3][0] == h(1, 1).real());
    const auto back = channel_from_json(json::parse(j.dump()));
    CHECK(back.gains == h.gains);
    CHECK(back.f0_hz == h.f0_hz);
    CHECK(back.taps == 3);

    json bad = j;
    bad["gains"].erase(0);
    CHECK_THROWS_AS(channel_from_json(bad), FormatError);
    bad = j;
    bad.erase("spacing_hz");
    try
    {
        channel_from_json(bad);
        FAIL("expected FormatError");
    }
    catch (const FormatError &e)
    {
        CHECK(e.key() == "spacing_hz");
    }
}

TEST_CASE("waveform and tone vector json")
{
    const auto w = design_waveform({DesignTag::up}, 2, 1, 1.0);
    const json j = waveform_to_json(w);
    CHECK(j["method"] == "UP");
    CHECK(j["P"] == 1.0);
    const auto back = waveform_from_json(j);
    CHECK(back.weights == w.weights);
    CHECK(back.method.tag == DesignTag::up);

    const auto t = tone_vector_from_json(json::parse(R"({"tones": [[1, 0], [0, 1]]})"));
    CHECK(t.size() == 2);
    CHECK(t.base_frequency_hz == 2.0);
    CHECK(tone_vector_to_json(t)["tones"][1][1] == 1.0);
    CHECK_THROWS_AS(tone_vector_from_json(json::parse(R"({"tones": [[1, 0, 3]]})")), FormatError);
}

TEST_CASE("csv report")
{
    ZdcReport r;
    r.experiment = "e";
    r.strategy = "SMF(beta=3)";
    r.channel = ChannelKind::selective;
    r.tones = 16;
    r.antennas = 1;
    r.beta = 3.0;
    r.mean = 0.125;
    r.ci95 = 0.5;
    r.trials = 10;
    r.seed = 7;
    r.baseline_strategy = "UP";
    r.baseline_mean = 0.1;
    r.baseline_ci95 = 0.01;
    std::ostringstream os;
    write_csv(os, report_rows(r));
    CHECK(os.str() == "experiment,strategy,channel,N,M,beta,l,epsilon,velocity_mps,zdc_mean,zdc_ci95,trials,seed\n"
                      "e,SMF(beta=3),selective,16,1,3,,,,0.125,0.5,10,7\n"
                      "e,UP,selective,16,1,,,,,0.1,0.01,10,7\n");
    const json j = rows_to_json(report_rows(r));
    CHECK(j.size() == 2);
    CHECK(j[0]["beta"] == 3.0);
    CHECK(j[1]["beta"].is_null());
    CHECK(j[1]["zdc_mean"] == 0.1);
}

TEST_CASE("shortest round-trip number formatting")
{
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1e-20) == "1e-20");
    const double x = 2.0 / 3.0;
    CHECK(std::stod(format_double(x)) == x);
}

TEST_CASE("experiment config")
{
    const json doc = json::parse(R"({
        "name": "demo",
        "strategy": {"method": "smf", "beta": 3},
        "baseline": {"method": "up"},
        "channel": {"kind": "fs", "N": 8, "taps": 4},
        "P": 0.5,
        "trials": 12,
        "seed": 99,
        "epsilon": 0.5,
        "sweep": {"axis": "N", "values": [4, 8]}
    })");
    const auto s = spec_from_json(doc);
    CHECK(s.name == "demo");
    CHECK(s.strategy.design.tag == DesignTag::smf);
    CHECK(s.strategy.design.beta == 3.0);
    CHECK(s.baseline->design.tag == DesignTag::up);
    CHECK(s.channel.kind == ChannelKind::selective);
    CHECK(s.channel.tones == 8);
    CHECK(s.channel.taps == 4);
    CHECK(s.power_w == 0.5);
    CHECK(s.trials == 12);
    CHECK(s.seed == 99);
    CHECK(*s.epsilon == 0.5);
    CHECK(s.sweep->values == std::vector<double>{4, 8});

    const auto again = spec_from_json(spec_to_json(s));
    CHECK(spec_to_json(again) == spec_to_json(s));
}

TEST_CASE("config errors name the offending key")
{
    auto key_of = [](const char *text) {
        try
        {
            spec_from_json(json::parse(text));
        }
        catch (const ConfigError &e)
        {
            return e.key();
        }
        return std::string("<no error>");
    };
    CHECK(key_of(R"({"strategy": {"method": "up", "bta": 1}})") == "strategy.bta");
    CHECK(key_of(R"({"strategy": {"method": "up"}, "trails": 5})") == "trails");
    CHECK(key_of(R"({"strategy": {"method": "optimal"}})") == "strategy.method");
    CHECK(key_of(R"({"strategy": {"method": "up"}, "channel": {"N": "many"}})") == "channel.N");
    CHECK(key_of(R"({"strategy": {"method": "up"}, "channel": {"kind": "rician"}})") == "channel.kind");
    CHECK(key_of(R"({"channel": {}})") == "strategy");
    CHECK(key_of(R"({"strategy": {"method": "up"}, "mobility": {"frame": {"t_prev": 2}}})") == "mobility.frame");
    CHECK(key_of(R"({"strategy": {"method": "up"}, "sweep": {"axis": "N", "values": [1, "x"]}})") == "sweep.values");
    CHECK(key_of(R"({"strategy": {"method": "up"}, "trials": 0})") == "");
    CHECK(key_of(R"([1, 2])") == "");
}

TEST_CASE("modulation and diversity configs")
{
    const auto m = spec_from_json(json::parse(
        R"({"strategy": {"family": "modulation", "scheme": "flash", "l": 3}, "channel": {"kind": "unit"}})"));
    CHECK(m.strategy.scheme.l == 3.0);
    CHECK(m.channel.tones == 1);

    const auto d = spec_from_json(json::parse(
        R"({"strategy": {"family": "diversity", "carrier": "multisine", "tones": 4}, "channel": {"M": 2}})"));
    CHECK(d.strategy.td.tones == 4);
    CHECK(d.channel.tones == 4);
}

TEST_CASE("presets")
{
    const auto &all = presets();
    std::vector<std::string> names;
    for (const auto &p : all)
        names.push_back(p.name);
    CHECK(names == std::vector<std::string>{"fig6a", "fig6b", "fig6c", "fig7", "fig8", "fig9", "fig10", "fig12",
                                            "fig13"});
    for (const auto &p : all)
    {
        INFO(p.name);
        const auto specs = p.specs(5);
        CHECK(!specs.empty());
        for (const auto &s : specs)
        {
            CHECK(s.power_w == 1.0);
            CHECK(s.seed == 5);
            CHECK(s.params.k2 == RectennaParams{}.k2);
        }
    }
    CHECK_THROWS_AS(find_preset("fig11"), std::invalid_argument);
}

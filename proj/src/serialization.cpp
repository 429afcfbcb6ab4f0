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

#include "wpt/serialization.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace wpt
{

std::string format_double(double v)
{
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

namespace
{

const json &field(const json &j, const char *key)
{
    if (!j.is_object())
        throw FormatError("", "expected a JSON object");
    const auto it = j.find(key);
    if (it == j.end())
        throw FormatError(key, "missing");
    return *it;
}

double number(const json &j, const char *key)
{
    const json &v = field(j, key);
    if (!v.is_number())
        throw FormatError(key, "expected a number");
    return v.get<double>();
}

std::size_t count(const json &j, const char *key)
{
    const json &v = field(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        throw FormatError(key, "expected a non-negative integer");
    return v.get<std::size_t>();
}

std::string text(const json &j, const char *key)
{
    const json &v = field(j, key);
    if (!v.is_string())
        throw FormatError(key, "expected a string");
    return v.get<std::string>();
}

void emit_optional(std::ostream &os, const std::optional<double> &v)
{
    if (v)
        os << format_double(*v);
}

// Quotes a CSV field only when it needs it.
std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

ReportRow row_from(const ZdcReport &r, const std::string &strategy, double mean, double ci)
{
    ReportRow row;
    row.experiment = r.experiment;
    row.strategy = strategy;
    row.channel = std::string(to_string(r.channel));
    row.tones = r.tones;
    row.antennas = r.antennas;
    row.beta = r.beta;
    row.flash_l = r.flash_l;
    row.epsilon = r.epsilon;
    row.velocity_mps = r.velocity_mps;
    row.zdc_mean = mean;
    row.zdc_ci95 = ci;
    row.trials = r.trials;
    row.seed = r.seed;
    return row;
}

} // namespace

json complex_array(const std::vector<cplx> &v)
{
    json a = json::array();
    for (const cplx &c : v)
        a.push_back({c.real(), c.imag()});
    return a;
}

std::vector<cplx> complex_array_from_json(const json &j, const std::string &key)
{
    if (!j.is_array())
        throw FormatError(key, "expected an array of [re, im] pairs");
    std::vector<cplx> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
    {
        const json &p = j[i];
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
            throw FormatError(key + "[" + std::to_string(i) + "]", "expected [re, im]");
        out.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
    return out;
}

json channel_to_json(const ChannelFreqResponse &h)
{
    return {{"kind", std::string(to_string(h.kind))},
            {"N", h.tones},
            {"M", h.antennas},
            {"f0_hz", h.f0_hz},
            {"spacing_hz", h.spacing_hz},
            {"taps", h.taps},
            {"gains", complex_array(h.gains)}};
}

ChannelFreqResponse channel_from_json(const json &j)
{
    ChannelKind kind;
    try
    {
        kind = channel_kind_from_string(text(j, "kind"));
    }
    catch (const std::invalid_argument &e)
    {
        throw FormatError("kind", e.what());
    }
    ChannelFreqResponse h(kind, count(j, "N"), count(j, "M"), number(j, "f0_hz"), number(j, "spacing_hz"));
    if (j.contains("taps"))
        h.taps = count(j, "taps");
    h.gains = complex_array_from_json(field(j, "gains"), "gains");
    if (h.gains.size() != h.tones * h.antennas)
        throw FormatError("gains", "expected N*M = " + std::to_string(h.tones * h.antennas) + " entries, got " +
                                       std::to_string(h.gains.size()));
    h.validate();
    return h;
}

json waveform_to_json(const WaveformWeights &w)
{
    return {{"method", std::string(to_string(w.method.tag))},
            {"beta", w.method.beta},
            {"P", w.power_w},
            {"N", w.tones},
            {"M", w.antennas},
            {"weights", complex_array(w.weights)}};
}

WaveformWeights waveform_from_json(const json &j)
{
    WaveformWeights w;
    try
    {
        w.method.tag = design_tag_from_string(text(j, "method"));
    }
    catch (const std::invalid_argument &e)
    {
        throw FormatError("method", e.what());
    }
    w.method.beta = j.contains("beta") ? number(j, "beta") : 0.0;
    w.power_w = number(j, "P");
    w.weights = complex_array_from_json(field(j, "weights"), "weights");
    w.antennas = j.contains("M") ? count(j, "M") : 1;
    w.tones = j.contains("N") ? count(j, "N") : (w.antennas ? w.weights.size() / w.antennas : 0);
    if (w.antennas == 0 || w.tones * w.antennas != w.weights.size())
        throw FormatError("weights", "size does not match N*M");
    return w;
}

json tone_vector_to_json(const ToneVector &t)
{
    return {{"f0_hz", t.base_frequency_hz}, {"spacing_hz", t.spacing_hz}, {"tones", complex_array(t.coefficients)}};
}

ToneVector tone_vector_from_json(const json &j)
{
    auto coeffs = complex_array_from_json(field(j, "tones"), "tones");
    ToneVector t = make_tone_vector(std::move(coeffs), j.contains("spacing_hz") ? number(j, "spacing_hz") : 1.0);
    if (j.contains("f0_hz"))
        t.base_frequency_hz = number(j, "f0_hz");
    t.validate();
    return t;
}

std::vector<ReportRow> report_rows(const ZdcReport &r)
{
    std::vector<ReportRow> rows{row_from(r, r.strategy, r.mean, r.ci95)};
    if (r.baseline_mean)
    {
        ReportRow b = row_from(r, r.baseline_strategy.value_or("baseline"), *r.baseline_mean,
                               r.baseline_ci95.value_or(0.0));
        b.beta.reset();
        b.flash_l.reset();
        rows.push_back(std::move(b));
    }
    return rows;
}

std::vector<ReportRow> report_rows(const MobilityReport &r)
{
    return {row_from(r.adaptive, r.adaptive.strategy, r.adaptive.mean, r.adaptive.ci95),
            row_from(r.baseline, r.baseline.strategy, r.baseline.mean, r.baseline.ci95)};
}

std::vector<ReportRow> report_rows(const SweepTable &t)
{
    std::vector<ReportRow> rows;
    for (const auto &p : t.points)
    {
        auto part = p.mobility ? report_rows(*p.mobility) : report_rows(p.report);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return rows;
}

void write_csv(std::ostream &os, const std::vector<ReportRow> &rows)
{
    os << report_csv_header << '\n';
    for (const auto &r : rows)
    {
        os << csv_field(r.experiment) << ',' << csv_field(r.strategy) << ',' << r.channel << ',' << r.tones << ','
           << r.antennas << ',';
        emit_optional(os, r.beta);
        os << ',';
        emit_optional(os, r.flash_l);
        os << ',';
        emit_optional(os, r.epsilon);
        os << ',';
        emit_optional(os, r.velocity_mps);
        os << ',' << format_double(r.zdc_mean) << ',' << format_double(r.zdc_ci95) << ',' << r.trials << ','
           << r.seed << '\n';
    }
}

json rows_to_json(const std::vector<ReportRow> &rows)
{
    auto opt = [](const std::optional<double> &v) { return v ? json(*v) : json(nullptr); };
    json out = json::array();
    for (const auto &r : rows)
    {
        out.push_back({{"experiment", r.experiment},
                       {"strategy", r.strategy},
                       {"channel", r.channel},
                       {"N", r.tones},
                       {"M", r.antennas},
                       {"beta", opt(r.beta)},
                       {"l", opt(r.flash_l)},
                       {"epsilon", opt(r.epsilon)},
                       {"velocity_mps", opt(r.velocity_mps)},
                       {"zdc_mean", r.zdc_mean},
                       {"zdc_ci95", r.zdc_ci95},
                       {"trials", r.trials},
                       {"seed", r.seed}});
    }
    return out;
}

} // namespace wpt

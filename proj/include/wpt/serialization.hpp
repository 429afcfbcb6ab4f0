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
#include "wpt/harness.hpp"
#include "wpt/rectenna.hpp"
#include "wpt/waveform.hpp"

#include <json.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace wpt
{

using json = nlohmann::json;

/// Malformed serialized input. key() names the offending field ("" when the
/// document as a whole is unusable).
class FormatError : public std::runtime_error
{
  public:
    FormatError(std::string key, const std::string &what)
        : std::runtime_error(key.empty() ? what : "'" + key + "': " + what), key_(std::move(key))
    {
    }
    const std::string &key() const noexcept { return key_; }

  private:
    std::string key_;
};

// {kind, N, M, f0_hz, spacing_hz, gains: [[re, im], ...]} row-major by (n, m)
json channel_to_json(const ChannelFreqResponse &h);
ChannelFreqResponse channel_from_json(const json &j);

// {method, beta, P, N, M, weights: [[re, im], ...]} row-major by (n, m)
json waveform_to_json(const WaveformWeights &w);
WaveformWeights waveform_from_json(const json &j);

// {f0_hz, spacing_hz, tones: [[re, im], ...]}
json tone_vector_to_json(const ToneVector &t);
ToneVector tone_vector_from_json(const json &j);

json complex_array(const std::vector<cplx> &v);
std::vector<cplx> complex_array_from_json(const json &j, const std::string &key);

inline constexpr const char *report_csv_header =
    "experiment,strategy,channel,N,M,beta,l,epsilon,velocity_mps,zdc_mean,zdc_ci95,trials,seed";

/// One output row per evaluated strategy.
struct ReportRow
{
    std::string experiment;
    std::string strategy;
    std::string channel;
    std::size_t tones = 0;
    std::size_t antennas = 0;
    std::optional<double> beta;
    std::optional<double> flash_l;
    std::optional<double> epsilon;
    std::optional<double> velocity_mps;
    double zdc_mean = 0.0;
    double zdc_ci95 = 0.0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
};

// A report with a baseline, and every mobility report, yields two rows: the
// strategy and then the baseline.
std::vector<ReportRow> report_rows(const ZdcReport &r);
std::vector<ReportRow> report_rows(const MobilityReport &r);
std::vector<ReportRow> report_rows(const SweepTable &t);

void write_csv(std::ostream &os, const std::vector<ReportRow> &rows);
json rows_to_json(const std::vector<ReportRow> &rows);

/// Shortest decimal form that reads back to the same double.
std::string format_double(double v);

} // namespace wpt

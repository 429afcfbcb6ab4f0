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
#include "wpt/diversity.hpp"
#include "wpt/modulation.hpp"
#include "wpt/rectenna.hpp"
#include "wpt/waveform.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wpt
{

enum class StrategyFamily
{
    waveform,
    modulation,
    diversity
};

/// What the transmitter sends in each trial.
struct Strategy
{
    StrategyFamily family = StrategyFamily::waveform;
    DesignMethod design;     // waveform
    ModulationScheme scheme; // modulation
    TdKind td;               // diversity
    std::size_t symbols = 1000; // symbols (modulation) or phase slots (diversity) per trial

    static Strategy waveform(DesignMethod method);
    static Strategy modulation(ModulationScheme scheme, std::size_t symbols = 1000);
    static Strategy diversity(TdKind kind, std::size_t slots = 1000);

    std::string label() const;
};

/// Channel acquisition frame: pilots, then the previous design while the new
/// one is computed, then the current design.
struct FrameConfig
{
    double t_frame_s = 1.0;
    double t_pilot_s = 512e-6;
    double t_prev_s = 0.035;
    double estimation_noise = 0.0; // LS pilot noise variance; 0 = perfect estimate

    void validate() const;
    // Fraction of the frame radiating the design for the current frame.
    double duty_cycle() const { return (t_frame_s - t_pilot_s - t_prev_s) / t_frame_s; }
    double pilot_fraction() const { return t_pilot_s / t_frame_s; }
    double prev_fraction() const { return t_prev_s / t_frame_s; }
};

struct MobilitySettings
{
    double velocity_mps = 0.0;
    double carrier_hz = 2.45e9;
    std::size_t frames = 20; // frames per trial trajectory
    FrameConfig frame;

    MobilityProfile profile() const { return {velocity_mps, carrier_hz, frame.t_frame_s}; }
};

enum class SweepAxisKind
{
    tones,
    antennas,
    beta,
    flash_l,
    velocity,
    epsilon
};

std::string_view to_string(SweepAxisKind axis);
SweepAxisKind sweep_axis_from_string(std::string_view name);

struct SweepAxis
{
    SweepAxisKind kind = SweepAxisKind::tones;
    std::vector<double> values;
};

struct ExperimentSpec
{
    std::string name = "experiment";
    Strategy strategy;
    std::optional<Strategy> baseline; // waveform family only, evaluated on the same channels
    ChannelSpec channel;
    double power_w = 1.0;
    RectennaParams params;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    // Delayed CSIT: the design sees h_{k-1}, the rectenna sees
    // h_k = eps h_{k-1} + sqrt(1 - eps^2) g_k. Absent = current CSIT.
    std::optional<double> epsilon;
    double estimation_noise = 0.0;
    std::optional<MobilitySettings> mobility;
    std::optional<SweepAxis> sweep;

    void validate() const;
};

/// Redraws allowed per trial when a channel makes the design undefined.
inline constexpr std::size_t max_redraws = 100;

struct ZdcReport
{
    // labels of the evaluated point
    std::string experiment;
    std::string strategy;
    ChannelKind channel = ChannelKind::flat;
    std::size_t tones = 0;
    std::size_t antennas = 0;
    std::optional<double> beta;
    std::optional<double> flash_l;
    std::optional<double> epsilon;
    std::optional<double> velocity_mps;

    double mean = 0.0;
    double ci95 = 0.0;
    double second_mean = 0.0;
    double fourth_mean = 0.0;
    std::size_t trials = 0;
    std::size_t redraws = 0;
    std::uint64_t seed = 0;
    std::vector<double> samples; // per-trial z_DC in trial order

    // Present when the experiment carries a baseline strategy.
    std::optional<std::string> baseline_strategy;
    std::optional<double> baseline_mean;
    std::optional<double> baseline_ci95;
    std::optional<double> gain; // mean / baseline_mean
    std::optional<double> gain_ci95;
};

struct MobilityReport
{
    ZdcReport adaptive;
    ZdcReport baseline;
    double gain = 0.0; // adaptive mean / baseline mean
    double gain_ci95 = 0.0;
    double correlation = 0.0; // raw Jakes J0 for the frame interval
    double epsilon = 0.0;     // coefficient used by the recursion
    double duty_cycle = 0.0;
    double pilot_fraction = 0.0;
    double prev_fraction = 0.0;
    std::vector<double> adaptive_series; // mean z_DC per frame index
    std::vector<double> baseline_series;
};

struct SweepPoint
{
    double value = 0.0;
    ZdcReport report;
    std::optional<MobilityReport> mobility;
};

struct SweepTable
{
    SweepAxisKind axis = SweepAxisKind::tones;
    std::vector<SweepPoint> points;
};

enum class Execution
{
    serial,
    parallel
};

/// Per trial i (stream (seed, i)): draw a channel, design on the current
/// (or delayed) CSIT, evaluate z_DC, aggregate in trial order.
ZdcReport run_monte_carlo(const ExperimentSpec &spec, Execution exec = Execution::parallel);

/// Delayed-CSIT frame loop: each frame designs on the estimate of the
/// previous frame's channel and is evaluated on the evolved channel. The
/// baseline (UP unless the experiment says otherwise) sees the same channels.
MobilityReport run_mobility(const ExperimentSpec &spec, Execution exec = Execution::parallel);

/// One run per axis value. Every point reuses the experiment's seed, so trial i
/// draws from the same substream at every point.
SweepTable sweep(const ExperimentSpec &spec, Execution exec = Execution::parallel);

/// Copy of the experiment with one sweep coordinate applied (and the sweep removed).
ExperimentSpec apply_sweep_value(const ExperimentSpec &spec, SweepAxisKind axis, double value);

} // namespace wpt

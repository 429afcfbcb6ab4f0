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

#include "wpt/harness.hpp"

#include "wpt/errors.hpp"
#include "wpt/stats.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>

namespace wpt
{

Strategy Strategy::waveform(DesignMethod method)
{
    Strategy s;
    s.family = StrategyFamily::waveform;
    s.design = method;
    return s;
}

Strategy Strategy::modulation(ModulationScheme scheme, std::size_t symbols)
{
    Strategy s;
    s.family = StrategyFamily::modulation;
    s.scheme = scheme;
    s.symbols = symbols;
    return s;
}

Strategy Strategy::diversity(TdKind kind, std::size_t slots)
{
    Strategy s;
    s.family = StrategyFamily::diversity;
    s.td = kind;
    s.symbols = slots;
    return s;
}

std::string Strategy::label() const
{
    switch (family)
    {
    case StrategyFamily::waveform:
        return design.label();
    case StrategyFamily::modulation:
        return scheme.label();
    case StrategyFamily::diversity:
        return td.label();
    }
    return "?";
}

void FrameConfig::validate() const
{
    if (!(t_frame_s > 0.0) || !(t_pilot_s >= 0.0) || !(t_prev_s >= 0.0))
        throw std::invalid_argument("frame: durations must be non-negative and t_frame positive");
    if (!(t_pilot_s + t_prev_s < t_frame_s))
        throw std::invalid_argument("frame: t_pilot + t_prev must be shorter than t_frame");
    if (!(estimation_noise >= 0.0))
        throw std::invalid_argument("frame: estimation noise variance must be >= 0");
}

std::string_view to_string(SweepAxisKind axis)
{
    switch (axis)
    {
    case SweepAxisKind::tones:
        return "N";
    case SweepAxisKind::antennas:
        return "M";
    case SweepAxisKind::beta:
        return "beta";
    case SweepAxisKind::flash_l:
        return "l";
    case SweepAxisKind::velocity:
        return "velocity";
    case SweepAxisKind::epsilon:
        return "epsilon";
    }
    return "?";
}

SweepAxisKind sweep_axis_from_string(std::string_view name)
{
    if (name == "N")
        return SweepAxisKind::tones;
    if (name == "M")
        return SweepAxisKind::antennas;
    if (name == "beta")
        return SweepAxisKind::beta;
    if (name == "l")
        return SweepAxisKind::flash_l;
    if (name == "velocity")
        return SweepAxisKind::velocity;
    if (name == "epsilon")
        return SweepAxisKind::epsilon;
    throw std::invalid_argument("unknown sweep axis '" + std::string(name) + "'");
}

void ExperimentSpec::validate() const
{
    if (trials < 1)
        throw std::invalid_argument(name + ": trials must be >= 1");
    if (!(power_w > 0.0))
        throw std::invalid_argument(name + ": power must be positive");
    channel.validate();
    params.validate();
    if (epsilon && !(*epsilon >= 0.0 && *epsilon < 1.0))
        throw std::invalid_argument(name + ": epsilon must lie in [0, 1)");
    if ((epsilon || mobility) && channel.kind == ChannelKind::unit)
        throw std::invalid_argument(name + ": the unit channel cannot evolve in time");
    if (!(estimation_noise >= 0.0))
        throw std::invalid_argument(name + ": estimation noise variance must be >= 0");

    switch (strategy.family)
    {
    case StrategyFamily::waveform:
        if (!strategy.design.is_miso() && strategy.design.tag != DesignTag::up && channel.antennas != 1)
            throw std::invalid_argument(name + ": " + strategy.label() + " is a single-antenna design");
        break;
    case StrategyFamily::modulation:
        strategy.scheme.validate();
        if (channel.tones != 1 || channel.antennas != 1)
            throw std::invalid_argument(name + ": modulated carriers use N = 1 and M = 1");
        if (strategy.symbols < 1)
            throw std::invalid_argument(name + ": symbols per trial must be >= 1");
        break;
    case StrategyFamily::diversity:
        if (strategy.td.carrier == TdCarrier::modulated)
            strategy.td.scheme.validate();
        if (channel.tones != strategy.td.tone_count())
            throw std::invalid_argument(name + ": channel N must equal the diversity carrier's tone count");
        if (strategy.symbols < 1)
            throw std::invalid_argument(name + ": slots per trial must be >= 1");
        break;
    }
    if (baseline)
    {
        if (baseline->family != StrategyFamily::waveform || strategy.family != StrategyFamily::waveform)
            throw std::invalid_argument(name + ": baselines are supported for waveform strategies only");
    }
    if (mobility)
    {
        if (strategy.family != StrategyFamily::waveform)
            throw std::invalid_argument(name + ": mobility runs need a waveform strategy");
        mobility->frame.validate();
        mobility->profile().validate();
        if (mobility->frames < 1)
            throw std::invalid_argument(name + ": mobility needs at least one frame");
    }
    if (sweep)
    {
        if (sweep->values.empty())
            throw std::invalid_argument(name + ": sweep has no values");
        for (std::size_t i = 0; i < sweep->values.size(); ++i)
        {
            if (!std::isfinite(sweep->values[i]))
                throw std::invalid_argument(name + ": sweep values must be finite");
            if (i > 0 && !(sweep->values[i] > sweep->values[i - 1]))
                throw std::invalid_argument(name + ": sweep values must be sorted ascending");
        }
    }
}

namespace
{

struct TrialSample
{
    double z = 0.0;
    double second = 0.0;
    double fourth = 0.0;
    double baseline = 0.0;
    std::size_t redraws = 0;
};

ChannelFreqResponse estimate(const ChannelFreqResponse &h, double noise, RandomStream &rng)
{
    if (noise <= 0.0)
        return h;
    const std::vector<cplx> pilot(h.tones, cplx{1.0, 0.0});
    return ls_estimate(pilot, observe_pilots(h, pilot, noise, rng));
}

ZdcTerms evaluate_waveform(const DesignMethod &method, const ChannelFreqResponse &basis,
                           const ChannelFreqResponse &actual, double power_w, const RectennaParams &params)
{
    const auto w = design_waveform(method, basis, power_w);
    return zdc_terms_coefficients(received_tones(w, actual).coefficients, params);
}

TrialSample evaluate_once(const ExperimentSpec &spec, RandomStream &rng)
{
    TrialSample out;
    ChannelFreqResponse actual = sample_channel(spec.channel, rng);

    switch (spec.strategy.family)
    {
    case StrategyFamily::waveform: {
        ChannelFreqResponse basis = actual;
        if (spec.epsilon)
            actual = evolve_gauss_markov(basis, *spec.epsilon, rng);
        basis = estimate(basis, spec.estimation_noise, rng);
        const auto z = evaluate_waveform(spec.strategy.design, basis, actual, spec.power_w, spec.params);
        out.second = z.second;
        out.fourth = z.fourth;
        if (spec.baseline)
            out.baseline = evaluate_waveform(spec.baseline->design, basis, actual, spec.power_w, spec.params).total();
        break;
    }
    case StrategyFamily::modulation: {
        const cplx gain = actual(0, 0) * std::sqrt(2.0 * spec.power_w);
        CompensatedSum s2;
        CompensatedSum s4;
        for (std::size_t k = 0; k < spec.strategy.symbols; ++k)
        {
            const auto z = zdc_terms_single_tone(gain * draw_symbol(spec.strategy.scheme, rng), spec.params);
            s2.add(z.second);
            s4.add(z.fourth);
        }
        const double n = static_cast<double>(spec.strategy.symbols);
        out.second = s2.value() / n;
        out.fourth = s4.value() / n;
        break;
    }
    case StrategyFamily::diversity: {
        const auto schedule = td_phase_schedule(spec.channel.antennas, spec.strategy.symbols, rng);
        const auto signal = td_baseband(spec.strategy.td, schedule, spec.power_w, rng);
        const auto z = td_zdc(signal, actual, spec.params);
        out.second = z.second;
        out.fourth = z.fourth;
        break;
    }
    }
    out.z = out.second + out.fourth;
    return out;
}

// Retries a trial body on degenerate channels, continuing the same stream.
template <class Body> auto with_redraws(Body &&body, std::size_t &redraws)
{
    for (redraws = 0;; ++redraws)
    {
        try
        {
            return body();
        }
        catch (const DegenerateChannelError &)
        {
            if (redraws + 1 >= max_redraws)
                throw;
        }
    }
}

// Runs fn(i) for i in [0, count), serially or with OpenMP, and rethrows the
// exception of the lowest failing index.
template <class Fn> void for_each_trial(std::size_t count, Execution exec, Fn &&fn)
{
    std::vector<std::exception_ptr> errors(count);
    const auto n = static_cast<std::ptrdiff_t>(count);
    if (exec == Execution::parallel)
    {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::ptrdiff_t i = 0; i < n; ++i)
        {
            try
            {
                fn(static_cast<std::size_t>(i));
            }
            catch (...)
            {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    }
    else
    {
        for (std::ptrdiff_t i = 0; i < n; ++i)
        {
            try
            {
                fn(static_cast<std::size_t>(i));
            }
            catch (...)
            {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    }
    for (const auto &e : errors)
        if (e)
            std::rethrow_exception(e);
}

ZdcReport labelled_report(const ExperimentSpec &spec, const Strategy &strategy)
{
    ZdcReport r;
    r.experiment = spec.name;
    r.strategy = strategy.label();
    r.channel = spec.channel.kind;
    r.tones = spec.channel.tones;
    r.antennas = spec.channel.antennas;
    if (strategy.family == StrategyFamily::waveform &&
        (strategy.design.tag == DesignTag::smf || strategy.design.tag == DesignTag::miso_smf))
        r.beta = strategy.design.beta;
    if (strategy.family == StrategyFamily::modulation && strategy.scheme.tag == SchemeTag::flash)
        r.flash_l = strategy.scheme.l;
    if (strategy.family == StrategyFamily::diversity && strategy.td.carrier == TdCarrier::modulated &&
        strategy.td.scheme.tag == SchemeTag::flash)
        r.flash_l = strategy.td.scheme.l;
    r.epsilon = spec.epsilon;
    r.seed = spec.seed;
    r.trials = spec.trials;
    return r;
}

void fill_summary(ZdcReport &r, std::vector<double> samples)
{
    const auto s = summarize(samples);
    r.mean = s.mean;
    r.ci95 = s.ci95;
    r.samples = std::move(samples);
}

} // namespace

ZdcReport run_monte_carlo(const ExperimentSpec &spec, Execution exec)
{
    spec.validate();
    if (spec.mobility)
        throw std::invalid_argument(spec.name + ": use run_mobility for specs with a mobility section");

    std::vector<TrialSample> trials(spec.trials);
    for_each_trial(spec.trials, exec, [&](std::size_t i) {
        RandomStream rng(spec.seed, i);
        std::size_t redraws = 0;
        trials[i] = with_redraws([&] { return evaluate_once(spec, rng); }, redraws);
        trials[i].redraws = redraws;
    });

    ZdcReport r = labelled_report(spec, spec.strategy);
    std::vector<double> z(spec.trials), second(spec.trials), fourth(spec.trials), base(spec.trials);
    for (std::size_t i = 0; i < spec.trials; ++i)
    {
        z[i] = trials[i].z;
        second[i] = trials[i].second;
        fourth[i] = trials[i].fourth;
        base[i] = trials[i].baseline;
        r.redraws += trials[i].redraws;
    }
    r.second_mean = summarize(second).mean;
    r.fourth_mean = summarize(fourth).mean;
    if (spec.baseline)
    {
        const auto b = summarize(base);
        r.baseline_strategy = spec.baseline->label();
        r.baseline_mean = b.mean;
        r.baseline_ci95 = b.ci95;
        const auto g = paired_ratio(z, base);
        r.gain = g.ratio;
        r.gain_ci95 = g.ci95;
    }
    fill_summary(r, std::move(z));
    return r;
}

MobilityReport run_mobility(const ExperimentSpec &spec, Execution exec)
{
    spec.validate();
    if (!spec.mobility)
        throw std::invalid_argument(spec.name + ": spec has no mobility section");
    const MobilitySettings &mob = *spec.mobility;
    const Strategy baseline = spec.baseline.value_or(Strategy::waveform({DesignTag::up, 0.0}));

    MobilityReport out;
    out.correlation = jakes_epsilon(mob.profile());
    out.epsilon = gauss_markov_coefficient(out.correlation);
    out.duty_cycle = mob.frame.duty_cycle();
    out.pilot_fraction = mob.frame.pilot_fraction();
    out.prev_fraction = mob.frame.prev_fraction();

    const std::size_t frames = mob.frames;
    std::vector<double> za(spec.trials * frames), zb(spec.trials * frames);
    std::vector<std::size_t> redraws(spec.trials);

    for_each_trial(spec.trials, exec, [&](std::size_t i) {
        RandomStream rng(spec.seed, i);
        with_redraws(
            [&] {
                ChannelFreqResponse previous = sample_channel(spec.channel, rng);
                for (std::size_t k = 0; k < frames; ++k)
                {
                    const auto basis = estimate(previous, mob.frame.estimation_noise, rng);
                    const auto actual = evolve_gauss_markov(previous, out.epsilon, rng);
                    za[i * frames + k] =
                        evaluate_waveform(spec.strategy.design, basis, actual, spec.power_w, spec.params).total();
                    zb[i * frames + k] =
                        evaluate_waveform(baseline.design, basis, actual, spec.power_w, spec.params).total();
                    previous = actual;
                }
                return 0;
            },
            redraws[i]);
    });

    out.adaptive = labelled_report(spec, spec.strategy);
    out.baseline = labelled_report(spec, baseline);
    for (auto *r : {&out.adaptive, &out.baseline})
    {
        r->epsilon = out.epsilon;
        r->velocity_mps = mob.velocity_mps;
    }

    // Trajectories are independent; frames within one are not, so the
    // confidence intervals use per-trajectory averages.
    std::vector<double> ta(spec.trials), tb(spec.trials);
    for (std::size_t i = 0; i < spec.trials; ++i)
    {
        ta[i] = compensated_sum(std::span<const double>(za).subspan(i * frames, frames)) / static_cast<double>(frames);
        tb[i] = compensated_sum(std::span<const double>(zb).subspan(i * frames, frames)) / static_cast<double>(frames);
        out.adaptive.redraws += redraws[i];
    }
    out.baseline.redraws = out.adaptive.redraws;

    out.adaptive_series.assign(frames, 0.0);
    out.baseline_series.assign(frames, 0.0);
    for (std::size_t k = 0; k < frames; ++k)
    {
        CompensatedSum a, b;
        for (std::size_t i = 0; i < spec.trials; ++i)
        {
            a.add(za[i * frames + k]);
            b.add(zb[i * frames + k]);
        }
        out.adaptive_series[k] = a.value() / static_cast<double>(spec.trials);
        out.baseline_series[k] = b.value() / static_cast<double>(spec.trials);
    }

    const auto g = paired_ratio(ta, tb);
    out.gain = g.ratio;
    out.gain_ci95 = g.ci95;
    fill_summary(out.adaptive, std::move(ta));
    fill_summary(out.baseline, std::move(tb));
    out.adaptive.baseline_strategy = out.baseline.strategy;
    out.adaptive.baseline_mean = out.baseline.mean;
    out.adaptive.baseline_ci95 = out.baseline.ci95;
    out.adaptive.gain = out.gain;
    out.adaptive.gain_ci95 = out.gain_ci95;
    return out;
}

ExperimentSpec apply_sweep_value(const ExperimentSpec &spec, SweepAxisKind axis, double value)
{
    ExperimentSpec s = spec;
    s.sweep.reset();
    auto as_count = [&](const char *what) {
        if (!(value >= 1.0) || value != std::floor(value))
            throw std::invalid_argument(spec.name + ": sweep value for " + what + " must be a positive integer");
        return static_cast<std::size_t>(value);
    };
    switch (axis)
    {
    case SweepAxisKind::tones:
        s.channel.tones = as_count("N");
        if (s.strategy.family == StrategyFamily::diversity && s.strategy.td.carrier == TdCarrier::multisine)
            s.strategy.td.tones = s.channel.tones;
        break;
    case SweepAxisKind::antennas:
        s.channel.antennas = as_count("M");
        break;
    case SweepAxisKind::beta:
        if (s.strategy.family != StrategyFamily::waveform ||
            (s.strategy.design.tag != DesignTag::smf && s.strategy.design.tag != DesignTag::miso_smf))
            throw std::invalid_argument(spec.name + ": a beta sweep needs an SMF strategy");
        s.strategy.design.beta = value;
        break;
    case SweepAxisKind::flash_l:
        if (s.strategy.family == StrategyFamily::modulation && s.strategy.scheme.tag == SchemeTag::flash)
            s.strategy.scheme.l = value;
        else if (s.strategy.family == StrategyFamily::diversity && s.strategy.td.carrier == TdCarrier::modulated &&
                 s.strategy.td.scheme.tag == SchemeTag::flash)
            s.strategy.td.scheme.l = value;
        else
            throw std::invalid_argument(spec.name + ": an l sweep needs a flash strategy");
        break;
    case SweepAxisKind::velocity:
        if (!s.mobility)
            throw std::invalid_argument(spec.name + ": a velocity sweep needs a mobility section");
        s.mobility->velocity_mps = value;
        break;
    case SweepAxisKind::epsilon:
        s.epsilon = value;
        break;
    }
    return s;
}

SweepTable sweep(const ExperimentSpec &spec, Execution exec)
{
    spec.validate();
    if (!spec.sweep)
        throw std::invalid_argument(spec.name + ": spec has no sweep axis");
    SweepTable table;
    table.axis = spec.sweep->kind;
    for (double v : spec.sweep->values)
    {
        SweepPoint p;
        p.value = v;
        const ExperimentSpec point = apply_sweep_value(spec, spec.sweep->kind, v);
        if (point.mobility)
        {
            p.mobility = run_mobility(point, exec);
            p.report = p.mobility->adaptive;
        }
        else
        {
            p.report = run_monte_carlo(point, exec);
        }
        table.points.push_back(std::move(p));
    }
    return table;
}

} // namespace wpt

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

// wptsim: command-line front end for waveform design, z_DC evaluation,
// closed-form scaling laws and Monte Carlo experiments.
//
// Exit status: 0 success, 1 usage error, 2 runtime error.

#include "wpt/config.hpp"
#include "wpt/diversity.hpp"
#include "wpt/errors.hpp"
#include "wpt/harness.hpp"
#include "wpt/modulation.hpp"
#include "wpt/presets.hpp"
#include "wpt/random.hpp"
#include "wpt/rectenna.hpp"
#include "wpt/scaling.hpp"
#include "wpt/serialization.hpp"
#include "wpt/waveform.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace
{

using namespace wpt;

constexpr int exit_usage = 1;
constexpr int exit_runtime = 2;

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct OutputOptions
{
    std::string format = "csv";
    std::string path;

    void add_to(CLI::App *cmd)
    {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("-o,--output", path, "Write to this file instead of stdout");
    }

    void emit(const std::string &text) const
    {
        if (path.empty())
        {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write " + path);
        out << text;
    }
};

struct ParamOptions
{
    RectennaParams params;

    void add_to(CLI::App *cmd)
    {
        cmd->add_option("--k2", params.k2, "Second-order diode coefficient")->capture_default_str();
        cmd->add_option("--k4", params.k4, "Fourth-order diode coefficient")->capture_default_str();
        cmd->add_option("--r-ant", params.r_ant, "Antenna resistance (ohm)")->capture_default_str();
    }
};

json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    try
    {
        return json::parse(in);
    }
    catch (const json::parse_error &e)
    {
        throw FormatError("", path + ": " + e.what());
    }
}

std::string rows_text(const std::vector<ReportRow> &rows, const std::string &format)
{
    std::ostringstream os;
    if (format == "json")
        os << rows_to_json(rows).dump(2) << '\n';
    else
        write_csv(os, rows);
    return os.str();
}

// ---- design -----------------------------------------------------------------

struct DesignCmd
{
    std::string method = "up";
    double beta = 3.0;
    std::size_t tones = 16;
    std::size_t antennas = 1;
    double power = 1.0;
    std::string channel_file;
    std::string channel_kind = "selective";
    std::size_t taps = 8;
    std::optional<std::uint64_t> seed;
    std::string channel_out;
    OutputOptions out;

    void add_to(CLI::App &app)
    {
        auto *cmd = app.add_subcommand("design", "Design waveform weights and print them as JSON");
        cmd->add_option("--method", method, "up, ass, upmf, mf, maxpapr, smf, miso-upmf, miso-smf")
            ->capture_default_str();
        cmd->add_option("--beta", beta, "SMF exponent")->capture_default_str();
        cmd->add_option("--n", tones, "Number of tones")->capture_default_str()->check(CLI::PositiveNumber);
        cmd->add_option("--m", antennas, "Number of transmit antennas")->capture_default_str()->check(CLI::PositiveNumber);
        cmd->add_option("--p", power, "Transmit power (W)")->capture_default_str();
        cmd->add_option("--channel", channel_file, "Channel JSON; otherwise a channel is drawn with --seed");
        cmd->add_option("--channel-kind", channel_kind, "flat, selective or unit for drawn channels")
            ->capture_default_str();
        cmd->add_option("--taps", taps, "Taps of drawn selective channels")->capture_default_str();
        cmd->add_option("--seed", seed, "Seed for the drawn channel");
        cmd->add_option("--channel-out", channel_out, "Also write the channel used to this file");
        out.add_to(cmd);
        cmd->callback([this] { run(); });
    }

    void run() const
    {
        DesignMethod m;
        m.tag = design_tag_from_string(method);
        m.beta = beta;
        if (!m.needs_channel() && channel_file.empty())
        {
            out.emit(waveform_to_json(design_waveform(m, tones, antennas, power)).dump(2) + "\n");
            return;
        }
        ChannelFreqResponse h;
        if (!channel_file.empty())
            h = channel_from_json(read_json_file(channel_file));
        else if (seed)
        {
            ChannelSpec cs;
            cs.kind = channel_kind_from_string(channel_kind);
            cs.tones = tones;
            cs.antennas = antennas;
            cs.taps = taps;
            RandomStream rng(*seed, 0);
            h = sample_channel(cs, rng);
        }
        else
            throw UsageError("design: --method " + method + " needs --channel FILE or --seed");
        if (!channel_out.empty())
        {
            std::ofstream f(channel_out);
            if (!f)
                throw std::runtime_error("cannot write " + channel_out);
            f << channel_to_json(h).dump(2) << '\n';
        }
        out.emit(waveform_to_json(design_waveform(m, h, power)).dump(2) + "\n");
    }
};

// ---- zdc --------------------------------------------------------------------

struct ZdcCmd
{
    std::string input;
    std::string channel_file;
    bool time_domain = false;
    ParamOptions params;
    OutputOptions out;

    void add_to(CLI::App &app)
    {
        auto *cmd = app.add_subcommand("zdc", "Evaluate z_DC of a serialized tone vector or waveform");
        cmd->add_option("input", input, "Tone vector JSON {tones: [[re, im], ...]} or waveform JSON")->required();
        cmd->add_option("--channel", channel_file, "Channel JSON, required when the input is a waveform");
        cmd->add_flag("--time-domain", time_domain, "Integrate the sampled signal instead of the tone sums");
        params.add_to(cmd);
        out.add_to(cmd);
        cmd->callback([this] { run(); });
    }

    void run() const
    {
        const json doc = read_json_file(input);
        ToneVector tones;
        if (doc.contains("weights"))
        {
            if (channel_file.empty())
                throw UsageError("zdc: a waveform input needs --channel");
            tones = received_tones(waveform_from_json(doc), channel_from_json(read_json_file(channel_file)));
        }
        else
            tones = tone_vector_from_json(doc);

        ZdcTerms z = time_domain ? zdc_terms_time(synthesize(tones), params.params)
                                 : zdc_terms_multisine(tones, params.params);
        std::ostringstream os;
        if (out.format == "json")
            os << json{{"second", z.second}, {"fourth", z.fourth}, {"zdc", z.total()}}.dump(2) << '\n';
        else
            os << "second,fourth,zdc\n"
               << format_double(z.second) << ',' << format_double(z.fourth) << ',' << format_double(z.total())
               << '\n';
        out.emit(os.str());
    }
};

// ---- scaling ----------------------------------------------------------------

struct ScalingCmd
{
    std::string table;
    std::string channel = "ff";
    std::string strategy = "up";
    std::size_t tones = 16;
    std::size_t antennas = 1;
    double epsilon = 1.0;
    double power = 1.0;
    std::string scheme = "cw";
    double l = 2.0;
    std::string kind = "td-cw";
    ParamOptions params;
    OutputOptions out;

    void add_to(CLI::App &app)
    {
        auto *cmd = app.add_subcommand("scaling", "Print closed-form z_DC scaling-law cells");
        cmd->add_option("--table", table, "II (waveforms), III (modulation) or IV (transmit diversity)")
            ->required()
            ->check(CLI::IsMember({"II", "III", "IV", "2", "3", "4"}));
        cmd->add_option("--channel", channel, "ff or fs (waveform table)")->capture_default_str();
        cmd->add_option("--strategy", strategy, "up or upmf (waveform table)")->capture_default_str();
        cmd->add_option("--n", tones, "Tones (tables II and IV multisine)")->capture_default_str();
        cmd->add_option("--m", antennas, "Antennas (tables II and IV)")->capture_default_str();
        cmd->add_option("--epsilon", epsilon, "CSIT correlation (waveform table)")->capture_default_str();
        cmd->add_option("--p", power, "Average received power (W)")->capture_default_str();
        cmd->add_option("--scheme", scheme, "Modulation (tables III and IV td-mod)")->capture_default_str();
        cmd->add_option("--l", l, "Flash parameter")->capture_default_str();
        cmd->add_option("--kind", kind, "cw, td-cw, td-mod or td-multisine (diversity table)")->capture_default_str();
        params.add_to(cmd);
        out.add_to(cmd);
        cmd->callback([this] { run(); });
    }

    void run() const
    {
        ScalingValue v;
        std::string cell;
        if (table == "II" || table == "2")
        {
            ScalingCase c;
            if (channel == "ff" || channel == "flat")
                c.channel = ChannelClass::ff;
            else if (channel == "fs" || channel == "selective")
                c.channel = ChannelClass::fs;
            else
                throw UsageError("scaling: --channel must be ff or fs");
            if (strategy == "up")
                c.strategy = ScalingStrategy::up;
            else if (strategy == "upmf")
                c.strategy = ScalingStrategy::upmf;
            else
                throw UsageError("scaling: --strategy must be up or upmf");
            c.tones = tones;
            c.antennas = antennas;
            c.epsilon = epsilon;
            c.power_w = power;
            c.params = params.params;
            v = scaling_waveform(c);
            cell = strategy + "/" + channel;
        }
        else if (table == "III" || table == "3")
        {
            const auto s = scheme_from_string(scheme, l);
            v = scaling_modulation(s, power, params.params);
            cell = s.label();
        }
        else
        {
            const auto k = td_scaling_kind_from_string(kind);
            const auto s = scheme_from_string(scheme, l);
            v = scaling_td(k, antennas, power, params.params, s, tones);
            cell = kind;
        }

        std::ostringstream os;
        if (out.format == "json")
            os << json{{"cell", cell},
                       {"second", v.second},
                       {"fourth", v.fourth},
                       {"zdc", v.total()},
                       {"asymptotic", v.asymptotic}}
                      .dump(2)
               << '\n';
        else
            os << "cell,second,fourth,zdc,asymptotic\n"
               << cell << ',' << format_double(v.second) << ',' << format_double(v.fourth) << ','
               << format_double(v.total()) << ',' << (v.asymptotic ? "true" : "false") << '\n';
        out.emit(os.str());
    }
};

// ---- montecarlo / mobility / sweep -------------------------------------------

enum class RunShape
{
    any,
    mobility,
    sweep
};

struct RunCmd
{
    std::string name;
    RunShape shape;
    std::string config;
    std::string preset;
    std::uint64_t seed = 0;
    std::optional<std::size_t> trials;
    bool serial = false;
    OutputOptions out;

    RunCmd(std::string n, RunShape s) : name(std::move(n)), shape(s) {}

    void add_to(CLI::App &app, const std::string &help)
    {
        auto *cmd = app.add_subcommand(name, help);
        auto *c = cmd->add_option("--config", config, "Experiment config JSON (see README)");
        auto *p = cmd->add_option("--preset", preset, "Built-in preset name (see `wptsim presets`)");
        c->excludes(p);
        cmd->add_option("--seed", seed, "Base seed; trial i draws from substream (seed, i)")->required();
        cmd->add_option("--trials", trials, "Override the trial count")->check(CLI::PositiveNumber);
        cmd->add_flag("--serial", serial, "Run trials on one thread");
        out.add_to(cmd);
        cmd->callback([this] { run(); });
    }

    void run() const
    {
        std::vector<ExperimentSpec> specs;
        if (!config.empty())
        {
            json doc = read_json_file(config);
            if (doc.is_object())
                doc["seed"] = seed;
            specs.push_back(spec_from_json(doc));
        }
        else if (!preset.empty())
        {
            try
            {
                specs = find_preset(preset).specs(seed);
            }
            catch (const std::invalid_argument &e)
            {
                throw UsageError(e.what());
            }
        }
        else
            throw UsageError(name + ": give --config FILE or --preset NAME");

        std::vector<ReportRow> rows;
        for (auto &spec : specs)
        {
            if (trials)
                spec.trials = *trials;
            if (shape == RunShape::mobility && !spec.mobility)
                throw ConfigError("mobility", name + ": config has no mobility section");
            if (shape == RunShape::sweep && !spec.sweep)
                throw ConfigError("sweep", name + ": config has no sweep section");
            auto part = run_spec(spec, serial ? Execution::serial : Execution::parallel);
            rows.insert(rows.end(), part.begin(), part.end());
        }
        out.emit(rows_text(rows, out.format));
    }
};

// ---- presets ----------------------------------------------------------------

struct PresetsCmd
{
    std::string show;

    void add_to(CLI::App &app)
    {
        auto *cmd = app.add_subcommand("presets", "List built-in experiment presets");
        cmd->add_option("--show", show, "Print the configs of one preset as JSON");
        cmd->callback([this] { run(); });
    }

    void run() const
    {
        if (show.empty())
        {
            for (const auto &p : presets())
                std::cout << p.name << '\t' << p.description << '\n';
            return;
        }
        const Preset *p = nullptr;
        try
        {
            p = &find_preset(show);
        }
        catch (const std::invalid_argument &e)
        {
            throw UsageError(e.what());
        }
        std::cout << json(p->configs).dump(2) << '\n';
    }
};

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"wptsim: wireless power transfer signal design and rectenna simulation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "wptsim 1.0.0");

    DesignCmd design;
    ZdcCmd zdc;
    ScalingCmd scaling;
    RunCmd montecarlo("montecarlo", RunShape::any);
    RunCmd mobility("mobility", RunShape::mobility);
    RunCmd sweep_cmd("sweep", RunShape::sweep);
    PresetsCmd presets_cmd;
    design.add_to(app);
    zdc.add_to(app);
    scaling.add_to(app);
    montecarlo.add_to(app, "Run Monte Carlo experiments (sweeps and mobility sections are honoured)");
    mobility.add_to(app, "Run delayed-CSIT mobility experiments");
    sweep_cmd.add_to(app, "Run a parameter sweep");
    presets_cmd.add_to(app);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::Success &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return exit_usage;
    }
    catch (const UsageError &e)
    {
        std::cerr << "wptsim: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::exception &e)
    {
        std::cerr << "wptsim: error: " << e.what() << '\n';
        return exit_runtime;
    }
    return 0;
}

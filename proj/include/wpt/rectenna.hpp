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

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace wpt
{

using cplx = std::complex<double>;

struct TaylorCoefficients
{
    double k2 = 0.0;
    double k4 = 0.0;
};

/// k_i = i_s / (i! (n v_t)^i) for i = 2, 4.
TaylorCoefficients taylor_coefficients(double saturation_current_a, double ideality, double thermal_voltage_v);

struct DiodeParams
{
    double saturation_current_a = 0.0;
    double ideality = 1.0;
    double thermal_voltage_v = 0.0;
};

/// Truncated diode expansion used by the DC metric z_DC.
/// Defaults are the reference coefficients with a 50 ohm antenna.
struct RectennaParams
{
    double k2 = 0.0034;
    double k4 = 0.3829;
    double r_ant = 50.0;
    std::optional<DiodeParams> diode;

    static RectennaParams from_diode(const DiodeParams &diode, double r_ant);

    // Throws DomainError when a coefficient is non-positive or when the
    // diode parameters disagree with k2/k4 beyond relative 1e-12.
    void validate() const;
};

/// Received multisine: entry n is the complex coefficient of the tone at
/// base_frequency_hz + n * spacing_hz.
struct ToneVector
{
    std::vector<cplx> coefficients;
    double spacing_hz = 1.0;
    double base_frequency_hz = 0.0;

    std::size_t size() const { return coefficients.size(); }
    void validate() const;
};

/// Tone grid with the base frequency placed at N * spacing, which keeps the
/// fundamental period equal to 1/spacing.
ToneVector make_tone_vector(std::vector<cplx> coefficients, double spacing_hz = 1.0);

struct SampledSignal
{
    std::vector<double> samples;
    double sample_rate_hz = 0.0;
};

/// One full period of y(t) = Re{sum_n c_n exp(j 2 pi f_n t)} sampled at
/// no less than eight times the highest tone frequency.
SampledSignal synthesize(const ToneVector &tones);
SampledSignal synthesize_serial(const ToneVector &tones);

struct ZdcTerms
{
    double second = 0.0; // k2 R_ant E{y^2}
    double fourth = 0.0; // k4 R_ant^2 E{y^4}
    double total() const { return second + fourth; }
};

/// z_DC from the DC terms of y^2 and y^4:
///   E{y^2} = 1/2 sum |c_n|^2
///   E{y^4} = 3/8 sum_{n1+n2=n3+n4} c_n1 c_n2 c*_n3 c*_n4
ZdcTerms zdc_terms_multisine(const ToneVector &tones, const RectennaParams &params);
double zdc_multisine_freq(const ToneVector &tones, const RectennaParams &params);

/// Same as zdc_terms_multisine without grid validation, for hot loops that
/// evaluate many coefficient sets on one known-good grid.
ZdcTerms zdc_terms_coefficients(const std::vector<cplx> &coefficients, const RectennaParams &params);

/// Single carrier with complex amplitude c (one symbol or one slot).
ZdcTerms zdc_terms_single_tone(cplx c, const RectennaParams &params);

/// Time average of k2 R y^2 + k4 R^2 y^4 over the samples.
ZdcTerms zdc_terms_time(const SampledSignal &signal, const RectennaParams &params);
double zdc_time_domain(const SampledSignal &signal, const RectennaParams &params);

/// Modulated single carrier with symbol moments m2 = E|m|^2, m4 = E|m|^4:
///   k2 R m2 P + 3/2 k4 R^2 m4 P^2
double zdc_modulated(double m2, double m4, double p_avg_w, const RectennaParams &params);

} // namespace wpt

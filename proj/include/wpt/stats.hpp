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

#include <cstddef>
#include <span>

namespace wpt
{

// Neumaier-compensated accumulator.
class CompensatedSum
{
public:
    void add(double x);
    double value() const { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

double compensated_sum(std::span<const double> values);

struct SampleSummary
{
    double mean = 0.0;
    double ci95 = 0.0; // half-width, normal approximation
    double std_dev = 0.0;
    std::size_t count = 0;
};

/// Mean and 95% confidence half-width of i.i.d. samples.
///
/// Sums are taken about the first sample, so a constant sequence yields
/// its value exactly and a zero-width interval. The result depends only
/// on the sample order, never on how the samples were produced.
SampleSummary summarize(std::span<const double> samples);

struct RatioEstimate
{
    double ratio = 0.0;
    double ci95 = 0.0; // delta-method half-width
};

/// Ratio of means mean(a)/mean(b) for paired samples (a_i, b_i).
RatioEstimate paired_ratio(std::span<const double> numerator, std::span<const double> denominator);

/// Ordinary least-squares slope of y against x.
double least_squares_slope(std::span<const double> x, std::span<const double> y);

} // namespace wpt

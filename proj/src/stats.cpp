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

#include "wpt/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace wpt
{

void CompensatedSum::add(double x)
{
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
        compensation_ += (sum_ - t) + x;
    else
        compensation_ += (x - t) + sum_;
    sum_ = t;
}

double compensated_sum(std::span<const double> values)
{
    CompensatedSum acc;
    for (double v : values)
        acc.add(v);
    return acc.value();
}

SampleSummary summarize(std::span<const double> samples)
{
    SampleSummary out;
    out.count = samples.size();
    if (samples.empty())
        return out;

    const double pivot = samples.front();
    const double n = static_cast<double>(samples.size());

    CompensatedSum shifted;
    for (double v : samples)
        shifted.add(v - pivot);
    const double offset = shifted.value() / n;
    out.mean = pivot + offset;

    if (samples.size() < 2)
        return out;

    CompensatedSum squares;
    for (double v : samples)
    {
        const double d = (v - pivot) - offset;
        squares.add(d * d);
    }
    const double variance = squares.value() / (n - 1.0);
    out.std_dev = std::sqrt(variance);
    out.ci95 = 1.959963984540054 * out.std_dev / std::sqrt(n);
    return out;
}

RatioEstimate paired_ratio(std::span<const double> numerator, std::span<const double> denominator)
{
    if (numerator.size() != denominator.size() || numerator.empty())
        throw std::invalid_argument("paired_ratio: sample sets must be nonempty and of equal length");

    const auto a = summarize(numerator);
    const auto b = summarize(denominator);
    RatioEstimate out;
    if (b.mean == 0.0)
        throw std::domain_error("paired_ratio: denominator mean is zero");
    out.ratio = a.mean / b.mean;
    if (numerator.size() < 2)
        return out;

    // Linearised residuals a_i - R b_i carry the ratio's sampling error.
    CompensatedSum sq;
    for (std::size_t i = 0; i < numerator.size(); ++i)
    {
        const double r = (numerator[i] - a.mean) - out.ratio * (denominator[i] - b.mean);
        sq.add(r * r);
    }
    const double n = static_cast<double>(numerator.size());
    const double var = sq.value() / (n - 1.0);
    out.ci95 = 1.959963984540054 * std::sqrt(var / n) / std::abs(b.mean);
    return out;
}

double least_squares_slope(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("least_squares_slope: need at least two paired points");
    const double xm = compensated_sum(x) / static_cast<double>(x.size());
    const double ym = compensated_sum(y) / static_cast<double>(y.size());
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        sxy += (x[i] - xm) * (y[i] - ym);
        sxx += (x[i] - xm) * (x[i] - xm);
    }
    if (sxx == 0.0)
        throw std::domain_error("least_squares_slope: x values are all equal");
    return sxy / sxx;
}

} // namespace wpt
